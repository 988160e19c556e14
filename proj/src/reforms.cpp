#include "civspec/reforms.hpp"

#include <algorithm>
#include <cmath>

#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/learning.hpp"
#include "civspec/numeric.hpp"
#include "civspec/politics.hpp"

namespace civspec {

Allocation broadening_allocation(double b, const Economy& econ) {
  if (!(b >= 0.0 && b <= 1.0)) fail(ErrorCode::Domain, "broadening share must lie in [0, 1]");
  const std::size_t K = econ.K();
  const double Hq = max_scale(econ.tech, econ.q);
  const double norm = (1.0 - b) + b * Hq;
  std::vector<DesignAtom> atoms;
  if (b < 1.0) {
    for (std::size_t k = 0; k < K; ++k) {
      atoms.push_back({SimplexVector::corner(K, k), (1.0 - b) * econ.q[k] / norm, 1.0});
    }
  }
  if (b > 0.0) atoms.push_back({econ.q, b * Hq / norm, Hq});
  Allocation alloc =
      minimal_integrator_allocation(SpecialistDesign::make(std::move(atoms), econ.tech), econ);
  alloc.broadening = b;
  return alloc;
}

Family broadening_family(const Economy& econ) {
  return [econ](double b) { return FamilyPoint{econ, broadening_allocation(b, econ)}; };
}

double broadening_integrator_mass(double b, const Economy& econ) {
  const ProductiveOptimum po = productive_optimum(econ);
  const double x = econ.theta * (1.0 - b) * fragmentation(econ.q);
  return x / (po.H_hstar + x);
}

const char* to_string(CutoffKind kind) noexcept {
  switch (kind) {
    case CutoffKind::Finite: return "finite";
    case CutoffKind::AlwaysPositive: return "always-positive";
    case CutoffKind::NeverPositive: return "never-positive";
  }
  return "?";
}

BroadeningDerivative broadening_derivative(const Economy& econ) {
  const ProductiveOptimum po = productive_optimum(econ);
  const double Hq = max_scale(econ.tech, econ.q);
  const double broad = std::pow(Hq, econ.civ.p) * coverage(econ.q, econ.civ.u);
  const double corner = dot(econ.q, econ.civ.u);
  const double B_M = system_knowledge(po.allocation.integrator_profile, econ.civ);
  const double m = po.m_star;
  const double B_soc0 = (1.0 - m) * corner + m * B_M;

  BroadeningDerivative out{(1.0 - m) * (broad - B_soc0), m, broad, corner, B_M, B_soc0,
                           CutoffKind::Finite, std::numeric_limits<double>::quiet_NaN()};
  if (broad >= B_M) {
    out.kind = CutoffKind::AlwaysPositive;
  } else if (broad <= corner) {
    out.kind = CutoffKind::NeverPositive;
  } else {
    out.cutoff = po.H_hstar * (broad - corner) / (fragmentation(econ.q) * (B_M - broad));
  }
  return out;
}

ExcessSpecializationReport excess_specialization_check(const Economy& econ,
                                                       const std::vector<double>& b_grid) {
  ExcessSpecializationReport rep{};
  rep.derivative = broadening_derivative(econ);
  const double Hq = max_scale(econ.tech, econ.q);
  rep.p_bar_B = std::log(coverage(econ.q, econ.civ.u) / dot(econ.q, econ.civ.u)) / -std::log(Hq);
  rep.precondition = rep.derivative.broad_knowledge > rep.derivative.corner_knowledge;

  rep.b_grid = b_grid;
  double best = -std::numeric_limits<double>::infinity();
  for (double b : b_grid) {
    const double W = total_welfare(econ, broadening_allocation(b, econ)).W;
    rep.W_curve.push_back(W);
    if (W > best) {
      best = W;
      rep.argmax_b = b;
    }
  }
  DecomposeOptions opts;
  opts.lo = 0.0;
  opts.hi = 1.0;
  rep.at_zero = decompose_along(broadening_family(econ), 0.0, opts);
  rep.improves = rep.at_zero.dW > 0.0;
  if (rep.at_zero.B_prime > 0.0) {
    rep.required_RB_over_R = (rep.at_zero.D_prime - rep.at_zero.productive) / rep.at_zero.B_prime;
  }
  return rep;
}

SimplexVector interface_profile(const Economy& econ, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail(ErrorCode::Domain, "alpha must lie in [0, 1]");
  const ProductiveOptimum po = productive_optimum(econ);
  Vec u(econ.K());
  for (std::size_t k = 0; k < u.size(); ++k) {
    u[k] = (1.0 - alpha) * econ.q[k] + alpha * po.h_star[k];
  }
  return SimplexVector::normalized(u);
}

Family interface_family(const Economy& econ) {
  const ProductiveOptimum po = productive_optimum(econ);
  return [econ, po](double alpha) {
    Vec u(econ.K());
    for (std::size_t k = 0; k < u.size(); ++k) {
      u[k] = (1.0 - alpha) * econ.q[k] + alpha * po.h_star[k];
    }
    return FamilyPoint{econ.with_civic_profile(SimplexVector::normalized(u)), po.allocation};
  };
}

namespace {

struct InterfaceSlopes {
  double dB;
  double dW;
  double dD;
};

InterfaceSlopes interface_slopes(const Family& fam, double alpha) {
  DecomposeOptions opts;
  opts.lo = 0.0;
  opts.hi = 1.0;
  const Decomposition d = decompose_along(fam, alpha, opts);
  return InterfaceSlopes{d.B_prime, d.dW, d.D_prime};
}

}  // namespace

InterfaceStatics interface_statics(const Economy& econ, const std::vector<double>& alpha_grid,
                                   bool search_threshold) {
  const ProductiveOptimum po = productive_optimum(econ);
  const auto& q = econ.q;
  const double D = fragmentation(q);
  double sq2 = 0.0;
  double sq3 = 0.0;
  for (double v : q) {
    sq2 += v * v;
    sq3 += v * v * v;
  }
  InterfaceStatics out{};
  out.B_S_prime = (sq2 * sq2 - sq3) / D;
  out.B_M_prime = std::pow(po.H_hstar, econ.civ.p) * (1.0 - coverage(po.h_star, q));
  out.uniform_q = q.max() - q.min() <= 1e-12;

  const Family fam = interface_family(econ);
  auto groups = [&](double alpha) {
    const FamilyPoint fp = fam(alpha);
    return group_knowledge(fp.alloc, fp.econ);
  };
  const double h = 1e-5;
  out.B_S_prime_fd = (groups(0.5 + h).B_S - groups(0.5 - h).B_S) / (2.0 * h);
  out.B_M_prime_fd = (groups(0.5 + h).B_M - groups(0.5 - h).B_M) / (2.0 * h);

  const double m = po.m_star;
  const double dB_closed = (1.0 - m) * out.B_S_prime + m * out.B_M_prime;
  for (double alpha : alpha_grid) {
    const FamilyPoint fp = fam(alpha);
    const WelfareReport w = total_welfare(fp.econ, fp.alloc);
    const InterfaceSlopes s = interface_slopes(fam, alpha);
    out.rows.push_back(InterfaceRow{alpha, w.outcome.B_S, w.outcome.B_M, w.outcome.B_soc, w.W,
                                    dB_closed, s.dW, s.dD});
  }

  if (search_threshold && !out.uniform_q) {
    const double theta_bar = learning_constants(econ.tech).theta_bar;
    auto holds = [&](double theta) {
      const Economy e = econ.with_theta(theta);
      const double mt = productive_optimum(e).m_star;
      if (!((1.0 - mt) * out.B_S_prime + mt * out.B_M_prime < 0.0)) return false;
      const Family f = interface_family(e);
      return std::all_of(alpha_grid.begin(), alpha_grid.end(),
                         [&](double a) { return interface_slopes(f, a).dW < 0.0; });
    };
    double lo = theta_bar * 1e-6;
    double hi = theta_bar * (1.0 - 1e-9);
    if (holds(lo)) {
      if (holds(hi)) {
        out.theta_small = hi;
      } else {
        for (int i = 0; i < 50; ++i) {
          const double mid = 0.5 * (lo + hi);
          (holds(mid) ? lo : hi) = mid;
        }
        out.theta_small = lo;
      }
    }
  }
  return out;
}

DispersionOrder dispersion_order(const Economy& econ, const std::vector<double>& theta_grid,
                                 const std::vector<double>& alpha_grid) {
  DispersionOrder out{};
  out.M = 0.0;
  for (double theta : theta_grid) {
    const Economy e = econ.with_theta(theta);
    const double m = productive_optimum(e).m_star;
    const Family f = interface_family(e);
    double slope = 0.0;
    for (double a : alpha_grid) slope = std::max(slope, std::abs(interface_slopes(f, a).dD));
    out.theta.push_back(theta);
    out.m.push_back(m);
    out.max_slope.push_back(slope);
    out.M = std::max(out.M, slope / m);
  }
  return out;
}

ThetaStatics theta_statics(const Economy& econ, const std::vector<double>& theta_grid) {
  ThetaStatics out{};
  out.m_increasing = out.Y_decreasing = out.B_soc_increasing = true;
  bool W_up = true;
  bool W_down = true;
  out.max_dm_error = 0.0;
  const double theta_bar = learning_constants(econ.tech).theta_bar;
  const double D = fragmentation(econ.q);

  for (double theta : theta_grid) {
    const Economy e = econ.with_theta(theta);
    const ProductiveOptimum po = productive_optimum(e);
    const WelfareReport w = total_welfare(e, po.allocation);
    const double H = po.H_hstar;
    const double dm_closed = D * H / ((H + theta * D) * (H + theta * D));
    const double step = 1e-4 * theta;
    const double dm_fd = numeric::derivative_in_domain(
        [&](double t) { return productive_optimum(econ.with_theta(t)).m_star; }, theta, step,
        step, theta_bar * (1.0 - 1e-12));
    out.max_dm_error = std::max(out.max_dm_error, std::abs(dm_closed - dm_fd));

    const ThetaRow row{theta, po.m_star, po.Y_star, w.outcome.B_soc, w.W, dm_closed, dm_fd};
    if (!out.rows.empty()) {
      const ThetaRow& prev = out.rows.back();
      out.m_increasing = out.m_increasing && row.m - prev.m > kStrictMargin;
      out.Y_decreasing = out.Y_decreasing && prev.Y - row.Y > kStrictMargin;
      out.B_soc_increasing = out.B_soc_increasing && row.B_soc - prev.B_soc > kStrictMargin;
      W_up = W_up && row.W >= prev.W;
      W_down = W_down && row.W <= prev.W;
    }
    out.rows.push_back(row);
  }
  out.W_monotone = W_up || W_down;
  return out;
}

std::vector<double> default_theta_grid(const Economy& econ, std::size_t n) {
  const double theta_bar = learning_constants(econ.tech).theta_bar;
  std::vector<double> grid;
  for (std::size_t i = 1; i <= n; ++i) {
    grid.push_back(theta_bar * static_cast<double>(i) / static_cast<double>(n + 1));
  }
  return grid;
}

std::vector<double> linear_grid(double lo, double hi, std::size_t points) {
  if (points == 0) fail(ErrorCode::Domain, "grid needs at least one point");
  if (points == 1) return {lo};
  std::vector<double> g(points);
  for (std::size_t i = 0; i < points; ++i) {
    g[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1);
  }
  g.back() = hi;
  return g;
}

}  // namespace civspec
