#include "civspec/welfare.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/learning.hpp"
#include "civspec/numeric.hpp"

namespace civspec {

double dispersion(double B_S, double B_M, double m) {
  if (!(B_S > 0.0) || !(B_M > 0.0)) fail(ErrorCode::Domain, "dispersion needs B_S, B_M > 0");
  if (!(m >= 0.0 && m <= 1.0)) fail(ErrorCode::Domain, "dispersion needs m in [0, 1]");
  const double B_soc = (1.0 - m) * B_S + m * B_M;
  return std::max(0.0, std::log(B_soc) - ((1.0 - m) * std::log(B_S) + m * std::log(B_M)));
}

double service_welfare(const PoliticalOutcome& out) {
  if (!(out.t_S > 0.0) || !(out.t_M > 0.0)) {
    fail(ErrorCode::NonPositiveService, "service welfare needs t_S, t_M > 0");
  }
  return (1.0 - out.m) * std::log(out.t_S) + out.m * std::log(out.t_M);
}

WelfareReport welfare_from_outcome(const PoliticalOutcome& out, double tau) {
  const double V = service_welfare(out);
  return WelfareReport{out.Y, V, dispersion(out.B_S, out.B_M, out.m), (1.0 - tau) * out.Y + V,
                       out.R, out};
}

WelfareReport total_welfare(const Economy& econ, const Allocation& alloc) {
  return welfare_from_outcome(political_equilibrium(econ, alloc), econ.gov.tau);
}

Decomposition decompose_along(const Family& family, double at, const DecomposeOptions& opts) {
  if (!(opts.step > 0.0)) fail(ErrorCode::Domain, "decompose_along: step must be positive");
  if (at < opts.lo || at > opts.hi) fail(ErrorCode::Domain, "decompose_along: point outside domain");

  std::map<double, WelfareReport> cache;
  auto report = [&](double b) -> const WelfareReport& {
    auto it = cache.find(b);
    if (it == cache.end()) {
      const FamilyPoint fp = family(b);
      it = cache.emplace(b, total_welfare(fp.econ, fp.alloc)).first;
    }
    return it->second;
  };
  auto d = [&](auto field) {
    return numeric::derivative_in_domain([&](double b) { return field(report(b)); }, at,
                                         opts.step, opts.lo, opts.hi);
  };

  Decomposition out{};
  out.at = at;
  out.Y_prime = d([](const WelfareReport& r) { return r.Y; });
  out.B_prime = d([](const WelfareReport& r) { return r.outcome.B_soc; });
  out.D_prime = d([](const WelfareReport& r) { return r.dispersion; });
  out.dW = d([](const WelfareReport& r) { return r.W; });

  const FamilyPoint here = family(at);
  const WelfareReport& base = report(at);
  const ResourceSensitivity rs =
      resource_sensitivity(here.econ.gov, base.Y, base.outcome.B_soc);
  out.RY_over_R = rs.RY_over_R;
  out.RB_over_R = rs.RB_over_R;
  out.productive = ((1.0 - here.econ.gov.tau) + rs.RY_over_R) * out.Y_prime;
  out.governance = rs.RB_over_R * out.B_prime;
  out.targeting = -out.D_prime;
  out.sum = out.productive + out.governance + out.targeting;
  out.residual = std::abs(out.sum - out.dW);
  out.step_warning = out.residual > opts.tolerance;
  return out;
}

CivicBenchmark civic_benchmark(const CivicParams& civ, const LearningTech& tech,
                               std::size_t resolution) {
  const std::size_t K = civ.u.size();
  auto value = [&](std::span<const double> pi) {
    return std::pow(max_scale(tech, pi), civ.p) * coverage(pi, civ.u);
  };
  Vec best;
  double best_val = -1.0;
  for (const auto& pi : simplex_grid(K, resolution)) {
    const double v = value(pi);
    if (v > best_val) {
      best_val = v;
      best.assign(pi.begin(), pi.end());
    }
  }
  for (double step = 1.0 / static_cast<double>(resolution); step > 1e-12; step *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i = 0; i < K; ++i) {
        for (std::size_t j = 0; j < K; ++j) {
          if (i == j || best[i] < step) continue;
          Vec trial = best;
          trial[i] -= step;
          trial[j] += step;
          const double v = value(trial);
          if (v > best_val) {
            best_val = v;
            best = std::move(trial);
            improved = true;
          }
        }
      }
    }
  }
  return CivicBenchmark{best_val, SimplexVector::normalized(best)};
}

}  // namespace civspec
