// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "civspec/cli/csv.hpp"
#include "civspec/cli/scenario.hpp"
#include "civspec/cli/verify.hpp"
#include "civspec/competitive.hpp"
#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/learning.hpp"
#include "civspec/numeric.hpp"
#include "civspec/politics.hpp"
#include "civspec/production.hpp"
#include "civspec/reforms.hpp"
#include "civspec/sampling.hpp"
#include "civspec/welfare.hpp"

using namespace civspec;
using civspec::cli::format_sci;

namespace {

const std::string kScenarios = CIVSPEC_SCENARIO_DIR;

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, const std::function<Outcome()>& body) {
  Outcome o{false, ""};
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  if (!o.ok) ++failures;
  std::printf("%s  %2d  %-28s %s\n", o.ok ? "PASS" : "FAIL", id, name, o.detail.c_str());
  std::fflush(stdout);
}

std::string num(double v) { return format_sci(v, 3); }

Economy scenario(const std::string& name) { return cli::load_scenario(kScenarios + "/" + name).econ; }

LearningTech random_tech(Rng& rng) {
  if (rng() % 2 == 0) return LearningTech::rational(random_uniform(rng, 0.2, 3.0));
  return LearningTech::exponential(random_uniform(rng, 0.3, 3.0));
}

double bsoc_slope_fd(const Economy& e) {
  return numeric::one_sided_difference(
      [&](double b) { return group_knowledge(broadening_allocation(b, e), e).B_soc; }, 0.0, 1e-5);
}

}  // namespace

int main() {
  Rng rng(20261017);

  criterion(1, "coverage identity", [&] {
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double M = random_uniform(rng, 0.0, 2.0);
      const auto a = KnowledgeBundle::scaled(random_simplex(rng, 3), M);
      const auto b = KnowledgeBundle::scaled(random_simplex(rng, 3), M);
      worst = std::max(worst, std::abs(coverage(a, b) - (M - 0.5 * l1_distance(a, b))));
    }
    return Outcome{worst <= 1e-12, "1000 pairs, max error " + num(worst) + " (tol 1e-12)"};
  });

  criterion(2, "frontier bounds", [&] {
    const auto tech = LearningTech::rational(1.0);
    const auto lc = learning_constants(tech);
    bool bounds = true;
    for (int i = 0; i < 10000; ++i) {
      const double H = max_scale(tech, random_simplex(rng, 3));
      bounds = bounds && H >= 1.0 / lc.ell_bar && H <= 1.0;
    }
    double corner = 0.0;
    for (std::size_t k = 0; k < 3; ++k) {
      corner = std::max(corner, std::abs(max_scale(tech, SimplexVector::corner(3, k)) - 1.0));
    }
    double lip = -1e300;
    for (int i = 0; i < 1000; ++i) {
      const auto a = random_simplex(rng, 3);
      const auto b = random_simplex(rng, 3);
      lip = std::max(lip, std::abs(max_scale(tech, a) - max_scale(tech, b)) -
                              lc.ell_bar / lc.ell_under * l1_distance(a, b));
    }
    return Outcome{bounds && corner <= 1e-10 && lip <= 0.0,
                   std::string("1e4 draws in [1/l_bar, 1]: ") + (bounds ? "yes" : "no") +
                       ", corner error " + num(corner) + ", worst Lipschitz slack " + num(lip)};
  });

  criterion(3, "integrator optimality", [&] {
    const auto tech = LearningTech::rational(1.0);
    double above = -1e300;
    double below = 1e300;
    double eq = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const auto h = random_simplex(rng, 3);
      const auto pi = random_simplex(rng, 3);
      const auto s = KnowledgeBundle::scaled(pi, random_uniform(rng, 0.0, 1.0) * max_scale(tech, pi));
      const double H = max_scale(tech, h);
      const double J = integrator_capacity(s, h);
      above = std::max(above, J - H);
      below = std::min(below, H - J);
      eq = std::max(eq, std::abs(integrator_capacity(KnowledgeBundle::scaled(h, H), h) - H));
    }
    return Outcome{above <= 1e-10 && eq <= 1e-8 && below > 1e-8,
                   "max J - H(h) " + num(above) + ", min gap off the optimum " + num(below) +
                       ", equality error " + num(eq)};
  });

  criterion(4, "productive optimum formulas", [&] {
    double worst = 0.0;
    double max_m = 0.0;
    for (int i = 0; i < 50; ++i) {
      Economy e = scenario("default.cfg");
      e.tech = random_tech(rng);
      e.q = random_interior_simplex(rng, 3, 0.02);
      e.theta = random_uniform(rng, 0.01, 0.99) * learning_constants(e.tech).theta_bar;
      const auto po = productive_optimum(e);
      const double D = fragmentation(e.q);
      const double H = max_scale(e.tech, po.h_star);
      for (std::size_t k = 0; k < 3; ++k) {
        worst = std::max(worst, std::abs(po.h_star[k] - e.q[k] * (1 - e.q[k]) / D));
      }
      worst = std::max({worst, std::abs(po.m_star - e.theta * D / (H + e.theta * D)),
                        std::abs(po.Y_star - e.V * H / (H + e.theta * D)),
                        std::abs(output_of(po.allocation, e) - po.Y_star),
                        std::abs(coordination_slack(po.allocation, e))});
      for (const auto& a : po.allocation.design.atoms()) {
        worst = std::max(worst, std::abs(learning_load(e.tech, KnowledgeBundle::scaled(a.direction, a.scale)) - 1.0));
      }
      worst = std::max(worst, std::abs(learning_load(e.tech, po.allocation.integrator_profile) - 1.0));
      max_m = std::max(max_m, po.m_star);
    }
    return Outcome{worst <= 1e-10 && max_m < 1.0 / 3.0,
                   "50 economies, max formula/feasibility error " + num(worst) + ", max m* " + num(max_m)};
  });

  criterion(5, "bang-bang alignment oracle", [&] {
    const Economy e = scenario("default.cfg");
    const auto po = productive_optimum(e);
    BruteForceOptions opts;
    const auto t0 = std::chrono::steady_clock::now();
    const auto bf = brute_force_design(e, opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double best_d = 1e300;
    SimplexVector nearest = SimplexVector::uniform(3);
    for (const auto& x : simplex_grid(3, opts.resolution)) {
      const double d = l1_distance(x, e.q);
      if (d < best_d - 1e-15) {
        best_d = d;
        nearest = x;
      }
    }
    const double gap = std::abs(po.Y_star - bf.Y);
    return Outcome{bf.design.all_corners() && bf.x == nearest && gap <= bf.grid_tolerance && secs <= 30.0,
                   std::to_string(bf.evaluated) + " designs, corners " +
                       (bf.design.all_corners() ? "yes" : "no") + ", |Y* - Y_best| " + num(gap) +
                       " <= grid tolerance " + num(bf.grid_tolerance)};
  });

  criterion(6, "integrator civic advantage", [&] {
    int tested = 0;
    int held = 0;
    for (int attempt = 0; attempt < 100000 && tested < 100; ++attempt) {
      Economy e = scenario("default.cfg");
      e.q = random_interior_simplex(rng, 3, 0.02);
      const auto u = random_interior_simplex(rng, 3, 0.02);
      e.civ = CivicParams::make(u, random_uniform(rng, 0.01, 3.0));
      if (!check_diffuse(e.civ, e.tech).holds) continue;
      ++tested;
      const auto gk = group_knowledge(productive_optimum(e).allocation, e);
      if (gk.B_M > gk.B_S) ++held;
    }
    return Outcome{tested == 100 && held == tested,
                   std::to_string(held) + "/" + std::to_string(tested) + " economies with B_M > B_S"};
  });

  criterion(7, "political equilibrium", [&] {
    const Economy e = scenario("default.cfg");
    const auto po = productive_optimum(e);
    const auto game = voting_game(e, po.allocation);
    const auto eq = political_equilibrium(e, po.allocation);
    double dist = 0.0;
    bool converged = true;
    for (int i = 0; i < 10; ++i) {
      const Platform start{random_uniform(rng, 0.1, 2.0), random_uniform(rng, 0.05, 0.95)};
      const auto fp = iterate_best_response(start, game);
      converged = converged && fp.converged;
      const auto br = best_response(fp.platform, game);
      dist = std::max({dist, std::abs(fp.platform.e - eq.e_pol), std::abs(fp.platform.z - eq.z_pol),
                       std::abs(br.t_S - eq.t_S), std::abs(br.t_M - eq.t_M)});
    }
    const auto k = kkt_residuals(eq, e.gov);
    const double kkt = std::max({k.services_S, k.services_M, k.governance});
    int agree = 0;
    for (int i = 0; i < 100; ++i) {
      Economy r = e;
      r.q = random_interior_simplex(rng, 3, 0.02);
      r.civ = CivicParams::make(random_interior_simplex(rng, 3, 0.02), random_uniform(rng, 0.1, 3.0));
      r.theta = random_uniform(rng, 0.05, 0.95) * learning_constants(r.tech).theta_bar;
      const auto o = political_equilibrium(r, productive_optimum(r).allocation);
      if ((o.z_pol > o.m) == (o.B_M > o.B_S)) ++agree;
    }
    return Outcome{converged && dist <= 1e-6 && kkt <= 1e-9 && agree == 100,
                   "10 starts, max distance " + num(dist) + ", KKT " + num(kkt) + ", sign pattern " +
                       std::to_string(agree) + "/100"};
  });

  criterion(8, "welfare representation", [&] {
    const auto gov = scenario("default.cfg").gov;
    double worst = 0.0;
    bool disp = true;
    for (int i = 0; i < 1000; ++i) {
      const double m = random_uniform(rng, 0.01, 0.9);
      const double BS = random_uniform(rng, 0.05, 0.95);
      const double BM = i % 10 == 0 ? BS : random_uniform(rng, 0.05, 0.95);
      const auto w = welfare_from_outcome(
          political_equilibrium(gov, random_uniform(rng, 0.2, 2.0), m, BS, BM), gov.tau);
      worst = std::max(worst, std::abs(w.service_welfare - (std::log(w.R) - w.dispersion)));
      disp = disp && w.dispersion >= 0.0;
      if (std::abs(BS - BM) <= 1e-8) {
        disp = disp && w.dispersion <= 1e-8;
      } else {
        disp = disp && w.dispersion > 0.0;
      }
    }
    return Outcome{worst <= 1e-10 && disp, "1000 inputs, max |V - (log R - D)| " + num(worst)};
  });

  criterion(9, "welfare decomposition", [&] {
    DecomposeOptions o;
    o.step = 1e-5;
    o.lo = 0.0;
    o.hi = 1.0;
    double worst = 0.0;
    for (const char* name : {"default.cfg", "broadening_gain.cfg"}) {
      const Economy e = scenario(name);
      for (double t : {0.0, 0.3, 0.6}) {
        worst = std::max(worst, decompose_along(broadening_family(e), t, o).residual);
      }
      for (double t : {0.0, 0.5, 1.0}) {
        worst = std::max(worst, decompose_along(interface_family(e), t, o).residual);
      }
    }
    return Outcome{worst <= 1e-4, "max |terms - dW| " + num(worst) + " (tol 1e-4)"};
  });

  criterion(10, "broadening derivative", [&] {
    double fd_gap = 0.0;
    for (const char* name : {"default.cfg", "broadening_gain.cfg", "broadening_cutoff.cfg"}) {
      const Economy e = scenario(name);
      fd_gap = std::max(fd_gap, std::abs(broadening_derivative(e).derivative - bsoc_slope_fd(e)));
    }
    const Economy e = scenario("broadening_cutoff.cfg");
    const auto bd = broadening_derivative(e);
    const double tb = learning_constants(e.tech).theta_bar;
    if (bd.kind != CutoffKind::Finite || !(bd.cutoff < tb)) {
      return Outcome{false, "cutoff scenario has no cutoff inside (0, theta_bar)"};
    }
    double lo = tb * 1e-6;
    double hi = tb * (1 - 1e-9);
    const bool bracket = bsoc_slope_fd(e.with_theta(lo)) > 0.0 && bsoc_slope_fd(e.with_theta(hi)) < 0.0;
    for (int i = 0; i < 80 && bracket; ++i) {
      const double mid = 0.5 * (lo + hi);
      (bsoc_slope_fd(e.with_theta(mid)) > 0.0 ? lo : hi) = mid;
    }
    const double flip_gap = std::abs(0.5 * (lo + hi) - bd.cutoff);
    return Outcome{fd_gap <= 1e-6 && bracket && flip_gap <= 1e-6,
                   "max FD gap " + num(fd_gap) + ", flip at " + num(0.5 * (lo + hi)) + " vs cutoff " +
                       num(bd.cutoff) + " (gap " + num(flip_gap) + ")"};
  });

  criterion(11, "interface statics", [&] {
    const auto alpha = linear_grid(0.0, 1.0, 11);
    double gap = 0.0;
    bool signs = true;
    for (const char* name : {"default.cfg", "uniform_q.cfg", "broadening_gain.cfg"}) {
      const auto is = interface_statics(scenario(name), alpha, false);
      gap = std::max({gap, std::abs(is.B_S_prime - is.B_S_prime_fd), std::abs(is.B_M_prime - is.B_M_prime_fd)});
      signs = signs && is.B_S_prime <= 0.0 && is.B_M_prime >= 0.0;
    }
    const Economy e = scenario("default.cfg");
    const auto is = interface_statics(e, alpha, true);
    bool below = is.theta_small.has_value() && *is.theta_small > 0.0;
    if (below) {
      for (double f : {0.5, 0.99}) {
        for (const auto& r : interface_statics(e.with_theta(*is.theta_small * f), alpha, false).rows) {
          below = below && r.dBsoc_dalpha < 0.0 && r.dW_dalpha < 0.0;
        }
      }
    }
    return Outcome{gap <= 1e-8 && signs && below,
                   "max FD gap " + num(gap) + ", theta_small " +
                       (is.theta_small ? num(*is.theta_small) : std::string("none"))};
  });

  criterion(12, "theta statics", [&] {
    const Economy e = scenario("default.cfg");
    const auto ts = theta_statics(e, default_theta_grid(e, 50));
    return Outcome{ts.rows.size() == 50 && ts.m_increasing && ts.Y_decreasing && ts.B_soc_increasing &&
                       ts.max_dm_error <= 1e-8,
                   "50 points, strict monotonicity " +
                       std::string(ts.m_increasing && ts.Y_decreasing && ts.B_soc_increasing ? "yes" : "no") +
                       ", dm/dtheta gap " + num(ts.max_dm_error)};
  });

  criterion(13, "competitive support", [&] {
    const auto sc = cli::load_scenario(kScenarios + "/competitive.cfg");
    const auto w = support_wages(sc.econ);
    const auto rb = ratio_bound(sc.econ);
    const auto d = no_deviation_check(w, sc.econ, sc.oracle.design);
    const double r = w.w_M / w.w_S;
    return Outcome{w.indifference_residual <= 1e-10 && w.zero_profit_residual <= 1e-10 &&
                       rb.uniqueness_holds && d.worst_margin >= -1e-9 && r <= rb.r_bar,
                   "residuals " + num(w.indifference_residual) + ", " + num(w.zero_profit_residual) +
                       "; uniqueness " + (rb.uniqueness_holds ? "holds" : "fails") + ", worst margin " +
                       num(d.worst_margin) + ", r " + num(r) + " <= r_bar " + num(rb.r_bar)};
  });

  criterion(14, "determinism", [&] {
    const auto sc = cli::load_scenario(kScenarios + "/default.cfg");
    const std::string a = cli::run_verify(sc, {42, false}).render();
    const std::string b = cli::run_verify(sc, {42, false}).render();
    return Outcome{a == b, "two verify runs with seed 42: " + std::to_string(a.size()) + " bytes, " +
                               (a == b ? "identical" : "different")};
  });

  std::printf("%s\n", failures == 0 ? "all acceptance criteria passed"
                                     : (std::to_string(failures) + " criteria failed").c_str());
  return failures == 0 ? 0 : 1;
}
