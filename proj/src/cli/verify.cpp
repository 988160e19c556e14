#include "civspec/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "civspec/cli/csv.hpp"
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

namespace civspec::cli {

const char* to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIP";
    case CheckStatus::Info: return "INFO";
  }
  return "?";
}

bool VerifyReport::all_passed() const { return count(CheckStatus::Fail) == 0; }

std::size_t VerifyReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckResult& c) { return c.status == s; }));
}

std::string VerifyReport::render() const {
  std::ostringstream os;
  os << "civspec verify report\n";
  os << "scenario: " << scenario << "\n";
  os << "seed: " << seed << "\n";
  os << "strict: " << (strict ? "yes" : "no") << "\n\n";
  std::size_t width = 0;
  for (const auto& c : checks) width = std::max(width, c.anchor.size());
  for (const auto& c : checks) {
    os << to_string(c.status) << "  " << c.anchor << std::string(width - c.anchor.size() + 2, ' ')
       << c.detail << "\n";
  }
  os << "\npassed " << count(CheckStatus::Pass) << ", failed " << count(CheckStatus::Fail)
     << ", skipped " << count(CheckStatus::Skipped) << ", info " << count(CheckStatus::Info)
     << "\n";
  return os.str();
}

namespace {

struct Tolerances {
  double exact = 1e-12;
  double frontier = 1e-10;
  double equality = 1e-8;
  double theorem = 1e-10;
  double platform = 1e-6;
  double kkt = 1e-9;
  double welfare = 1e-10;
  double decomposition = 1e-4;
  double broadening_fd = 1e-6;
  double flip = 1e-6;
  double interface_fd = 1e-8;
  double dm = 1e-8;
  double wage = 1e-10;
  double deviation = 1e-9;

  void tighten(double f) {
    for (double* t : {&exact, &frontier, &equality, &theorem, &platform, &kkt, &welfare,
                      &decomposition, &broadening_fd, &flip, &interface_fd, &dm, &wage,
                      &deviation}) {
      *t *= f;
    }
  }
};

std::string num(double v) { return format_sci(v, 3); }

class Suite {
 public:
  Suite(const Scenario& sc, const VerifyOptions& opts)
      : sc_(sc), econ_(sc.econ), rng_(opts.seed), lc_(learning_constants(sc.econ.tech)) {
    if (opts.strict) tol_.tighten(0.1);
  }

  std::vector<CheckResult> run() {
    learning_checks();
    knowledge_checks();
    production_checks();
    politics_checks();
    welfare_checks();
    reform_checks();
    competitive_checks();
    return std::move(results_);
  }

 private:
  void add(const std::string& anchor, bool ok, const std::string& detail) {
    results_.push_back({anchor, ok ? CheckStatus::Pass : CheckStatus::Fail, detail});
  }
  void skip(const std::string& anchor, const std::string& why) {
    results_.push_back({anchor, CheckStatus::Skipped, why});
  }
  void info(const std::string& anchor, const std::string& detail) {
    results_.push_back({anchor, CheckStatus::Info, detail});
  }

  void guarded(const std::string& anchor, const std::function<void()>& body) {
    try {
      body();
    } catch (const Error& e) {
      if (e.code() == ErrorCode::HypothesisViolated) {
        skip(anchor, std::string("hypothesis not met, skipped: ") + e.what());
      } else {
        add(anchor, false, std::string("error [") + civspec::to_string(e.code()) + "]: " + e.what());
      }
    }
  }

  bool theorem_regime() const { return econ_.theta < lc_.theta_bar; }

  std::size_t samples() const { return sc_.oracle.samples; }

  // learning ---------------------------------------------------------------

  void learning_checks() {
    const auto& tech = econ_.tech;
    guarded("learning-normalization", [&] {
      bool ok = tech.cost(0.0) == 0.0 && tech.cost(1.0) == 1.0;
      const int n = 1000;
      for (int i = 0; i <= n; ++i) {
        const double s = static_cast<double>(i) / n;
        ok = ok && tech.slope(s) > 0.0;
        if (i > 0 && i < n) {
          const double h = 1.0 / n;
          ok = ok && tech.cost(s + h) - 2.0 * tech.cost(s) + tech.cost(s - h) < 0.0;
        }
      }
      add("learning-normalization", ok, "l(0) = 0, l(1) = 1, increasing and concave on a 1e3 grid");
    });
    guarded("learning-constants", [&] {
      const double L = lc_.ell_bar + 2.0 * std::pow(lc_.ell_bar, 3) / lc_.ell_under;
      const double tb = std::min(lc_.c_ell / L, 1.0 / (2.0 * L));
      const double kappa = kappa_estimate(tech, econ_.K(), econ_.K() <= 3 ? 60 : 12);
      const bool ok = lc_.c_ell > 0.0 && lc_.theta_bar > 0.0 && lc_.ell_under <= lc_.ell_bar &&
                      L == lc_.L_Gamma && tb == lc_.theta_bar && kappa >= lc_.c_ell - tol_.exact;
      add("learning-constants", ok,
          "c_ell " + num(lc_.c_ell) + " (bound) <= kappa grid estimate " + num(kappa) +
              ", L_Gamma " + num(lc_.L_Gamma) + ", theta_bar " + num(lc_.theta_bar));
    });
    guarded("frontier-bounds", [&] {
      const std::size_t K = econ_.K();
      double worst = 0.0;
      bool ok = true;
      for (std::size_t i = 0; i < samples(); ++i) {
        const SimplexVector pi = random_simplex(rng_, K);
        const double H = max_scale(tech, pi);
        ok = ok && H >= 1.0 / lc_.ell_bar - tol_.frontier && H <= 1.0 + tol_.frontier;
        if (pi.max() <= 1.0 - 1e-9) ok = ok && H < 1.0;
        const double resid = std::abs(learning_load(tech, KnowledgeBundle::scaled(pi, H)) - 1.0);
        worst = std::max(worst, resid);
      }
      for (std::size_t k = 0; k < K; ++k) {
        ok = ok && std::abs(max_scale(tech, SimplexVector::corner(K, k)) - 1.0) <= tol_.frontier;
      }
      ok = ok && worst <= tol_.exact;
      add("frontier-bounds", ok,
          std::to_string(samples()) + " draws in [1/l_bar, 1]; max frontier residual " + num(worst));
    });
    guarded("frontier-lipschitz", [&] {
      const double L = lc_.ell_bar / lc_.ell_under;
      double worst = -1e300;
      for (std::size_t i = 0; i < samples(); ++i) {
        const SimplexVector a = random_simplex(rng_, econ_.K());
        const SimplexVector b = random_simplex(rng_, econ_.K());
        const double gap = std::abs(max_scale(tech, a) - max_scale(tech, b)) - L * l1_distance(a, b);
        worst = std::max(worst, gap);
      }
      add("frontier-lipschitz", worst <= tol_.exact,
          "max |dH| - (l_bar/l_under)|dpi|_1 = " + num(worst));
    });
    guarded("concavity-gap", [&] {
      double worst = 1e300;
      for (std::size_t i = 0; i < samples(); ++i) {
        const SimplexVector pi = random_simplex(rng_, econ_.K());
        worst = std::min(worst, lambda_index(tech, pi) - 1.0 - lc_.c_ell * fragmentation(pi));
      }
      add("concavity-gap", worst >= -tol_.exact, "min lambda - 1 - c_ell D = " + num(worst));
    });
    guarded("gamma-lipschitz", [&] {
      double worst = -1e300;
      for (std::size_t i = 0; i < samples(); ++i) {
        const KnowledgeBundle a = KnowledgeBundle::scaled(random_simplex(rng_, econ_.K()),
                                                          random_uniform(rng_, 0.0, 2.0));
        const KnowledgeBundle b = KnowledgeBundle::scaled(random_simplex(rng_, econ_.K()),
                                                          random_uniform(rng_, 0.0, 2.0));
        worst = std::max(worst, std::abs(gamma_index(tech, a) - gamma_index(tech, b)) -
                                    lc_.L_Gamma * l1_distance(a, b));
      }
      add("gamma-lipschitz", worst <= tol_.exact,
          "max |dGamma| - L_Gamma |dz|_1 = " + num(worst));
    });
  }

  // knowledge --------------------------------------------------------------

  void knowledge_checks() {
    guarded("coverage-distance-identity", [&] {
      double worst = 0.0;
      bool sym = true;
      for (std::size_t i = 0; i < samples(); ++i) {
        const double M = random_uniform(rng_, 0.0, 2.0);
        const KnowledgeBundle a = KnowledgeBundle::scaled(random_simplex(rng_, econ_.K()), M);
        const KnowledgeBundle b = KnowledgeBundle::scaled(random_simplex(rng_, econ_.K()), M);
        worst = std::max(worst, std::abs(coverage(a, b) - (M - 0.5 * l1_distance(a, b))));
        sym = sym && coverage(a, b) == coverage(b, a) && coverage(a, b) <= M + tol_.exact;
      }
      add("coverage-distance-identity", sym && worst <= tol_.exact,
          "max |C(a,b) - (M - |a-b|_1/2)| = " + num(worst));
    });
    guarded("system-knowledge-below-one", [&] {
      double top = 0.0;
      for (std::size_t i = 0; i < samples(); ++i) {
        const SimplexVector pi = random_simplex(rng_, econ_.K());
        const double scale = random_uniform(rng_, 0.0, 1.0) * max_scale(econ_.tech, pi);
        top = std::max(top, system_knowledge(KnowledgeBundle::scaled(pi, scale), econ_.civ));
      }
      add("system-knowledge-below-one", top < 1.0, "max B over feasible draws = " + num(top));
    });
    guarded("integrator-capacity-bound", [&] {
      double worst = -1e300;
      double eq = 0.0;
      for (std::size_t i = 0; i < samples(); ++i) {
        const SimplexVector h = random_simplex(rng_, econ_.K());
        const SimplexVector pi = random_simplex(rng_, econ_.K());
        const KnowledgeBundle s = KnowledgeBundle::scaled(pi, max_scale(econ_.tech, pi));
        const double H = max_scale(econ_.tech, h);
        worst = std::max(worst, integrator_capacity(s, h) - H);
        eq = std::max(eq, std::abs(integrator_capacity(KnowledgeBundle::scaled(h, H), h) - H));
      }
      add("integrator-capacity-bound", worst <= tol_.frontier && eq <= tol_.equality,
          "max J - H(h) = " + num(worst) + ", equality gap at s = H(h)h " + num(eq));
    });
    if (econ_.K() == 2) {
      skip("diffuse-civic-relevance", "two-domain case: the check needs K >= 3");
      skip("integrator-civic-advantage", "two-domain case: the check needs K >= 3");
      return;
    }
    const DiffuseCheck dc = check_diffuse(econ_.civ, econ_.tech);
    info("diffuse-civic-relevance", std::string(dc.holds ? "holds" : "fails") + ": p = " +
                                        num(econ_.civ.p) + ", bound = " + num(dc.bound));
    if (!dc.holds) {
      skip("integrator-civic-advantage", "hypothesis not met, skipped: p outside the diffuseness bound");
    } else {
      guarded("integrator-civic-advantage", [&] {
        const ProductiveOptimum po = productive_optimum(econ_);
        const GroupKnowledge gk = group_knowledge(po.allocation, econ_);
        add("integrator-civic-advantage", gk.B_M > gk.B_S,
            "B_M^q = " + num(gk.B_M) + ", B_S^q = " + num(gk.B_S));
      });
    }
  }

  // production -------------------------------------------------------------

  void production_checks() {
    guarded("productive-optimum-formulas", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const double Y = output_of(po.allocation, econ_);
      const double slack = coordination_slack(po.allocation, econ_);
      const GapAggregate gaps = aggregate_gaps(po.allocation);
      const double D = fragmentation(econ_.q);
      double herr = 0.0;
      for (std::size_t k = 0; k < econ_.K(); ++k) {
        herr = std::max(herr, std::abs(gaps.h->values()[k] - econ_.q[k] * (1.0 - econ_.q[k]) / D));
      }
      const ReducedForm rf = reduced_form(econ_.q, econ_);
      const double err = std::max({std::abs(Y - po.Y_star), herr, std::abs(rf.m - po.m_star),
                                   std::abs(rf.Y - po.Y_star)});
      add("productive-optimum-formulas",
          err <= tol_.theorem && std::abs(slack) <= tol_.theorem && po.m_star < 1.0 / 3.0,
          "m* = " + num(po.m_star) + ", Y* = " + num(po.Y_star) + ", max formula error " +
              num(err) + ", slack " + num(slack));
    });
    guarded("corner-gap-aggregates", [&] {
      double worst = 0.0;
      for (std::size_t i = 0; i < std::min<std::size_t>(samples(), 200); ++i) {
        const SimplexVector x = random_interior_simplex(rng_, econ_.K(), 1e-3);
        const Allocation a = minimal_integrator_allocation(SpecialistDesign::corners(x), econ_);
        const GapAggregate g = aggregate_gaps(a);
        for (std::size_t k = 0; k < x.size(); ++k) {
          worst = std::max(worst, std::abs(g.G[k] - (1.0 - a.m) * x[k] * (1.0 - x[k])));
        }
        worst = std::max(worst, std::abs(g.g - (1.0 - a.m) * fragmentation(x)));
        const ReducedForm rf = reduced_form(x, econ_);
        worst = std::max({worst, std::abs(rf.m - a.m), std::abs(rf.Y - output_of(a, econ_)),
                          std::abs(coordination_slack(a, econ_))});
      }
      add("corner-gap-aggregates", worst <= tol_.exact * 10.0,
          "max deviation from reduced-form gaps, mass and output " + num(worst));
    });
    guarded("shattering-expansion", [&] {
      double worst_bound = -1e300;
      double worst_corner = 0.0;
      for (std::size_t i = 0; i < std::min<std::size_t>(samples(), 200); ++i) {
        const std::size_t atoms = 1 + (rng_() % 3);
        std::vector<DesignAtom> list;
        Vec w(atoms);
        for (double& v : w) v = random_uniform(rng_, 0.05, 1.0);
        double tw = 0.0;
        for (double v : w) tw += v;
        for (std::size_t j = 0; j < atoms; ++j) {
          list.push_back({random_simplex(rng_, econ_.K()), w[j] / tw, std::nullopt});
        }
        const SpecialistDesign nu = SpecialistDesign::make(std::move(list), econ_.tech);
        const SimplexVector& x = nu.mean();
        const KnowledgeBundle zc = z_nu(cornerize(nu), x);
        const KnowledgeBundle z = z_nu(nu, x);
        double ED = 0.0;
        for (const auto& a : nu.atoms()) ED += a.weight * fragmentation(a.direction);
        worst_bound = std::max(worst_bound, l1_distance(zc, z) - ED);
        for (std::size_t k = 0; k < x.size(); ++k) {
          worst_corner = std::max(worst_corner, std::abs(zc[k] - x[k] * (1.0 - x[k])));
        }
      }
      add("shattering-expansion", worst_bound <= tol_.exact && worst_corner <= tol_.exact,
          "max |z_c - z|_1 - E[D] = " + num(worst_bound) + ", corner profile error " +
              num(worst_corner));
    });
    guarded("reduced-form-lipschitz", [&] {
      double worst = -1e300;
      auto G = [&](const SimplexVector& x) {
        Vec z(x.size());
        for (std::size_t k = 0; k < z.size(); ++k) z[k] = x[k] * (1.0 - x[k]);
        return gamma_index(econ_.tech, z);
      };
      for (std::size_t i = 0; i < samples(); ++i) {
        const SimplexVector x = random_simplex(rng_, econ_.K());
        const SimplexVector y = random_simplex(rng_, econ_.K());
        worst = std::max(worst, std::abs(G(x) - G(y)) - lc_.L_Gamma * l1_distance(x, y));
      }
      add("reduced-form-lipschitz", worst <= tol_.exact,
          "max |dGamma(x(1-x))| - L_Gamma |dx|_1 = " + num(worst));
    });
    if (econ_.theta < 1.0 / (2.0 * lc_.L_Gamma)) {
      guarded("alignment-grid", [&] {
        const double Yq = reduced_form(econ_.q, econ_).Y;
        double worst = -1e300;
        bool strict = true;
        for (const auto& x : simplex_grid(econ_.K(), sc_.oracle.design.resolution)) {
          const double Yx = reduced_form(x, econ_).Y;
          worst = std::max(worst, Yx - Yq);
          if (coverage(x, econ_.q) < 1.0 - 1e-12) strict = strict && Yx < Yq;
        }
        add("alignment-grid", worst <= tol_.exact && strict,
            "max Y(x) - Y(q) over the grid = " + num(worst));
      });
    } else {
      skip("alignment-grid", "hypothesis not met, skipped: theta >= 1/(2 L_Gamma)");
    }
    guarded("bang-bang-brute-force", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const BruteForceResult bf = brute_force_design(econ_, sc_.oracle.design);
      std::optional<SimplexVector> nearest;
      double best_d = 1e300;
      for (const auto& x : simplex_grid(econ_.K(), sc_.oracle.design.resolution)) {
        const double d = l1_distance(x, econ_.q);
        if (d < best_d - 1e-15) {
          best_d = d;
          nearest = x;
        }
      }
      const double gap = po.Y_star - bf.Y;
      const bool ok = bf.design.all_corners() && l1_distance(bf.x, *nearest) <= 1e-12 &&
                      gap >= -tol_.theorem && gap <= bf.grid_tolerance;
      add("bang-bang-brute-force", ok,
          std::to_string(bf.evaluated) + " designs; best all-corner = " +
              (bf.design.all_corners() ? "yes" : "no") + ", |x - nearest grid q|_1 = " +
              num(l1_distance(bf.x, *nearest)) + ", Y* - Y_best = " + num(gap) +
              " (grid tolerance " + num(bf.grid_tolerance) + ")");
    });
  }

  // politics ---------------------------------------------------------------

  void politics_checks() {
    const auto& gov = econ_.gov;
    guarded("governance-closed-form", [&] {
      double rel = 0.0;
      double resid = 0.0;
      bool signs = true;
      for (std::size_t i = 0; i < std::min<std::size_t>(samples(), 200); ++i) {
        const double Y = random_uniform(rng_, 0.1, 2.0);
        const double B = random_uniform(rng_, 0.01, 0.99);
        const GovernanceSolution s = governance_star(gov, Y, B);
        const double closed = gov.closed_form_e_star(B);
        rel = std::max(rel, std::abs(s.e - closed) / closed);
        resid = std::max(resid, s.residual);
        const double e2 = governance_star(gov, Y, 2.0 * B).e;
        rel = std::max(rel, std::abs(e2 / s.e - std::sqrt(2.0)));
        const ResourceSensitivity rs = resource_sensitivity(gov, Y, B);
        signs = signs && rs.e_B > 0.0 && rs.RB_over_R > 0.0;
      }
      add("governance-closed-form", rel <= tol_.theorem && resid <= tol_.exact && signs,
          "max relative gap to closed form " + num(rel) + ", max FOC residual " + num(resid));
    });
    guarded("equilibrium-kkt", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const PoliticalOutcome out = political_equilibrium(econ_, po.allocation);
      const KktResiduals k = kkt_residuals(out, gov);
      const double budget = std::abs((1.0 - out.m) * out.t_S + out.m * out.t_M - out.R);
      const double zerr = std::abs(out.z_pol - out.m * out.B_M / out.B_soc);
      const double worst = std::max({k.services_S, k.services_M, k.governance});
      add("equilibrium-kkt", worst <= tol_.kkt && budget <= tol_.theorem && zerr <= tol_.exact,
          "KKT residual " + num(worst) + ", budget identity " + num(budget));
    });
    guarded("best-response-fixed-point", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const VotingGame game = voting_game(econ_, po.allocation);
      const PoliticalOutcome eq = political_equilibrium(econ_, po.allocation);
      const BestResponse self = best_response(Platform{eq.e_pol, eq.z_pol}, game);
      double worst = std::max(std::abs(self.platform.e - eq.e_pol), std::abs(self.platform.z - eq.z_pol));
      int max_it = 0;
      bool converged = true;
      for (std::size_t i = 0; i < sc_.oracle.starts; ++i) {
        const Platform start{eq.e_pol * random_uniform(rng_, 0.2, 3.0),
                             random_uniform(rng_, 0.05, 0.95)};
        const FixedPointResult fp = iterate_best_response(start, game);
        converged = converged && fp.converged;
        max_it = std::max(max_it, fp.iterations);
        const BestResponse br = best_response(fp.platform, game);
        worst = std::max({worst, std::abs(fp.platform.e - eq.e_pol), std::abs(fp.platform.z - eq.z_pol),
                          std::abs(br.t_S - eq.t_S), std::abs(br.t_M - eq.t_M)});
      }
      add("best-response-fixed-point", converged && worst <= tol_.platform,
          std::to_string(sc_.oracle.starts) + " starts, max iterations " + std::to_string(max_it) +
              ", max distance to closed form " + num(worst));
    });
    guarded("equilibrium-sign-pattern", [&] {
      bool ok = true;
      for (std::size_t i = 0; i < std::min<std::size_t>(samples(), 200); ++i) {
        const double m = random_uniform(rng_, 0.01, 0.6);
        const double BS = random_uniform(rng_, 0.05, 0.95);
        const double BM = random_uniform(rng_, 0.05, 0.95);
        const PoliticalOutcome o = political_equilibrium(gov, random_uniform(rng_, 0.2, 2.0), m, BS, BM);
        ok = ok && ((o.z_pol > m) == (BM > BS)) && ((o.t_M > o.t_S) == (BM > BS));
      }
      const PoliticalOutcome sym = political_equilibrium(gov, 1.0, 0.2, 0.4, 0.4);
      ok = ok && std::abs(sym.z_pol - 0.2) <= tol_.exact && std::abs(sym.t_S - sym.t_M) <= tol_.exact;
      add("equilibrium-sign-pattern", ok, "z_pol > m exactly when B_M > B_S");
    });
    guarded("vote-share-reciprocity", [&] {
      double worst = 0.0;
      for (std::size_t i = 0; i < samples(); ++i) {
        const double t = random_uniform(rng_, 0.01, 3.0);
        const double tb = random_uniform(rng_, 0.01, 3.0);
        const double beta = random_uniform(rng_, 0.01, 0.99);
        const double lhs = t * vote_share_slope(t, tb, beta);
        const double rhs = tb * vote_share_slope(tb, t, beta);
        worst = std::max({worst, std::abs(lhs - rhs), std::abs(vote_share(t, t, beta) - 0.5),
                          std::abs(vote_share_slope(t, t, beta) - beta / (4.0 * t))});
      }
      add("vote-share-reciprocity", worst <= tol_.exact && vote_share(0.0, 1.0, 0.5) == 0.0,
          "max |t Psi'(t;tb) - tb Psi'(tb;t)| and symmetry errors " + num(worst));
    });
    guarded("resources-increasing-in-knowledge", [&] {
      bool ok = true;
      double prev = -1.0;
      for (int i = 1; i <= 50; ++i) {
        const double B = 0.02 * i - 0.01;
        const double R = resource_sensitivity(gov, 1.0, B).R;
        ok = ok && R > prev;
        prev = R;
      }
      add("resources-increasing-in-knowledge", ok, "R(Y, B) strictly increasing on a 50-point B grid");
    });
  }

  // welfare ----------------------------------------------------------------

  void welfare_checks() {
    guarded("service-welfare-representation", [&] {
      double worst = 0.0;
      bool disp = true;
      for (std::size_t i = 0; i < samples(); ++i) {
        const double m = random_uniform(rng_, 0.01, 0.9);
        const double BS = random_uniform(rng_, 0.05, 0.95);
        const double BM = (i % 10 == 0) ? BS : random_uniform(rng_, 0.05, 0.95);
        const PoliticalOutcome o = political_equilibrium(econ_.gov, random_uniform(rng_, 0.2, 2.0), m, BS, BM);
        const WelfareReport w = welfare_from_outcome(o, econ_.gov.tau);
        worst = std::max(worst, std::abs(w.service_welfare - (std::log(w.R) - w.dispersion)));
        disp = disp && w.dispersion >= 0.0;
        if (std::abs(BS - BM) <= tol_.equality) {
          disp = disp && w.dispersion <= tol_.welfare;
        } else {
          disp = disp && w.dispersion > 0.0;
        }
      }
      add("service-welfare-representation", worst <= tol_.welfare && disp,
          "max |V - (log R - D)| = " + num(worst) + "; D >= 0, zero only for equal groups");
    });
    guarded("total-welfare", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const WelfareReport w = total_welfare(econ_, po.allocation);
      const double err = std::abs(w.W - ((1.0 - econ_.gov.tau) * w.Y + w.service_welfare));
      add("total-welfare", err <= tol_.exact,
          "W = " + num(w.W) + ", Y = " + num(w.Y) + ", V = " + num(w.service_welfare) +
              ", D = " + num(w.dispersion));
    });
    guarded("civic-benchmark", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const GroupKnowledge gk = group_knowledge(po.allocation, econ_);
      const CivicBenchmark cb = civic_benchmark(econ_.civ, econ_.tech, 40);
      add("civic-benchmark", cb.B_max < 1.0 && cb.B_max >= std::max(gk.B_S, gk.B_M) - tol_.exact,
          "B_max = " + num(cb.B_max) + " vs B_S^q " + num(gk.B_S) + ", B_M^q " + num(gk.B_M));
    });
  }

  // reforms ----------------------------------------------------------------

  void reform_checks() {
    guarded("decomposition-broadening", [&] {
      productive_optimum(econ_);
      DecomposeOptions o;
      o.lo = 0.0;
      o.hi = 1.0;
      o.tolerance = tol_.decomposition;
      double worst = 0.0;
      for (double b : {0.0, 0.25, 0.5}) {
        worst = std::max(worst, decompose_along(broadening_family(econ_), b, o).residual);
      }
      add("decomposition-broadening", worst <= tol_.decomposition,
          "max |terms - dW/db| at b in {0, 0.25, 0.5} = " + num(worst));
    });
    guarded("decomposition-interface", [&] {
      productive_optimum(econ_);
      DecomposeOptions o;
      o.lo = 0.0;
      o.hi = 1.0;
      double worst = 0.0;
      for (double a : {0.0, 0.5, 1.0}) {
        worst = std::max(worst, decompose_along(interface_family(econ_), a, o).residual);
      }
      add("decomposition-interface", worst <= tol_.decomposition,
          "max |terms - dW/dalpha| at alpha in {0, 0.5, 1} = " + num(worst));
    });
    guarded("broadening-anchors", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const Allocation a0 = broadening_allocation(0.0, econ_);
      const Allocation a1 = broadening_allocation(1.0, econ_);
      double worst = std::max(std::abs(a0.m - po.m_star), std::abs(output_of(a0, econ_) - po.Y_star));
      for (double b : linear_grid(0.0, 1.0, 11)) {
        const Allocation a = broadening_allocation(b, econ_);
        worst = std::max({worst, l1_distance(a.design.mean(), econ_.q),
                          std::abs(a.m - broadening_integrator_mass(b, econ_))});
      }
      add("broadening-anchors", worst <= tol_.exact && a1.m == 0.0,
          "A(0) = productive optimum, m(1) = 0, mix stays q; max error " + num(worst));
    });
    guarded("broadening-derivative-closed-form", [&] {
      const BroadeningDerivative bd = broadening_derivative(econ_);
      const double fd = broadening_fd(econ_);
      const Economy tiny = econ_.with_theta(lc_.theta_bar * 1e-9);
      const BroadeningDerivative bt = broadening_derivative(tiny);
      const double limit_gap = std::abs(bt.derivative - (bt.broad_knowledge - bt.corner_knowledge));
      add("broadening-derivative-closed-form",
          std::abs(bd.derivative - fd) <= tol_.broadening_fd && limit_gap <= tol_.broadening_fd,
          "dB_soc/db(0) = " + num(bd.derivative) + ", FD gap " + num(std::abs(bd.derivative - fd)) +
              ", small-theta limit gap " + num(limit_gap) + ", cutoff " + to_string(bd.kind));
    });
    guarded("broadening-cutoff-flip", [&] {
      const BroadeningDerivative bd = broadening_derivative(econ_);
      if (bd.kind != CutoffKind::Finite || !(bd.cutoff < lc_.theta_bar)) {
        skip("broadening-cutoff-flip",
             std::string("cutoff ") + to_string(bd.kind) +
                 (bd.kind == CutoffKind::Finite ? " at " + num(bd.cutoff) + " >= theta_bar" : "") +
                 "; no sign change inside (0, theta_bar)");
        return;
      }
      double lo = lc_.theta_bar * 1e-6;
      double hi = lc_.theta_bar * (1.0 - 1e-9);
      const bool bracket = broadening_fd(econ_.with_theta(lo)) > 0.0 &&
                           broadening_fd(econ_.with_theta(hi)) < 0.0;
      if (bracket) {
        for (int i = 0; i < 80; ++i) {
          const double mid = 0.5 * (lo + hi);
          (broadening_fd(econ_.with_theta(mid)) > 0.0 ? lo : hi) = mid;
        }
      }
      const double flip = 0.5 * (lo + hi);
      add("broadening-cutoff-flip", bracket && std::abs(flip - bd.cutoff) <= tol_.flip,
          "bisected flip " + num(flip) + " vs closed-form cutoff " + num(bd.cutoff));
    });
    guarded("excess-specialization", [&] {
      const ExcessSpecializationReport r =
          excess_specialization_check(econ_, linear_grid(sc_.b.min, sc_.b.max, sc_.b.points));
      std::string d = std::string("precondition ") + (r.precondition ? "met" : "not met") +
                      " (p_bar_B = " + num(r.p_bar_B) + "), W'(0) = " + num(r.at_zero.dW) +
                      (r.improves ? " > 0" : " <= 0") + ", R_B/R = " + num(r.at_zero.RB_over_R);
      if (r.required_RB_over_R) d += ", sign flips at R_B/R = " + num(*r.required_RB_over_R);
      d += ", argmax b on grid = " + num(r.argmax_b);
      info("excess-specialization", d);
    });
    guarded("interface-closed-form-slopes", [&] {
      const InterfaceStatics is =
          interface_statics(econ_, linear_grid(sc_.alpha.min, sc_.alpha.max, sc_.alpha.points), false);
      const double gap = std::max(std::abs(is.B_S_prime - is.B_S_prime_fd),
                                  std::abs(is.B_M_prime - is.B_M_prime_fd));
      bool ok = gap <= tol_.interface_fd && is.B_S_prime <= tol_.exact && is.B_M_prime >= -tol_.exact;
      if (is.uniform_q) ok = ok && std::abs(is.B_S_prime) <= tol_.exact && std::abs(is.B_M_prime) <= tol_.exact;
      add("interface-closed-form-slopes", ok,
          "B_S' = " + num(is.B_S_prime) + ", B_M' = " + num(is.B_M_prime) + ", FD gap " + num(gap));
    });
    guarded("interface-coverage-affine", [&] {
      const ProductiveOptimum po = productive_optimum(econ_);
      const double c0 = coverage(po.h_star, econ_.q);
      double worst = 0.0;
      for (double a : linear_grid(0.0, 1.0, 21)) {
        const double c = coverage(po.h_star, interface_profile(econ_, a));
        worst = std::max(worst, std::abs(c - (c0 + a * (1.0 - c0))));
      }
      add("interface-coverage-affine", worst <= tol_.exact,
          "max |C(h*, u_alpha) - affine| = " + num(worst));
    });
    guarded("interface-small-theta", [&] {
      const InterfaceStatics is =
          interface_statics(econ_, linear_grid(sc_.alpha.min, sc_.alpha.max, sc_.alpha.points), true);
      if (is.uniform_q) {
        skip("interface-small-theta", "uniform q: both slopes vanish");
      } else {
        add("interface-small-theta", is.theta_small.has_value() && *is.theta_small > 0.0,
            is.theta_small ? "dB_soc/dalpha < 0 and dW/dalpha < 0 for theta below " +
                                 num(*is.theta_small) + " (theta_bar " + num(lc_.theta_bar) + ")"
                           : "no threshold found");
      }
    });
    guarded("dispersion-order-m", [&] {
      const DispersionOrder d = dispersion_order(econ_, default_theta_grid(econ_, 5), linear_grid(0.0, 1.0, 5));
      add("dispersion-order-m", std::isfinite(d.M),
          "|dD/dalpha| <= M m^q with fitted M = " + num(d.M));
    });
    guarded("theta-statics", [&] {
      const ThetaStatics ts = theta_statics(econ_, default_theta_grid(econ_, sc_.theta_points));
      add("theta-statics",
          ts.m_increasing && ts.Y_decreasing && ts.B_soc_increasing && ts.max_dm_error <= tol_.dm,
          std::to_string(ts.rows.size()) + " points: m up, Y down, B_soc up; dm/dtheta gap " +
              num(ts.max_dm_error) + "; W " + (ts.W_monotone ? "monotone" : "non-monotone"));
    });
  }

  double broadening_fd(const Economy& e) const {
    return numeric::one_sided_difference(
        [&](double b) { return group_knowledge(broadening_allocation(b, e), e).B_soc; }, 0.0, 1e-5);
  }

  // competitive ------------------------------------------------------------

  void competitive_checks() {
    std::optional<WageSupport> ws;
    guarded("wage-support", [&] {
      ws = support_wages(econ_);
      const bool ok = ws->indifference_residual <= tol_.wage && ws->zero_profit_residual <= tol_.wage &&
                      ws->w_S > 0.0 && ws->w_M > 0.0 &&
                      econ_.theta * ws->w_M / ws->w_S < lc_.theta_bar;
      add("wage-support", ok,
          "w_S = " + num(ws->w_S) + ", w_M = " + num(ws->w_M) + ", Delta_q = " + num(ws->Delta_q) +
              ", indifference " + num(ws->indifference_residual) + ", zero profit " +
              num(ws->zero_profit_residual));
    });
    const RatioBound rb = ratio_bound(econ_);
    if (ws) {
      const double r = ws->w_M / ws->w_S;
      add("wage-ratio-bound", r <= rb.r_bar,
          "w_M/w_S = " + num(r) + " <= r_bar = " + num(rb.r_bar) + "; uniqueness cutoff " +
              num(rb.uniqueness_cutoff) + (rb.uniqueness_holds ? " (holds)" : " (not met)"));
      guarded("no-deviation-grid", [&] {
        const DeviationReport d = no_deviation_check(*ws, econ_, sc_.oracle.design);
        const std::string detail = std::to_string(d.evaluated) + " designs, worst margin " +
                                   num(d.worst_margin) + " (" + d.worst_design + ")";
        if (rb.uniqueness_holds) {
          add("no-deviation-grid", d.worst_margin >= -tol_.deviation, detail);
        } else {
          info("no-deviation-grid", "outside uniqueness cutoffs, reported only: " + detail);
        }
      });
    } else {
      skip("wage-ratio-bound", "hypothesis not met, skipped: no supporting wages");
      skip("no-deviation-grid", "hypothesis not met, skipped: no supporting wages");
    }
    guarded("unit-cost-cornerization", [&] {
      const double r = lc_.c_ell / (lc_.L_Gamma * econ_.theta) * 0.5;
      double worst = -1e300;
      for (std::size_t i = 0; i < std::min<std::size_t>(samples(), 200); ++i) {
        std::vector<DesignAtom> list;
        const double w = random_uniform(rng_, 0.1, 0.9);
        list.push_back({random_simplex(rng_, econ_.K()), w, std::nullopt});
        list.push_back({random_simplex(rng_, econ_.K()), 1.0 - w, std::nullopt});
        const SpecialistDesign d = SpecialistDesign::make(std::move(list), econ_.tech);
        worst = std::max(worst, unit_cost(cornerize(d), r, econ_) - unit_cost(d, r, econ_));
      }
      add("unit-cost-cornerization", worst <= tol_.exact,
          "theta r = c_ell/(2 L_Gamma): max cost(corners) - cost(design) = " + num(worst));
    });
  }

  const Scenario& sc_;
  const Economy& econ_;
  Rng rng_;
  LearningConstants lc_;
  Tolerances tol_;
  std::vector<CheckResult> results_;
};

}  // namespace

VerifyReport run_verify(const Scenario& sc, const VerifyOptions& opts) {
  Suite suite(sc, opts);
  return VerifyReport{sc.name, opts.seed, opts.strict, suite.run()};
}

}  // namespace civspec::cli
