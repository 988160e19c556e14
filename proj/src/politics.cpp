#include "civspec/politics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/numeric.hpp"

namespace civspec {

GroupKnowledge group_knowledge(const Allocation& alloc, const Economy& econ) {
  const auto& atoms = alloc.design.atoms();
  const Vec mu = alloc.design.population_shares();
  double B_S = 0.0;
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    B_S += mu[j] * system_knowledge(KnowledgeBundle::scaled(atoms[j].direction, atoms[j].scale),
                                    econ.civ);
  }
  const double B_M = system_knowledge(alloc.integrator_profile, econ.civ);
  return GroupKnowledge{B_S, B_M, (1.0 - alloc.m) * B_S + alloc.m * B_M};
}

GovernanceSolution governance_star(const GovernanceTech& gov, double Y, double B) {
  if (!(Y > 0.0) || !(B > 0.0)) {
    fail(ErrorCode::Domain, "governance_star needs Y > 0 and B > 0");
  }
  const double k = 4.0 * gov.Lambda0;
  auto F = [&](double e) { return B * gov.dlog_resources_de(e, Y) - k * gov.cost_prime(e); };
  auto dF = [&](double e) {
    return B * gov.d2log_resources_de2(e, Y) - k * gov.cost_second(e);
  };
  double lo = 1.0;
  double hi = 1.0;
  for (int i = 0; i < 2000 && F(lo) <= 0.0; ++i) lo *= 0.5;
  for (int i = 0; i < 2000 && F(hi) >= 0.0; ++i) hi *= 2.0;
  if (!(F(lo) > 0.0) || !(F(hi) < 0.0)) {
    fail(ErrorCode::NonConvergence, "governance_star: could not bracket the first-order condition");
  }
  const auto r = numeric::safeguarded_newton(F, dF, std::sqrt(lo * hi), lo, hi, 0.0, 200);
  if (!r.converged && r.residual > 1e-12 * std::max(1.0, B * gov.dlog_resources_de(r.x, Y))) {
    fail(ErrorCode::NonConvergence, "governance_star: Newton did not converge in 200 steps");
  }
  return GovernanceSolution{r.x, r.residual, r.iterations};
}

ResourceSensitivity resource_sensitivity(const GovernanceTech& gov, double Y, double B) {
  const double e = governance_star(gov, Y, B).e;
  const double F_e = B * gov.d2log_resources_de2(e, Y) - 4.0 * gov.Lambda0 * gov.cost_second(e);
  const double F_B = gov.dlog_resources_de(e, Y);
  const double F_Y = B * gov.d2log_resources_dedY(e, Y);
  const double e_B = -F_B / F_e;
  const double e_Y = -F_Y / F_e;
  const double g_e = gov.dlog_resources_de(e, Y);
  return ResourceSensitivity{e,
                             gov.resources(e, Y),
                             e_Y,
                             e_B,
                             gov.dlog_resources_dY(e, Y) + g_e * e_Y,
                             g_e * e_B};
}

PoliticalOutcome political_equilibrium(const GovernanceTech& gov, double Y, double m,
                                       double B_S, double B_M) {
  if (!(m > 0.0 && m < 1.0)) {
    fail(ErrorCode::DegenerateGroups,
         "political equilibrium needs both occupations populated (0 < m < 1)");
  }
  if (!(B_S > 0.0) || !(B_M > 0.0)) {
    fail(ErrorCode::Domain, "group system knowledge must be positive");
  }
  const double B_soc = (1.0 - m) * B_S + m * B_M;
  const double e = governance_star(gov, Y, B_soc).e;
  const double R = gov.resources(e, Y);
  return PoliticalOutcome{m,
                          Y,
                          e,
                          m * B_M / B_soc,
                          B_S / B_soc * R,
                          B_M / B_soc * R,
                          R,
                          B_S,
                          B_M,
                          B_soc};
}

PoliticalOutcome political_equilibrium(const Economy& econ, const Allocation& alloc) {
  if (!(alloc.m > 0.0 && alloc.m < 1.0)) {
    fail(ErrorCode::DegenerateGroups,
         "political equilibrium needs both occupations populated (0 < m < 1)");
  }
  const double Y = output_of(alloc, econ);
  const GroupKnowledge gk = group_knowledge(alloc, econ);
  return political_equilibrium(econ.gov, Y, alloc.m, gk.B_S, gk.B_M);
}

double vote_share(double t, double t_bar, double beta) {
  if (t < 0.0 || t_bar < 0.0) fail(ErrorCode::Domain, "vote_share: negative service");
  if (t == 0.0) return t_bar == 0.0 ? 0.5 : 0.0;
  const double r = std::pow(t_bar / t, beta);
  return 1.0 / (1.0 + r);
}

double vote_share_slope(double t, double t_bar, double beta) {
  if (t < 0.0 || t_bar < 0.0) fail(ErrorCode::Domain, "vote_share_slope: negative service");
  if (t == 0.0) return t_bar > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  const double r = std::pow(t_bar / t, beta);
  return beta * r / (t * (1.0 + r) * (1.0 + r));
}

KktResiduals kkt_residuals(const PoliticalOutcome& out, const GovernanceTech& gov) {
  const double target = out.B_soc / (4.0 * gov.Lambda0 * out.R);
  const double sS = vote_share_slope(out.t_S, out.t_S, out.B_S / gov.Lambda0);
  const double sM = vote_share_slope(out.t_M, out.t_M, out.B_M / gov.Lambda0);
  const double foc = out.B_soc * gov.dlog_resources_de(out.e_pol, out.Y) -
                     4.0 * gov.Lambda0 * gov.cost_prime(out.e_pol);
  return KktResiduals{std::abs(sS - target), std::abs(sM - target), std::abs(foc)};
}

VotingGame voting_game(const Economy& econ, const Allocation& alloc) {
  if (!(alloc.m > 0.0 && alloc.m < 1.0)) {
    fail(ErrorCode::DegenerateGroups, "voting game needs 0 < m < 1");
  }
  const GroupKnowledge gk = group_knowledge(alloc, econ);
  return VotingGame{econ.gov, output_of(alloc, econ), alloc.m, gk.B_S, gk.B_M};
}

namespace {

struct Split {
  double t_S;
  double t_M;
  double multiplier;
  double value;  // (1 - m) Psi_S + m Psi_M
};

class Candidate {
 public:
  Candidate(const Platform& opp, const VotingGame& g) : g_(g) {
    const double R = g.gov.resources(opp.e, g.Y);
    tbar_S_ = (1.0 - opp.z) * R / (1.0 - g.m);
    tbar_M_ = opp.z * R / g.m;
    if (!(tbar_S_ > 0.0) || !(tbar_M_ > 0.0)) {
      fail(ErrorCode::Domain, "best_response: opponent services must be positive");
    }
    beta_S_ = g.B_S / g.gov.Lambda0;
    beta_M_ = g.B_M / g.gov.Lambda0;
  }

  Split split(double R) const {
    if (R <= 0.0) return Split{0.0, 0.0, std::numeric_limits<double>::infinity(), 0.0};
    const double m = g_.m;
    auto services = [&](double sigma) {
      return std::pair{sigma * R / (1.0 - m), (1.0 - sigma) * R / m};
    };
    const auto r = numeric::bisect(
        [&](double sigma) {
          const auto [tS, tM] = services(sigma);
          return vote_share_slope(tS, tbar_S_, beta_S_) - vote_share_slope(tM, tbar_M_, beta_M_);
        },
        0.0, 1.0);
    const auto [tS, tM] = services(r.x);
    const double value =
        (1.0 - m) * vote_share(tS, tbar_S_, beta_S_) + m * vote_share(tM, tbar_M_, beta_M_);
    return Split{tS, tM, vote_share_slope(tS, tbar_S_, beta_S_), value};
  }

  double value(double e) const {
    return split(g_.gov.resources(e, g_.Y)).value - g_.gov.cost(e);
  }

  double envelope(double e) const {
    const double R = g_.gov.resources(e, g_.Y);
    const Split s = split(R);
    return s.multiplier * R * g_.gov.dlog_resources_de(e, g_.Y) - g_.gov.cost_prime(e);
  }

 private:
  const VotingGame& g_;
  double tbar_S_;
  double tbar_M_;
  double beta_S_;
  double beta_M_;
};

}  // namespace

BestResponse best_response(const Platform& opponent, const VotingGame& game) {
  const Candidate cand(opponent, game);
  const double e_hi = std::sqrt(4.0 / game.gov.c0);
  const auto coarse = numeric::golden_section_max(
      [&](double e) { return cand.value(e); }, 0.0, e_hi, 1e-10, 500);

  auto env = [&](double e) { return cand.envelope(e); };
  double width = std::max(1e-9, 1e-6 * coarse.x);
  double lo = std::max(coarse.x - width, 0.0);
  double hi = coarse.x + width;
  int expand = 0;
  while (!(lo > 0.0 && env(lo) > 0.0) || !(env(hi) < 0.0)) {
    if (++expand > 200) {
      fail(ErrorCode::NonConvergence, "best_response: could not bracket the optimal effort");
    }
    width *= 2.0;
    lo = std::max(coarse.x - width, coarse.x * 1e-3);
    hi = coarse.x + width;
  }
  const double e = numeric::bisect(env, lo, hi).x;
  const double R = game.gov.resources(e, game.Y);
  const Split s = cand.split(R);
  return BestResponse{Platform{e, game.m * s.t_M / R}, s.value - game.gov.cost(e), s.t_S, s.t_M,
                      s.multiplier};
}

BestResponse best_response(const Platform& opponent, const Economy& econ,
                           const Allocation& alloc) {
  return best_response(opponent, voting_game(econ, alloc));
}

FixedPointResult iterate_best_response(Platform start, const VotingGame& game, int max_iter,
                                       double tol) {
  Platform cur = start;
  double step = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= max_iter; ++it) {
    const Platform next = best_response(cur, game).platform;
    step = std::abs(next.e - cur.e) + std::abs(next.z - cur.z);
    cur = next;
    if (step <= tol) return FixedPointResult{cur, it, true, step};
  }
  return FixedPointResult{cur, max_iter, false, step};
}

}  // namespace civspec
