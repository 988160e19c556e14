#pragma once

// Governance choice, the closed-form political equilibrium and the
// vote-share game used to re-derive it by best responses.

#include "civspec/economy.hpp"
#include "civspec/governance.hpp"
#include "civspec/production.hpp"

namespace civspec {

struct GroupKnowledge {
  double B_S;    // headcount mean over specialists
  double B_M;    // integrators (common profile)
  double B_soc;  // (1 - m) B_S + m B_M
};

GroupKnowledge group_knowledge(const Allocation& alloc, const Economy& econ);

struct GovernanceSolution {
  double e;
  double residual;  // |B d/de log G - 4 Lambda0 c'(e)|
  int iterations;
};

/// Maximizer of B log G(e, Y) - 4 Lambda0 c(e) by safeguarded Newton on the
/// first-order condition. Requires Y > 0 and B > 0.
GovernanceSolution governance_star(const GovernanceTech& gov, double Y, double B);

/// R = G(e*(Y, B), Y) and its log-derivatives from the implicit function theorem.
struct ResourceSensitivity {
  double e;
  double R;
  double e_Y;
  double e_B;
  double RY_over_R;
  double RB_over_R;
};

ResourceSensitivity resource_sensitivity(const GovernanceTech& gov, double Y, double B);

struct PoliticalOutcome {
  double m;
  double Y;
  double e_pol;
  double z_pol;
  double t_S;
  double t_M;
  double R;
  double B_S;
  double B_M;
  double B_soc;
};

/// Closed-form equilibrium: e = e*(Y, B_soc), z = m B_M / B_soc,
/// t_g = (B_g / B_soc) R. Throws ErrorCode::DegenerateGroups unless 0 < m < 1.
PoliticalOutcome political_equilibrium(const GovernanceTech& gov, double Y, double m,
                                       double B_S, double B_M);
PoliticalOutcome political_equilibrium(const Economy& econ, const Allocation& alloc);

/// Psi(t; t_bar) = t^beta / (t^beta + t_bar^beta), with Psi(0; 0) = 1/2.
double vote_share(double t, double t_bar, double beta);
/// d Psi / dt; +infinity at t = 0 when t_bar > 0.
double vote_share_slope(double t, double t_bar, double beta);

struct KktResiduals {
  double services_S;  // |Psi'_S(t_S; t_S) - B_soc / (4 Lambda0 R)|
  double services_M;
  double governance;  // |B_soc d/de log G - 4 Lambda0 c'(e)|
};

KktResiduals kkt_residuals(const PoliticalOutcome& out, const GovernanceTech& gov);

struct Platform {
  double e;
  double z;  // share of effective resources spent on integrators
};

/// Everything a candidate needs to evaluate platforms.
struct VotingGame {
  GovernanceTech gov;
  double Y;
  double m;
  double B_S;
  double B_M;
};

VotingGame voting_game(const Economy& econ, const Allocation& alloc);

struct BestResponse {
  Platform platform;
  double value;       // (1 - m) Psi_S + m Psi_M - c(e)
  double t_S;
  double t_M;
  double multiplier;  // common marginal vote share per unit of service
};

/// Exact best response to `opponent`. The inner split of resources equalizes
/// the two groups' marginal vote shares; the outer search over e is a golden
/// section followed by bisection on the envelope derivative.
BestResponse best_response(const Platform& opponent, const VotingGame& game);
BestResponse best_response(const Platform& opponent, const Economy& econ,
                           const Allocation& alloc);

struct FixedPointResult {
  Platform platform;
  int iterations;
  bool converged;
  double last_step;
};

/// Iterates best responses until |de| + |dz| <= tol.
FixedPointResult iterate_best_response(Platform start, const VotingGame& game,
                                       int max_iter = 200, double tol = 1e-11);

}  // namespace civspec
