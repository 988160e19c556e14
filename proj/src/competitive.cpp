#include "civspec/competitive.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/learning.hpp"
#include "civspec/politics.hpp"

namespace civspec {

namespace {

constexpr double kDeviationTol = 1e-9;

}  // namespace

WageSupport support_wages(const Economy& econ) {
  const ProductiveOptimum po = productive_optimum(econ);
  const double D = fragmentation(econ.q);
  const double B_S = dot(econ.q, econ.civ.u);
  const double B_M = std::pow(po.H_hstar, econ.civ.p) * coverage(po.h_star, econ.civ.u);
  const double Delta = std::log(B_M / B_S);
  const double V_tilde = (1.0 - econ.gov.tau) * econ.V;
  if (!(Delta < V_tilde)) {
    fail(ErrorCode::HypothesisViolated,
         "wage support needs Delta_q < (1 - tau) V; got Delta_q = " + std::to_string(Delta) +
             ", (1 - tau) V = " + std::to_string(V_tilde));
  }
  const double beta = econ.theta * D / po.H_hstar;
  const double w_M = (V_tilde - Delta) / (1.0 + beta);
  const double w_S = (V_tilde + beta * Delta) / (1.0 + beta);

  const GroupKnowledge gk = group_knowledge(po.allocation, econ);
  const double indifference = std::abs((w_S - w_M) - std::log(gk.B_M / gk.B_S));
  Vec z(econ.K());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = econ.q[k] * (1.0 - econ.q[k]);
  const double A = gamma_index(econ.tech, z);
  const double E = expected_lambda(po.allocation.design, econ.tech);
  const double C = coverage(po.allocation.design.mean(), econ.q);
  const double profit = V_tilde * C - w_S * E - econ.theta * w_M * A;
  return WageSupport{w_S, w_M, Delta, beta, V_tilde, indifference, std::abs(profit)};
}

double unit_cost(const SpecialistDesign& design, double r, const Economy& econ) {
  if (!(r >= 0.0)) fail(ErrorCode::Domain, "unit_cost: wage ratio must be nonnegative");
  const SimplexVector& x = design.mean();
  const double C = coverage(x, econ.q);
  if (!(C > 0.0)) fail(ErrorCode::ZeroCoverage, "unit_cost: design covers none of q");
  const double E = expected_lambda(design, econ.tech);
  return (E + econ.theta * r * gamma_index(econ.tech, z_nu(design, x))) / C;
}

RatioBound ratio_bound(const Economy& econ) {
  const LearningConstants lc = learning_constants(econ.tech);
  const double V_tilde = (1.0 - econ.gov.tau) * econ.V;
  const double q1 = econ.q.min();
  const double u1 = econ.civ.u.min();
  RatioBound out{};
  out.B_under = std::pow(lc.ell_bar, -econ.civ.p) * u1;
  out.Delta_bar = std::log(1.0 / out.B_under);
  out.r_bar = 2.0 * (V_tilde + lc.ell_bar * out.Delta_bar) / (V_tilde * q1);
  out.theta_cap = V_tilde * q1 / (2.0 * lc.ell_bar * out.Delta_bar);
  out.below_cap = econ.theta < out.theta_cap;
  out.uniqueness_cutoff =
      std::min(lc.theta_bar * V_tilde * q1 / (2.0 * (V_tilde + lc.ell_bar * out.Delta_bar)),
               out.theta_cap);
  out.uniqueness_holds = econ.theta < out.uniqueness_cutoff;
  return out;
}

std::string describe(const SpecialistDesign& design) {
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& a : design.atoms()) {
    if (!first) os << " + ";
    first = false;
    os << a.weight << "@(";
    for (std::size_t k = 0; k < a.direction.size(); ++k) {
      os << (k ? "," : "") << a.direction[k];
    }
    os << ")";
  }
  return os.str();
}

DeviationReport no_deviation_check(const WageSupport& wages, const Economy& econ,
                                   const BruteForceOptions& grid, bool throw_on_violation) {
  const double r = wages.w_M / wages.w_S;
  const SpecialistDesign reference = SpecialistDesign::corners(econ.q);
  DeviationReport rep{r,
                      unit_cost(reference, r, econ),
                      std::numeric_limits<double>::infinity(),
                      econ.q,
                      describe(reference),
                      0,
                      true};
  for_each_grid_design(econ, grid, [&](const SpecialistDesign& design) {
    if (!(coverage(design.mean(), econ.q) > 0.0)) return;
    const double margin = unit_cost(design, r, econ) - rep.reference_cost;
    ++rep.evaluated;
    if (margin < rep.worst_margin) {
      rep.worst_margin = margin;
      rep.worst_x = design.mean();
      rep.worst_design = describe(design);
    }
  });
  rep.passed = rep.worst_margin >= -kDeviationTol;
  if (!rep.passed && throw_on_violation) {
    fail(ErrorCode::DeviationFound,
         "profitable deviation " + rep.worst_design + " undercuts the productive design by " +
             std::to_string(-rep.worst_margin));
  }
  return rep;
}

}  // namespace civspec
