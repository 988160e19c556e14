#pragma once

// Wages that support the productive optimum as a competitive allocation and
// the firm-side checks behind them.

#include <cstddef>
#include <string>

#include "civspec/economy.hpp"
#include "civspec/production.hpp"

namespace civspec {

struct WageSupport {
  double w_S;
  double w_M;
  double Delta_q;  // log(B_M^q / B_S^q)
  double beta;     // theta D(q) / H(h*)
  double V_tilde;  // (1 - tau) V
  double indifference_residual;  // |(w_S - w_M) - Delta_q| with group knowledge recomputed
  double zero_profit_residual;   // |V_tilde C - w_S E - theta w_M A| at the optimum
};

/// Throws ErrorCode::HypothesisViolated naming the failing condition
/// (theta < theta_bar, or Delta_q < V_tilde).
WageSupport support_wages(const Economy& econ);

/// (E_nu[lambda] + theta r Gamma(z_nu(x))) / C(x, q) at x = design mean.
/// Throws ErrorCode::ZeroCoverage when C(x, q) = 0.
double unit_cost(const SpecialistDesign& design, double r, const Economy& econ);

struct RatioBound {
  double r_bar;
  double B_under;    // l_bar^{-p} u_(1)
  double Delta_bar;  // log(1 / B_under)
  double theta_cap;  // V_tilde q_(1) / (2 l_bar Delta_bar)
  bool below_cap;
  double uniqueness_cutoff;
  bool uniqueness_holds;
};

RatioBound ratio_bound(const Economy& econ);

struct DeviationReport {
  double r;               // w_M / w_S
  double reference_cost;  // corner design at x = q
  double worst_margin;    // min over grid designs of cost - reference
  SimplexVector worst_x;
  std::string worst_design;
  std::size_t evaluated;
  bool passed;            // worst_margin >= -1e-9
};

/// Grid no-profitable-deviation check at the supported wage ratio. With
/// `throw_on_violation` a failing grid throws ErrorCode::DeviationFound.
DeviationReport no_deviation_check(const WageSupport& wages, const Economy& econ,
                                   const BruteForceOptions& grid,
                                   bool throw_on_violation = false);

/// Human-readable atom list, e.g. "0.5@(1,0,0) + 0.5@(0,0.5,0.5)".
std::string describe(const SpecialistDesign& design);

}  // namespace civspec
