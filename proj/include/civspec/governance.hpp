#pragma once

namespace civspec {

/// Governance technology: effective resources G(e, Y) = tau Y e^eta and
/// candidate cost c(e) = c0 e^2 / 2.
///
/// Solvers only touch G and c through the derivative accessors below, so a
/// different (log-concave, Inada) pair can be dropped in by changing them.
struct GovernanceTech {
  double eta;      // elasticity of G in e, in (0, 1)
  double c0;       // cost level, > 0
  double tau;      // tax rate, in [0, 1)
  double Lambda0;  // preference-noise scale, >= 1

  /// Throws ErrorCode::Domain on parameters outside the ranges above.
  static GovernanceTech make(double eta, double c0, double tau, double Lambda0);

  double resources(double e, double Y) const;
  double dlog_resources_de(double e, double Y) const;
  double d2log_resources_de2(double e, double Y) const;
  double dlog_resources_dY(double e, double Y) const;
  double d2log_resources_dedY(double e, double Y) const;

  double cost(double e) const { return 0.5 * c0 * e * e; }
  double cost_prime(double e) const { return c0 * e; }
  double cost_second(double) const { return c0; }

  /// Closed-form maximizer of B log G(e, Y) - 4 Lambda0 c(e) for these forms.
  double closed_form_e_star(double B) const;
};

}  // namespace civspec
