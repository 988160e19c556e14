#include "civspec/governance.hpp"

#include <cmath>

#include "civspec/economy.hpp"
#include "civspec/error.hpp"

namespace civspec {

GovernanceTech GovernanceTech::make(double eta, double c0, double tau, double Lambda0) {
  if (!(eta > 0.0 && eta < 1.0)) fail(ErrorCode::Domain, "gov.eta must lie in (0, 1)");
  if (!(c0 > 0.0) || !std::isfinite(c0)) fail(ErrorCode::Domain, "gov.c0 must be positive");
  if (!(tau >= 0.0 && tau < 1.0)) fail(ErrorCode::Domain, "gov.tau must lie in [0, 1)");
  if (!(Lambda0 >= 1.0) || !std::isfinite(Lambda0)) {
    fail(ErrorCode::Domain, "gov.lambda0 must be >= 1");
  }
  return GovernanceTech{eta, c0, tau, Lambda0};
}

double GovernanceTech::resources(double e, double Y) const {
  return tau * Y * std::pow(e, eta);
}

double GovernanceTech::dlog_resources_de(double e, double) const { return eta / e; }

double GovernanceTech::d2log_resources_de2(double e, double) const {
  return -eta / (e * e);
}

double GovernanceTech::dlog_resources_dY(double, double Y) const { return 1.0 / Y; }

double GovernanceTech::d2log_resources_dedY(double, double) const { return 0.0; }

double GovernanceTech::closed_form_e_star(double B) const {
  return std::sqrt(eta * B / (4.0 * Lambda0 * c0));
}

Economy Economy::with_civic_profile(SimplexVector u) const {
  Economy out = *this;
  out.civ = CivicParams::make(std::move(u), civ.p);
  return out;
}

Economy Economy::with_theta(double t) const {
  Economy out = *this;
  out.theta = t;
  return out;
}

void validate(const Economy& econ) {
  if (econ.q.size() != econ.civ.u.size()) {
    fail(ErrorCode::Dimension, "q and u must have the same number of domains");
  }
  if (!econ.q.is_interior()) fail(ErrorCode::Domain, "q must be strictly interior");
  if (!econ.civ.u.is_interior()) fail(ErrorCode::Domain, "u must be strictly interior");
  if (!(econ.theta > 0.0) || !std::isfinite(econ.theta)) {
    fail(ErrorCode::Domain, "theta must be positive");
  }
  if (!(econ.V > 0.0) || !std::isfinite(econ.V)) fail(ErrorCode::Domain, "V must be positive");
  GovernanceTech::make(econ.gov.eta, econ.gov.c0, econ.gov.tau, econ.gov.Lambda0);
}

}  // namespace civspec
