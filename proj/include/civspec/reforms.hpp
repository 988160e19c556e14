#pragma once

// Reform families around the productive optimum: broadening a share b of
// routine workers, shifting the civic profile toward the interface profile,
// and moving the integration cost theta.

#include <optional>
#include <vector>

#include "civspec/economy.hpp"
#include "civspec/production.hpp"
#include "civspec/welfare.hpp"

namespace civspec {

/// Share 1 - b of specialists at corners (headcount (1 - b) q_k), share b at the
/// broad profile H(q) q, integrators at minimal mass. Requires b in [0, 1].
Allocation broadening_allocation(double b, const Economy& econ);
Family broadening_family(const Economy& econ);

/// Closed form m(b) = theta (1 - b) D(q) / (H(h*) + theta (1 - b) D(q)).
double broadening_integrator_mass(double b, const Economy& econ);

enum class CutoffKind { Finite, AlwaysPositive, NeverPositive };

const char* to_string(CutoffKind kind) noexcept;

struct BroadeningDerivative {
  double derivative;       // dB_soc/db at b = 0
  double m_q;              // integrator mass at the productive optimum
  double broad_knowledge;  // H(q)^p C(q, u)
  double corner_knowledge; // q . u
  double B_M;
  double B_soc0;
  CutoffKind kind;
  double cutoff;           // theta_bar(q, u); meaningful only when kind == Finite
};

BroadeningDerivative broadening_derivative(const Economy& econ);

struct ExcessSpecializationReport {
  bool precondition;  // H(q)^p C(q, u) > q . u, i.e. p < p_bar_B
  double p_bar_B;
  std::vector<double> b_grid;
  std::vector<double> W_curve;
  double argmax_b;
  Decomposition at_zero;
  bool improves;       // W'(0) > 0
  std::optional<double> required_RB_over_R;  // value of R_B / R at which W'(0) = 0
  BroadeningDerivative derivative;
};

ExcessSpecializationReport excess_specialization_check(const Economy& econ,
                                                       const std::vector<double>& b_grid);

/// u_alpha = (1 - alpha) q + alpha h*(q).
SimplexVector interface_profile(const Economy& econ, double alpha);
/// alpha -> (economy with civic profile u_alpha, productive allocation).
Family interface_family(const Economy& econ);

struct InterfaceRow {
  double alpha;
  double B_S;
  double B_M;
  double B_soc;
  double W;
  double dBsoc_dalpha;
  double dW_dalpha;
  double dD_dalpha;
};

struct InterfaceStatics {
  double B_S_prime;     // [(sum q^2)^2 - sum q^3] / D(q)
  double B_M_prime;     // H(h*)^p [1 - C(h*, q)]
  double B_S_prime_fd;
  double B_M_prime_fd;
  std::vector<InterfaceRow> rows;
  bool uniform_q;
  std::optional<double> theta_small;  // largest theta with both slopes negative on the grid
};

InterfaceStatics interface_statics(const Economy& econ, const std::vector<double>& alpha_grid,
                                   bool search_threshold = true);

struct DispersionOrder {
  std::vector<double> theta;
  std::vector<double> m;
  std::vector<double> max_slope;  // max over alpha of |dD/dalpha|
  double M;                       // fitted constant: max of max_slope / m
};

/// Checks that |dD/dalpha| scales with m^q(theta) across the theta grid.
DispersionOrder dispersion_order(const Economy& econ, const std::vector<double>& theta_grid,
                                 const std::vector<double>& alpha_grid);

struct ThetaRow {
  double theta;
  double m;
  double Y;
  double B_soc;
  double W;
  double dm_closed;
  double dm_fd;
};

struct ThetaStatics {
  std::vector<ThetaRow> rows;
  bool m_increasing;
  bool Y_decreasing;
  bool B_soc_increasing;
  bool W_monotone;  // reported only
  double max_dm_error;
};

inline constexpr double kStrictMargin = 1e-12;

ThetaStatics theta_statics(const Economy& econ, const std::vector<double>& theta_grid);

/// n interior points theta_bar * i / (n + 1).
std::vector<double> default_theta_grid(const Economy& econ, std::size_t n = 50);
std::vector<double> linear_grid(double lo, double hi, std::size_t points);

}  // namespace civspec
