#pragma once

// Scalar root finding, maximization and finite-difference helpers shared by
// every module. All routines are deterministic and allocation free.

#include <cmath>
#include <functional>
#include <optional>

namespace civspec::numeric {

struct RootResult {
  double x;
  double residual;
  int iterations;
  bool converged;
};

/// Bisection for an increasing-or-decreasing f with a sign change on [lo, hi].
/// Runs until the bracket stops shrinking in floating point or |f| <= ftol.
RootResult bisect(const std::function<double(double)>& f, double lo, double hi,
                  double ftol = 0.0, int max_iter = 200);

/// Newton's method safeguarded by a bracket [lo, hi] with f(lo) > 0 > f(hi) or
/// the reverse. Steps that leave the bracket fall back to bisection.
RootResult safeguarded_newton(const std::function<double(double)>& f,
                              const std::function<double(double)>& df,
                              double x0, double lo, double hi,
                              double ftol = 1e-12, int max_iter = 200);

struct MaxResult {
  double x;
  double value;
  int iterations;
};

/// Golden-section search for the maximum of a unimodal function on [lo, hi].
MaxResult golden_section_max(const std::function<double(double)>& f, double lo,
                             double hi, double xtol = 1e-10,
                             int max_iter = 500);

inline double central_difference(const std::function<double(double)>& f,
                                 double x, double step) {
  return (f(x + step) - f(x - step)) / (2.0 * step);
}

/// Second-order one-sided difference; sign of `step` selects the side.
inline double one_sided_difference(const std::function<double(double)>& f,
                                   double x, double step) {
  return (-3.0 * f(x) + 4.0 * f(x + step) - f(x + 2.0 * step)) / (2.0 * step);
}

/// Central difference when [x - step, x + step] fits inside [lo, hi], otherwise
/// a second-order one-sided difference pointing into the domain.
double derivative_in_domain(const std::function<double(double)>& f, double x,
                            double step, double lo, double hi);

}  // namespace civspec::numeric
