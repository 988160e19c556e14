#pragma once

// Learning-cost technology and the objects derived from it: the feasible-scale
// frontier H, the inefficiency index lambda = 1/H, the coordination index
// Gamma, and the regularity constants that bound all of them.

#include <cstddef>
#include <span>
#include <string>

#include "civspec/simplex.hpp"

namespace civspec {

enum class LearningFamily { Rational, Exponential };

/// Strictly increasing, strictly concave learning cost with l(0) = 0, l(1) = 1.
///
///   Rational(c):     l(s) = (1 + c) s / (1 + c s)
///   Exponential(k):  l(s) = (1 - exp(-k s)) / (1 - exp(-k))
class LearningTech {
 public:
  static LearningTech rational(double c);
  static LearningTech exponential(double rate);
  /// `family` is "rational" or "exponential"; throws ErrorCode::Config otherwise.
  static LearningTech from_config(const std::string& family, double param);

  LearningFamily family() const noexcept { return family_; }
  double param() const noexcept { return param_; }
  std::string name() const;

  /// l(s) for s in [0, 1 + 1e-12]; exact at 0 and 1.
  double cost(double s) const;
  /// l'(s) on the same domain.
  double slope(double s) const;
  /// Bisection inverse on [0, 1] with |l(s) - y| <= 1e-12.
  double inverse(double y) const;

  /// Unchecked evaluation used inside bisection brackets that overshoot 1.
  double cost_unchecked(double s) const noexcept;

 private:
  LearningTech(LearningFamily family, double param) : family_(family), param_(param) {}

  LearningFamily family_;
  double param_;
};

struct LearningConstants {
  double ell_bar;    // l'(0)
  double ell_under;  // l'(1)
  double c_ell;      // certified lower bound for the learning-economies index
  double L_Gamma;    // Lipschitz constant of Gamma
  double theta_bar;  // coordination cutoff built from c_ell
};

inline constexpr std::size_t kDefaultConstantsGrid = 10'000;

/// Grid-minimizes (l(s) - s) / (s (1 - s)) with analytic endpoint limits.
/// Requires grid_size >= 1000; throws ErrorCode::Domain if c_ell <= 0.
LearningConstants learning_constants(const LearningTech& tech,
                                     std::size_t grid_size = kDefaultConstantsGrid);

/// H(pi): the largest H with sum_k l(H pi_k) = 1. Exactly 1 at corners.
double max_scale(const LearningTech& tech, const SimplexVector& pi);
double max_scale(const LearningTech& tech, std::span<const double> pi);

/// lambda(pi) = 1 / H(pi), in [1, l'(0)].
double lambda_index(const LearningTech& tech, std::span<const double> pi);

/// Gamma(z) = |z|_1 lambda(z / |z|_1), Gamma(0) = 0. Requires z >= 0.
double gamma_index(const LearningTech& tech, std::span<const double> z);

/// sum_k l(s_k); a bundle is feasible when this is <= 1 (+ slack).
double learning_load(const LearningTech& tech, std::span<const double> s);

/// Estimate of the learning-economies index inf (lambda(pi) - 1) / D(pi) over a
/// simplex grid of resolution 1/n. A grid minimum, so it is an upper estimate
/// of the true infimum; c_ell from learning_constants is the certified bound.
double kappa_estimate(const LearningTech& tech, std::size_t K, std::size_t n);

}  // namespace civspec
