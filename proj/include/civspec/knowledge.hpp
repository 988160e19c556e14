#pragma once

#include <span>

#include "civspec/learning.hpp"
#include "civspec/simplex.hpp"

namespace civspec {

/// Civic relevance profile u (strictly interior) and breadth exponent p > 0.
struct CivicParams {
  SimplexVector u;
  double p;

  /// Throws ErrorCode::Domain unless min u > 0 and p > 0.
  static CivicParams make(SimplexVector u, double p);
};

/// C(a, b) = sum_k min(a_k, b_k).
double coverage(std::span<const double> a, std::span<const double> b);

/// B = |s|_1^p C(s / |s|_1, u), with B = 0 for the empty bundle.
double system_knowledge(std::span<const double> s, const CivicParams& civ);

/// D(pi) = 1 - sum pi_k^2.
double fragmentation(std::span<const double> pi) noexcept;

struct DiffuseCheck {
  bool holds;
  double bound;  // p must lie strictly below this value
};

/// Diffuse-civic-relevance test:
///   0 < p < log((u_(1) + u_(2)) / u_(K)) / (-log(K l^{-1}(1/K))).
/// Throws ErrorCode::TwoDomainCase for K = 2.
DiffuseCheck check_diffuse(const CivicParams& civ, const LearningTech& tech);

/// Ascending order statistics of u.
Vec order_statistics(std::span<const double> u);

}  // namespace civspec
