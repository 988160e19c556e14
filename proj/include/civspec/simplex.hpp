#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace civspec {

using Vec = std::vector<double>;

/// Point of the probability simplex over K >= 2 knowledge domains.
///
/// Construction renormalizes the input so that the entries sum to one up to
/// round-off; negative entries or a zero total are rejected.
class SimplexVector {
 public:
  /// Renormalizes `values`. Throws ErrorCode::Domain on negative/non-finite
  /// entries, zero mass or K < 2.
  static SimplexVector normalized(std::span<const double> values);
  static SimplexVector corner(std::size_t K, std::size_t k);
  static SimplexVector uniform(std::size_t K);

  std::size_t size() const noexcept { return v_.size(); }
  double operator[](std::size_t k) const noexcept { return v_[k]; }
  std::span<const double> values() const noexcept { return v_; }
  operator std::span<const double>() const noexcept { return v_; }

  double min() const noexcept;
  double max() const noexcept;
  bool is_corner(double tol = 1e-9) const noexcept { return max() > 1.0 - tol; }
  bool is_interior() const noexcept { return min() > 0.0; }

  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

  friend bool operator==(const SimplexVector&, const SimplexVector&) = default;

 private:
  explicit SimplexVector(Vec v) : v_(std::move(v)) {}
  Vec v_;
};

/// Nonnegative knowledge stocks, one per domain.
class KnowledgeBundle {
 public:
  KnowledgeBundle() = default;
  /// Throws ErrorCode::Domain on negative or non-finite entries.
  explicit KnowledgeBundle(Vec values);
  static KnowledgeBundle zeros(std::size_t K) { return KnowledgeBundle(Vec(K, 0.0)); }
  static KnowledgeBundle scaled(const SimplexVector& direction, double scale);

  std::size_t size() const noexcept { return v_.size(); }
  double operator[](std::size_t k) const noexcept { return v_[k]; }
  std::span<const double> values() const noexcept { return v_; }
  operator std::span<const double>() const noexcept { return v_; }
  double mass() const noexcept;

  auto begin() const noexcept { return v_.begin(); }
  auto end() const noexcept { return v_.end(); }

 private:
  Vec v_;
};

double l1_norm(std::span<const double> v) noexcept;
double l1_distance(std::span<const double> a, std::span<const double> b);
double dot(std::span<const double> a, std::span<const double> b);

/// Largest |sum - 1| deviation of raw config values from the simplex.
double simplex_deviation(std::span<const double> values) noexcept;

/// All points of the simplex grid {k/n : sum k = n} in lexicographic order.
std::vector<SimplexVector> simplex_grid(std::size_t K, std::size_t n);

}  // namespace civspec
