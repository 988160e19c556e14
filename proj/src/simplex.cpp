#include "civspec/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "civspec/error.hpp"

namespace civspec {

SimplexVector SimplexVector::normalized(std::span<const double> values) {
  if (values.size() < 2) {
    fail(ErrorCode::Domain, "simplex vector needs K >= 2 entries");
  }
  double total = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      fail(ErrorCode::Domain, "simplex entries must be finite and nonnegative");
    }
    total += v;
  }
  if (total <= 0.0) fail(ErrorCode::Domain, "simplex vector has zero mass");
  Vec out(values.begin(), values.end());
  for (double& v : out) v /= total;
  return SimplexVector(std::move(out));
}

SimplexVector SimplexVector::corner(std::size_t K, std::size_t k) {
  if (K < 2 || k >= K) fail(ErrorCode::Domain, "invalid corner index");
  Vec v(K, 0.0);
  v[k] = 1.0;
  return SimplexVector(std::move(v));
}

SimplexVector SimplexVector::uniform(std::size_t K) {
  if (K < 2) fail(ErrorCode::Domain, "simplex vector needs K >= 2 entries");
  return SimplexVector(Vec(K, 1.0 / static_cast<double>(K)));
}

double SimplexVector::min() const noexcept {
  return *std::min_element(v_.begin(), v_.end());
}

double SimplexVector::max() const noexcept {
  return *std::max_element(v_.begin(), v_.end());
}

KnowledgeBundle::KnowledgeBundle(Vec values) : v_(std::move(values)) {
  for (double v : v_) {
    if (!std::isfinite(v) || v < 0.0) {
      fail(ErrorCode::Domain, "knowledge stocks must be finite and nonnegative");
    }
  }
}

KnowledgeBundle KnowledgeBundle::scaled(const SimplexVector& direction,
                                        double scale) {
  Vec v(direction.begin(), direction.end());
  for (double& x : v) x *= scale;
  return KnowledgeBundle(std::move(v));
}

double KnowledgeBundle::mass() const noexcept { return l1_norm(v_); }

double l1_norm(std::span<const double> v) noexcept {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double l1_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) fail(ErrorCode::Dimension, "l1_distance: size mismatch");
  double s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::abs(a[k] - b[k]);
  return s;
}

double dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) fail(ErrorCode::Dimension, "dot: size mismatch");
  return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}

double simplex_deviation(std::span<const double> values) noexcept {
  return std::abs(std::accumulate(values.begin(), values.end(), 0.0) - 1.0);
}

namespace {

void grid_rec(std::size_t K, std::size_t n, std::size_t k, std::size_t left,
              std::vector<std::size_t>& counts, std::vector<SimplexVector>& out) {
  if (k + 1 == K) {
    counts[k] = left;
    Vec v(K);
    for (std::size_t j = 0; j < K; ++j) {
      v[j] = static_cast<double>(counts[j]) / static_cast<double>(n);
    }
    out.push_back(SimplexVector::normalized(v));
    return;
  }
  for (std::size_t c = 0; c <= left; ++c) {
    counts[k] = c;
    grid_rec(K, n, k + 1, left - c, counts, out);
  }
}

}  // namespace

std::vector<SimplexVector> simplex_grid(std::size_t K, std::size_t n) {
  if (K < 2 || n == 0) fail(ErrorCode::Domain, "simplex_grid: need K >= 2, n >= 1");
  std::vector<SimplexVector> out;
  std::vector<std::size_t> counts(K, 0);
  grid_rec(K, n, 0, n, counts, out);
  return out;
}

}  // namespace civspec
