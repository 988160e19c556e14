#include "civspec/knowledge.hpp"

#include <algorithm>
#include <cmath>

#include "civspec/error.hpp"

namespace civspec {

CivicParams CivicParams::make(SimplexVector u, double p) {
  if (!(u.min() > 0.0)) fail(ErrorCode::Domain, "civic profile u must be strictly interior");
  if (!(p > 0.0) || !std::isfinite(p)) fail(ErrorCode::Domain, "breadth exponent p must be positive");
  return CivicParams{std::move(u), p};
}

double coverage(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) fail(ErrorCode::Dimension, "coverage: size mismatch");
  double c = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) c += std::min(a[k], b[k]);
  return c;
}

double system_knowledge(std::span<const double> s, const CivicParams& civ) {
  if (s.size() != civ.u.size()) fail(ErrorCode::Dimension, "system_knowledge: size mismatch");
  const double mass = l1_norm(s);
  if (mass == 0.0) return 0.0;
  double c = 0.0;
  for (std::size_t k = 0; k < s.size(); ++k) c += std::min(s[k] / mass, civ.u[k]);
  return std::pow(mass, civ.p) * c;
}

double fragmentation(std::span<const double> pi) noexcept {
  double sq = 0.0;
  for (double v : pi) sq += v * v;
  return 1.0 - sq;
}

Vec order_statistics(std::span<const double> u) {
  Vec sorted(u.begin(), u.end());
  std::stable_sort(sorted.begin(), sorted.end());
  return sorted;
}

DiffuseCheck check_diffuse(const CivicParams& civ, const LearningTech& tech) {
  const std::size_t K = civ.u.size();
  if (K == 2) {
    fail(ErrorCode::TwoDomainCase,
         "diffuseness check needs K >= 3; with K = 2 the interface profile is (1/2, 1/2)");
  }
  const Vec u = order_statistics(civ.u.values());
  const double numerator = std::log((u[0] + u[1]) / u[K - 1]);
  const double Kd = static_cast<double>(K);
  const double denominator = -std::log(Kd * tech.inverse(1.0 / Kd));
  const double bound = numerator / denominator;
  return DiffuseCheck{civ.p > 0.0 && civ.p < bound, bound};
}

}  // namespace civspec
