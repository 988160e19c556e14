#include "civspec/sampling.hpp"

#include <cmath>

#include "civspec/error.hpp"

namespace civspec {

double random_uniform(Rng& rng, double lo, double hi) {
  // 53-bit draw straight from the engine.
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
  return lo + (hi - lo) * u;
}

SimplexVector random_simplex(Rng& rng, std::size_t K) {
  Vec v(K);
  for (double& x : v) x = -std::log1p(-random_uniform(rng, 0.0, 1.0));
  return SimplexVector::normalized(v);
}

SimplexVector random_interior_simplex(Rng& rng, std::size_t K, double floor) {
  if (!(floor >= 0.0) || floor * static_cast<double>(K) >= 1.0) {
    fail(ErrorCode::Domain, "random_interior_simplex: floor too large");
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    SimplexVector s = random_simplex(rng, K);
    if (s.min() >= floor && s.min() > 0.0) return s;
  }
  fail(ErrorCode::NonConvergence, "random_interior_simplex: rejection sampling failed");
}

}  // namespace civspec
