#pragma once

#include <cstdint>
#include <random>

#include "civspec/simplex.hpp"

namespace civspec {

using Rng = std::mt19937_64;

/// Uniform draw from the simplex (normalized exponentials).
SimplexVector random_simplex(Rng& rng, std::size_t K);

/// Uniform draw conditioned on min_k pi_k >= floor.
SimplexVector random_interior_simplex(Rng& rng, std::size_t K, double floor);

double random_uniform(Rng& rng, double lo, double hi);

}  // namespace civspec
