#pragma once

#include <functional>
#include <limits>

#include "civspec/economy.hpp"
#include "civspec/politics.hpp"
#include "civspec/production.hpp"

namespace civspec {

/// log B_soc - [(1 - m) log B_S + m log B_M]; nonnegative by concavity.
double dispersion(double B_S, double B_M, double m);

/// (1 - m) log t_S + m log t_M. Throws ErrorCode::NonPositiveService.
double service_welfare(const PoliticalOutcome& out);

struct WelfareReport {
  double Y;
  double service_welfare;
  double dispersion;
  double W;  // (1 - tau) Y + service welfare
  double R;
  PoliticalOutcome outcome;
};

WelfareReport welfare_from_outcome(const PoliticalOutcome& out, double tau);
WelfareReport total_welfare(const Economy& econ, const Allocation& alloc);

/// One member of a differentiable family of economies and allocations.
struct FamilyPoint {
  Economy econ;
  Allocation alloc;
};

using Family = std::function<FamilyPoint(double)>;

struct DecomposeOptions {
  double step = 1e-5;
  double lo = -std::numeric_limits<double>::infinity();  // family domain
  double hi = std::numeric_limits<double>::infinity();
  double tolerance = 1e-4;
};

struct Decomposition {
  double at;
  double Y_prime;
  double B_prime;
  double D_prime;
  double RY_over_R;
  double RB_over_R;
  double productive;  // [(1 - tau) + R_Y / R] Y'
  double governance;  // (R_B / R) B_soc'
  double targeting;   // -D'
  double sum;
  double dW;          // finite difference of W itself
  double residual;    // |sum - dW|
  bool step_warning;  // residual above tolerance
};

/// Finite-difference decomposition of dW along `family` at `at`. Central
/// differences inside the domain, second-order one-sided ones at its edges.
Decomposition decompose_along(const Family& family, double at, const DecomposeOptions& opts = {});

struct CivicBenchmark {
  double B_max;
  SimplexVector argmax;
};

/// max over pi of H(pi)^p C(pi, u): simplex grid of the given resolution,
/// then pairwise coordinate refinement.
CivicBenchmark civic_benchmark(const CivicParams& civ, const LearningTech& tech,
                               std::size_t resolution);

}  // namespace civspec
