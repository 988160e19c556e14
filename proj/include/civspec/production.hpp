#pragma once

// Specialist designs, coordination gaps, integrator sizing and output.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "civspec/economy.hpp"
#include "civspec/simplex.hpp"

namespace civspec {

/// Input atom of a design. `weight` is a mastery weight; `scale` overrides the
/// full-budget scale H(direction) and is only meant for test allocations.
struct DesignAtom {
  SimplexVector direction;
  double weight;
  std::optional<double> scale;
};

/// Resolved atom: the scale is always explicit.
struct ResolvedAtom {
  SimplexVector direction;
  double weight;
  double scale;
};

/// Finite mastery-weighted direction distribution of the specialist layer.
class SpecialistDesign {
 public:
  /// Weights must be nonnegative and sum to 1 within 1e-10 (then renormalized).
  /// Throws ErrorCode::Domain / ErrorCode::Dimension otherwise.
  static SpecialistDesign make(std::vector<DesignAtom> atoms, const LearningTech& tech);
  /// Corner specialists with mastery weights x_k (zero weights dropped).
  static SpecialistDesign corners(const SimplexVector& x);

  const std::vector<ResolvedAtom>& atoms() const noexcept { return atoms_; }
  std::size_t K() const noexcept { return atoms_.front().direction.size(); }
  /// Mean direction x = sum_j w_j pi_j.
  const SimplexVector& mean() const noexcept { return mean_; }
  /// Headcount shares mu_j, proportional to w_j / scale_j.
  Vec population_shares() const;
  bool all_corners(double tol = 1e-12) const noexcept;

 private:
  SpecialistDesign(std::vector<ResolvedAtom> atoms, SimplexVector mean)
      : atoms_(std::move(atoms)), mean_(std::move(mean)) {}

  std::vector<ResolvedAtom> atoms_;
  SimplexVector mean_;
};

struct Allocation {
  double m;  // integrator mass in [0, 1]
  SpecialistDesign design;
  KnowledgeBundle integrator_profile;
  double broadening = 0.0;
};

/// gamma = (|s|_1 mix - s)^+.
KnowledgeBundle gap_vector(std::span<const double> s, const SimplexVector& mix);

struct GapAggregate {
  KnowledgeBundle G;
  double g;
  std::optional<SimplexVector> h;  // empty when there is no interface (g = 0)
};

/// Gaps per unit of specialist headcount, before the (1 - m) factor.
GapAggregate specialist_gaps(const SpecialistDesign& design);
/// Aggregate gaps of the allocation (specialist mass 1 - m).
GapAggregate aggregate_gaps(const Allocation& alloc);

/// J_i = min over {k : h_k > 0} of s_k / h_k.
double integrator_capacity(std::span<const double> s, const SimplexVector& h);

/// Smallest integrator mass that covers the design's gaps, with integrators
/// at the bottleneck-free profile H(h) h.
Allocation minimal_integrator_allocation(const SpecialistDesign& design,
                                         const Economy& econ);

/// Aggregate specialist knowledge S.
KnowledgeBundle specialist_aggregate(const Allocation& alloc);

/// m J_i - theta g; nonnegative for feasible allocations, zero when binding.
double coordination_slack(const Allocation& alloc, const Economy& econ);

/// Y = V C(S, |S|_1 q). Throws ErrorCode::Infeasible if a learning budget or
/// the coordination constraint is violated beyond 1e-10.
double output_of(const Allocation& alloc, const Economy& econ);

struct ReducedForm {
  double Y;
  double m;
  double gamma;  // Gamma(x (1 - x))
  std::optional<SimplexVector> h;
  KnowledgeBundle G;
  bool hypothesis_ok;  // theta < theta_bar
};

/// Corner-design reduced form at mix x.
ReducedForm reduced_form(const SimplexVector& x, const Economy& econ);

struct ProductiveOptimum {
  SimplexVector h_star;
  double m_star;
  double Y_star;
  double H_hstar;
  Allocation allocation;
};

/// h*_k = q_k (1 - q_k) / D(q). Throws ErrorCode::HypothesisViolated when
/// theta >= theta_bar or q is not strictly interior.
ProductiveOptimum productive_optimum(const Economy& econ);

/// E_nu[lambda(pi)].
double expected_lambda(const SpecialistDesign& design, const LearningTech& tech);
/// z_nu(x) = E_nu[(x - pi)^+].
KnowledgeBundle z_nu(const SpecialistDesign& design, const SimplexVector& x);
/// Replace every atom by corners carrying its coordinates as weights.
SpecialistDesign cornerize(const SpecialistDesign& design);

struct BruteForceOptions {
  std::size_t resolution = 8;         // direction grid 1/n
  std::size_t weight_resolution = 8;  // mastery weights in multiples of 1/n
  std::size_t max_atoms = 3;
  std::size_t max_evaluations = 5'000'000;
};

struct BruteForceResult {
  SimplexVector x;
  SpecialistDesign design;
  double Y;
  double m;
  std::size_t evaluated;
  double grid_tolerance;  // Lipschitz modulus of Y times grid spacing
};

/// Number of designs the enumerator would evaluate.
std::size_t brute_force_cost(std::size_t K, const BruteForceOptions& opts);

/// Visits every design with up to opts.max_atoms distinct grid directions and
/// positive weights in multiples of 1 / opts.weight_resolution. Throws
/// ErrorCode::BudgetExceeded when the count exceeds opts.max_evaluations.
void for_each_grid_design(const Economy& econ, const BruteForceOptions& opts,
                          const std::function<void(const SpecialistDesign&)>& visit);

/// Exhaustive search over grid designs with minimal integrators. Ties go to the
/// lexicographically smallest x. Throws ErrorCode::BudgetExceeded when the
/// design count exceeds opts.max_evaluations.
BruteForceResult brute_force_design(const Economy& econ, const BruteForceOptions& opts);

}  // namespace civspec
