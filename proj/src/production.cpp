#include "civspec/production.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "civspec/error.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/learning.hpp"

namespace civspec {

namespace {

constexpr double kWeightTol = 1e-10;
constexpr double kFeasTol = 1e-10;
constexpr double kNoGap = 1e-14;

}  // namespace

SpecialistDesign SpecialistDesign::make(std::vector<DesignAtom> atoms,
                                        const LearningTech& tech) {
  if (atoms.empty()) fail(ErrorCode::Domain, "design needs at least one atom");
  const std::size_t K = atoms.front().direction.size();
  double total = 0.0;
  for (const auto& a : atoms) {
    if (a.direction.size() != K) fail(ErrorCode::Dimension, "design atoms differ in K");
    if (!(a.weight >= 0.0) || !std::isfinite(a.weight)) {
      fail(ErrorCode::Domain, "design weights must be nonnegative");
    }
    if (a.scale && !(*a.scale > 0.0)) fail(ErrorCode::Domain, "atom scale must be positive");
    total += a.weight;
  }
  if (std::abs(total - 1.0) > kWeightTol) {
    fail(ErrorCode::Domain, "design weights must sum to 1");
  }
  std::vector<ResolvedAtom> resolved;
  resolved.reserve(atoms.size());
  Vec mean(K, 0.0);
  for (auto& a : atoms) {
    const double w = a.weight / total;
    const double s = a.scale ? *a.scale : max_scale(tech, a.direction);
    for (std::size_t k = 0; k < K; ++k) mean[k] += w * a.direction[k];
    resolved.push_back(ResolvedAtom{std::move(a.direction), w, s});
  }
  return SpecialistDesign(std::move(resolved), SimplexVector::normalized(mean));
}

SpecialistDesign SpecialistDesign::corners(const SimplexVector& x) {
  std::vector<ResolvedAtom> atoms;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] > 0.0) atoms.push_back({SimplexVector::corner(x.size(), k), x[k], 1.0});
  }
  return SpecialistDesign(std::move(atoms), x);
}

Vec SpecialistDesign::population_shares() const {
  Vec mu(atoms_.size());
  double total = 0.0;
  for (std::size_t j = 0; j < atoms_.size(); ++j) {
    mu[j] = atoms_[j].weight / atoms_[j].scale;
    total += mu[j];
  }
  for (double& v : mu) v /= total;
  return mu;
}

bool SpecialistDesign::all_corners(double tol) const noexcept {
  return std::all_of(atoms_.begin(), atoms_.end(), [tol](const ResolvedAtom& a) {
    return a.weight == 0.0 || a.direction.is_corner(tol);
  });
}

KnowledgeBundle gap_vector(std::span<const double> s, const SimplexVector& mix) {
  if (s.size() != mix.size()) fail(ErrorCode::Dimension, "gap_vector: size mismatch");
  const double mass = l1_norm(s);
  Vec g(s.size());
  for (std::size_t k = 0; k < s.size(); ++k) g[k] = std::max(0.0, mass * mix[k] - s[k]);
  return KnowledgeBundle(std::move(g));
}

namespace {

GapAggregate finish_gaps(Vec G) {
  const double g = l1_norm(G);
  std::optional<SimplexVector> h;
  if (g > kNoGap) h = SimplexVector::normalized(G);
  return GapAggregate{KnowledgeBundle(std::move(G)), g, std::move(h)};
}

}  // namespace

GapAggregate specialist_gaps(const SpecialistDesign& design) {
  const auto& atoms = design.atoms();
  const Vec mu = design.population_shares();
  const std::size_t K = design.K();
  Vec G(K, 0.0);
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    const double s = atoms[j].scale;
    for (std::size_t k = 0; k < K; ++k) {
      G[k] += mu[j] * s * std::max(0.0, design.mean()[k] - atoms[j].direction[k]);
    }
  }
  return finish_gaps(std::move(G));
}

GapAggregate aggregate_gaps(const Allocation& alloc) {
  GapAggregate per_unit = specialist_gaps(alloc.design);
  Vec G(per_unit.G.begin(), per_unit.G.end());
  for (double& v : G) v *= (1.0 - alloc.m);
  return finish_gaps(std::move(G));
}

double integrator_capacity(std::span<const double> s, const SimplexVector& h) {
  if (s.size() != h.size()) fail(ErrorCode::Dimension, "integrator_capacity: size mismatch");
  double J = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (h[k] > 0.0) J = std::min(J, s[k] / h[k]);
  }
  return J;
}

Allocation minimal_integrator_allocation(const SpecialistDesign& design,
                                         const Economy& econ) {
  const GapAggregate unit = specialist_gaps(design);
  if (!unit.h) {
    return Allocation{0.0, design, KnowledgeBundle::zeros(design.K()), 0.0};
  }
  const double H = max_scale(econ.tech, *unit.h);
  const double m = econ.theta * unit.g / (H + econ.theta * unit.g);
  return Allocation{m, design, KnowledgeBundle::scaled(*unit.h, H), 0.0};
}

KnowledgeBundle specialist_aggregate(const Allocation& alloc) {
  const auto& atoms = alloc.design.atoms();
  const Vec mu = alloc.design.population_shares();
  const std::size_t K = alloc.design.K();
  Vec S(K, 0.0);
  for (std::size_t j = 0; j < atoms.size(); ++j) {
    for (std::size_t k = 0; k < K; ++k) {
      S[k] += (1.0 - alloc.m) * mu[j] * atoms[j].scale * atoms[j].direction[k];
    }
  }
  return KnowledgeBundle(std::move(S));
}

double coordination_slack(const Allocation& alloc, const Economy& econ) {
  const GapAggregate gaps = aggregate_gaps(alloc);
  if (!gaps.h) return 0.0;
  return alloc.m * integrator_capacity(alloc.integrator_profile, *gaps.h) -
         econ.theta * gaps.g;
}

double output_of(const Allocation& alloc, const Economy& econ) {
  if (!(alloc.m >= 0.0 && alloc.m <= 1.0)) {
    fail(ErrorCode::Domain, "integrator mass must lie in [0, 1]");
  }
  if (alloc.design.K() != econ.K()) fail(ErrorCode::Dimension, "allocation K mismatch");
  if (learning_load(econ.tech, alloc.integrator_profile) > 1.0 + kFeasTol) {
    fail(ErrorCode::Infeasible, "integrator profile violates the learning constraint");
  }
  for (const auto& a : alloc.design.atoms()) {
    const KnowledgeBundle s = KnowledgeBundle::scaled(a.direction, a.scale);
    if (learning_load(econ.tech, s) > 1.0 + kFeasTol) {
      fail(ErrorCode::Infeasible, "specialist profile violates the learning constraint");
    }
  }
  if (coordination_slack(alloc, econ) < -kFeasTol) {
    fail(ErrorCode::Infeasible, "coordination constraint m J < theta g");
  }
  const KnowledgeBundle S = specialist_aggregate(alloc);
  const double HS = S.mass();
  if (HS == 0.0) return 0.0;
  Vec target(econ.q.begin(), econ.q.end());
  for (double& v : target) v *= HS;
  return econ.V * coverage(S, target);
}

ReducedForm reduced_form(const SimplexVector& x, const Economy& econ) {
  const std::size_t K = x.size();
  if (K != econ.K()) fail(ErrorCode::Dimension, "reduced_form: size mismatch");
  Vec z(K);
  for (std::size_t k = 0; k < K; ++k) z[k] = x[k] * (1.0 - x[k]);
  const double gamma = gamma_index(econ.tech, z);
  const double m = econ.theta * gamma / (1.0 + econ.theta * gamma);
  const double Y = econ.V * coverage(x, econ.q) / (1.0 + econ.theta * gamma);

  std::optional<SimplexVector> h;
  const double D = fragmentation(x);
  if (D > 0.0) h = SimplexVector::normalized(z);
  Vec G = z;
  for (double& v : G) v *= (1.0 - m);
  const bool ok = econ.theta < learning_constants(econ.tech).theta_bar;
  return ReducedForm{Y, m, gamma, std::move(h), KnowledgeBundle(std::move(G)), ok};
}

ProductiveOptimum productive_optimum(const Economy& econ) {
  if (!econ.q.is_interior()) {
    fail(ErrorCode::HypothesisViolated, "productive optimum needs a strictly interior q");
  }
  const LearningConstants lc = learning_constants(econ.tech);
  if (!(econ.theta < lc.theta_bar)) {
    fail(ErrorCode::HypothesisViolated,
         "theta must lie below the coordination cutoff theta_bar = " +
             std::to_string(lc.theta_bar));
  }
  const std::size_t K = econ.K();
  const double D = fragmentation(econ.q);
  Vec h(K);
  for (std::size_t k = 0; k < K; ++k) h[k] = econ.q[k] * (1.0 - econ.q[k]) / D;
  SimplexVector h_star = SimplexVector::normalized(h);
  const double H = max_scale(econ.tech, h_star);
  const double m = econ.theta * D / (H + econ.theta * D);
  const double Y = econ.V * H / (H + econ.theta * D);
  Allocation alloc{m, SpecialistDesign::corners(econ.q), KnowledgeBundle::scaled(h_star, H),
                   0.0};
  return ProductiveOptimum{std::move(h_star), m, Y, H, std::move(alloc)};
}

double expected_lambda(const SpecialistDesign& design, const LearningTech& tech) {
  double e = 0.0;
  for (const auto& a : design.atoms()) e += a.weight * lambda_index(tech, a.direction);
  return e;
}

KnowledgeBundle z_nu(const SpecialistDesign& design, const SimplexVector& x) {
  const std::size_t K = x.size();
  if (design.K() != K) fail(ErrorCode::Dimension, "z_nu: size mismatch");
  Vec z(K, 0.0);
  for (const auto& a : design.atoms()) {
    for (std::size_t k = 0; k < K; ++k) z[k] += a.weight * std::max(0.0, x[k] - a.direction[k]);
  }
  return KnowledgeBundle(std::move(z));
}

SpecialistDesign cornerize(const SpecialistDesign& design) {
  return SpecialistDesign::corners(design.mean());
}

namespace {

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double r = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    r *= static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(r);
}

// Compositions of `total` into `parts` positive integers.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t a = 1; a + parts - 1 <= total; ++a) {
    cur.push_back(a);
    compositions(total - a, parts - 1, cur, out);
    cur.pop_back();
  }
}

void subsets(std::size_t n, std::size_t k, std::size_t start, std::vector<std::size_t>& cur,
             const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == k) {
    visit(cur);
    return;
  }
  for (std::size_t i = start; i + (k - cur.size()) <= n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, visit);
    cur.pop_back();
  }
}

}  // namespace

std::size_t brute_force_cost(std::size_t K, const BruteForceOptions& opts) {
  const double N = binomial(opts.resolution + K - 1, K - 1);
  double total = 0.0;
  for (std::size_t a = 1; a <= opts.max_atoms; ++a) {
    total += binomial(static_cast<std::size_t>(N), a) * binomial(opts.weight_resolution - 1, a - 1);
  }
  return static_cast<std::size_t>(total);
}

void for_each_grid_design(const Economy& econ, const BruteForceOptions& opts,
                          const std::function<void(const SpecialistDesign&)>& visit) {
  if (opts.resolution == 0 || opts.weight_resolution == 0 || opts.max_atoms == 0) {
    fail(ErrorCode::Domain, "grid designs: resolutions and atom budget must be positive");
  }
  const std::size_t cost = brute_force_cost(econ.K(), opts);
  if (cost > opts.max_evaluations) {
    fail(ErrorCode::BudgetExceeded,
         "grid enumeration would evaluate " + std::to_string(cost) + " designs (budget " +
             std::to_string(opts.max_evaluations) +
             "); lower oracle.resolution, oracle.weight_resolution or oracle.atoms");
  }
  const auto grid = simplex_grid(econ.K(), opts.resolution);
  std::vector<double> scales(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) scales[i] = max_scale(econ.tech, grid[i]);

  for (std::size_t a = 1; a <= std::min(opts.max_atoms, grid.size()); ++a) {
    if (a > opts.weight_resolution) break;
    std::vector<std::vector<std::size_t>> weights;
    std::vector<std::size_t> cur;
    compositions(opts.weight_resolution, a, cur, weights);
    std::vector<std::size_t> idx;
    subsets(grid.size(), a, 0, idx, [&](const std::vector<std::size_t>& pick) {
      for (const auto& w : weights) {
        std::vector<DesignAtom> atoms;
        atoms.reserve(a);
        for (std::size_t j = 0; j < a; ++j) {
          atoms.push_back({grid[pick[j]],
                           static_cast<double>(w[j]) / static_cast<double>(opts.weight_resolution),
                           scales[pick[j]]});
        }
        visit(SpecialistDesign::make(std::move(atoms), econ.tech));
      }
    });
  }
}

BruteForceResult brute_force_design(const Economy& econ, const BruteForceOptions& opts) {
  std::optional<BruteForceResult> best;
  std::size_t evaluated = 0;
  constexpr double kTie = 1e-13;
  for_each_grid_design(econ, opts, [&](const SpecialistDesign& design) {
    const Allocation alloc = minimal_integrator_allocation(design, econ);
    const double Y = output_of(alloc, econ);
    ++evaluated;
    const auto& x = alloc.design.mean();
    const bool better =
        !best || Y > best->Y + kTie ||
        (Y >= best->Y - kTie &&
         std::lexicographical_compare(x.begin(), x.end(), best->x.begin(), best->x.end()));
    if (better) best = BruteForceResult{x, alloc.design, Y, alloc.m, 0, 0.0};
  });
  const LearningConstants lc = learning_constants(econ.tech);
  best->evaluated = evaluated;
  best->grid_tolerance = econ.V * (0.5 + econ.theta * lc.L_Gamma) * 2.0 /
                         static_cast<double>(opts.resolution);
  return *best;
}

}  // namespace civspec
