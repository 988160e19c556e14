#pragma once

#include <cstddef>

#include "civspec/governance.hpp"
#include "civspec/knowledge.hpp"
#include "civspec/learning.hpp"
#include "civspec/simplex.hpp"

namespace civspec {

/// Full primitive bundle of the model.
struct Economy {
  LearningTech tech;
  SimplexVector q;   // productive requirement profile, strictly interior
  CivicParams civ;   // civic profile u and breadth exponent p
  double theta;      // inverse efficiency of integration, > 0
  double V;          // productivity scale, > 0
  GovernanceTech gov;

  std::size_t K() const noexcept { return q.size(); }

  /// Same economy with a different civic profile.
  Economy with_civic_profile(SimplexVector u) const;
  Economy with_theta(double theta) const;
};

/// Throws ErrorCode::Domain / ErrorCode::Dimension on inconsistent primitives.
void validate(const Economy& econ);

}  // namespace civspec
