#pragma once

#include "civspec/economy.hpp"
#include "civspec/learning.hpp"

namespace civspec::testing {

inline Economy default_economy(double theta_fraction = 0.5, double c = 1.0) {
  const LearningTech tech = LearningTech::rational(c);
  const double tb = learning_constants(tech).theta_bar;
  return Economy{tech,
                 SimplexVector::normalized(Vec{0.5, 0.375, 0.125}),
                 CivicParams::make(SimplexVector::normalized(Vec{0.3, 0.35, 0.35}), 0.5),
                 theta_fraction * tb,
                 1.0,
                 GovernanceTech::make(0.5, 0.125, 0.3, 1.0)};
}

inline SimplexVector sv(Vec v) { return SimplexVector::normalized(v); }

}  // namespace civspec::testing
