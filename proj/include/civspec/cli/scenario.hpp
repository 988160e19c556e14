#pragma once

// Flat key=value scenario files:
//
//   # comment
//   learning.family = rational        # or exponential
//   learning.param  = 1.0
//   K = 3                             # optional, checked against q and u
//   q = 0.5, 0.375, 0.125
//   u = 0.3, 0.35, 0.35
//   p = 0.5
//   theta_fraction = 0.5              # theta = fraction * theta_bar; or give theta
//   V = 1
//   gov.eta = 0.5
//   gov.c0 = 0.125
//   gov.tau = 0.3
//   gov.lambda0 = 1
//
// Optional: sweep.{b,alpha}.{min,max,points}, sweep.theta.points,
// oracle.{resolution,weight_resolution,atoms,max_evaluations,seed,starts,samples}.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "civspec/economy.hpp"
#include "civspec/production.hpp"

namespace civspec::cli {

struct SweepSpec {
  double min;
  double max;
  std::size_t points;
};

struct OracleBudget {
  BruteForceOptions design;
  std::uint64_t seed = 1;
  std::size_t starts = 10;    // best-response starting points
  std::size_t samples = 1000; // random draws per invariant
};

struct Scenario {
  std::string name;
  Economy econ;
  SweepSpec b{0.0, 0.9, 10};
  SweepSpec alpha{0.0, 1.0, 11};
  std::size_t theta_points = 50;
  OracleBudget oracle;
  std::vector<std::string> warnings;
};

/// Throws ErrorCode::Config with the offending key on any problem.
Scenario parse_scenario(const std::string& text, const std::string& name = "scenario");
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace civspec::cli
