#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "civspec/cli/scenario.hpp"

namespace civspec::cli {

enum class CheckStatus { Pass, Fail, Skipped, Info };

const char* to_string(CheckStatus s) noexcept;

struct CheckResult {
  std::string anchor;
  CheckStatus status;
  std::string detail;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  bool strict = false;  // all tolerances scaled by 0.1
};

struct VerifyReport {
  std::string scenario;
  std::uint64_t seed;
  bool strict;
  std::vector<CheckResult> checks;

  bool all_passed() const;
  std::size_t count(CheckStatus s) const;
  /// Deterministic text rendering: no timings, locale-free numbers.
  std::string render() const;
};

VerifyReport run_verify(const Scenario& sc, const VerifyOptions& opts);

}  // namespace civspec::cli
