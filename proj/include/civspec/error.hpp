#pragma once

#include <stdexcept>
#include <string>

namespace civspec {

enum class ErrorCode {
  Domain,              // argument outside the mathematical domain
  Dimension,           // vector lengths disagree
  TwoDomainCase,       // K = 2 where the check needs K >= 3
  HypothesisViolated,  // a theorem hypothesis (e.g. theta < theta_bar) fails
  Infeasible,          // allocation violates learning or coordination feasibility
  DegenerateGroups,    // integrator mass is 0 or 1
  NonConvergence,
  BudgetExceeded,      // brute-force enumeration too large
  NonPositiveService,
  ZeroCoverage,
  DeviationFound,
  Config,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace civspec
