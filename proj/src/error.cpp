#include "civspec/error.hpp"

namespace civspec {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Dimension: return "dimension";
    case ErrorCode::TwoDomainCase: return "two-domain-case";
    case ErrorCode::HypothesisViolated: return "hypothesis-violated";
    case ErrorCode::Infeasible: return "infeasible";
    case ErrorCode::DegenerateGroups: return "degenerate-groups";
    case ErrorCode::NonConvergence: return "non-convergence";
    case ErrorCode::BudgetExceeded: return "budget-exceeded";
    case ErrorCode::NonPositiveService: return "nonpositive-service";
    case ErrorCode::ZeroCoverage: return "zero-coverage";
    case ErrorCode::DeviationFound: return "deviation-found";
    case ErrorCode::Config: return "config";
  }
  return "unknown";
}

}  // namespace civspec
