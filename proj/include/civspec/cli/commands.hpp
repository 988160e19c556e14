#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "civspec/cli/scenario.hpp"
#include "civspec/cli/verify.hpp"
#include "civspec/error.hpp"

namespace civspec::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kHypothesis = 2, kOracleFailure = 3 };

int exit_code_for(ErrorCode code) noexcept;

/// Human summary to `console`, header plus one row to `csv`.
void cmd_solve(const Scenario& sc, std::ostream& console, std::ostream& csv);

/// axis is one of "b", "alpha", "theta".
void cmd_sweep(const Scenario& sc, const std::string& axis, std::ostream& csv);

/// Writes the rendered report and returns kOk or kOracleFailure.
int cmd_verify(const Scenario& sc, const VerifyOptions& opts, std::ostream& out);

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace civspec::cli
