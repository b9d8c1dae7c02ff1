#pragma once

#include <ostream>
#include <span>
#include <string>

namespace slanglex::cli {

/// Exit statuses of `run`.
inline constexpr int kOk = 0;
inline constexpr int kAnalysisError = 1;
inline constexpr int kUsageError = 2;

/// Runs one command line (without the program name). Summaries go to `out`,
/// diagnostics to `err`.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace slanglex::cli
