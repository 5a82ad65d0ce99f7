#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace stabctab::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsageError = 2 };

/// Upper limit on truncation orders accepted from the command line:
/// STABCTAB_MAX_ORDER if set, otherwise kDefaultMaxOrder.
constexpr int kDefaultMaxOrder = 32;
int max_order();

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace stabctab::cli
