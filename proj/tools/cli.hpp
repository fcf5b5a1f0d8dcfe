#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pairset::cli {

/// Exit codes: 0 computed, 1 domain or usage error, 2 budget refusal.
enum ExitCode : int { kOk = 0, kDomainError = 1, kBudgetRefused = 2 };

/// Runs one invocation. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pairset::cli
