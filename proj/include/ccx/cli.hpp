#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ccx::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudgetExhausted = 3 };

// args excludes the program name. Results go to `out` unless --out names a
// file; diagnostics go to `err`.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(const std::vector<std::string>& args);

}  // namespace ccx::cli
