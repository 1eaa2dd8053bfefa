#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kuga::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage_error = 2 };

// Runs one kuga-sing invocation. args excludes the program name. The report
// goes to --out if given, otherwise to out; diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace kuga::cli
