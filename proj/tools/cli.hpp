#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fkext::cli {

enum ExitCode : int { kOk = 0, kNegative = 1, kError = 2 };

/// Runs one command line (without the program name). Output goes to `out`
/// unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// 12 significant digits.
std::string format_number(double x);

}  // namespace fkext::cli
