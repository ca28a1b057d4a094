#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace graphpoly {

// Entry point behind the command-line binary, callable in-process for tests.
// Returns the process exit code: 0 success (or VALID / found / table
// printed), 1 invalid certificate or no certificate found, 2 malformed
// input, 3 a size limit was exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace graphpoly
