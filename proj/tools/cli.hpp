#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pwt {

/// Runs one CLI invocation (args exclude the program name).
/// Exit codes: 0 success, 1 validation/spec error, 2 cap reached under
/// --require-finite, 3 I/O error.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pwt
