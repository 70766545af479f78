#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tdpoly {

/// Runs one CLI invocation (arguments exclude the program name).
/// Exit codes: 0 success / PASS, 1 check FAIL (with a structured diff on
/// stdout), 2 input or usage errors (diagnostics on stderr).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tdpoly
