#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lrx {

/// Runs one CLI invocation (args exclude the program name).
/// Exit codes: 0 success / all hold, 1 mathematical failure, 2 usage or
/// parse error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lrx
