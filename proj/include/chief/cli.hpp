#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chief {

/// Runs one CLI invocation. `args` is the command line without the program
/// name, in natural order. Exit codes: 0 ok, 1 violation found,
/// 2 usage/input error, 3 cap exceeded.
int cli_dispatch(std::vector<std::string> args, std::ostream& out,
                 std::ostream& err);

} // namespace chief
