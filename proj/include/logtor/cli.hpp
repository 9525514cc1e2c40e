#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace logtor {

// Dispatches one CLI invocation.  Returns the process exit status: 0 on
// success, 1 on malformed input, 2 on a violated mathematical precondition.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace logtor
