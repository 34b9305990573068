#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groupdef {

// Runs one command-line invocation (args excludes the program name).
// Returns the process exit code: 0 on success, 1 when a check reports a
// violation, 2 on usage or input errors.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace groupdef
