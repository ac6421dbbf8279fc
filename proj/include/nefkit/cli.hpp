// Testable command-line front end; the binary's main() is a thin wrapper.

#ifndef NEFKIT_CLI_HPP
#define NEFKIT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nefkit {

// argv without the program name.  Returns the process exit code:
// 0 success, 1 input error, 2 precondition failure, 3 internal invariant
// violation (or failed verification).
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nefkit

#endif
