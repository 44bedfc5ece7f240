#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace latdense {

// Runs one command-line invocation; args excludes the program name.
// Returns the process exit code: 0 success, 1 invalid input or unattainable
// request, 2 usage error. All output is written to the given streams and is
// byte-identical across runs for identical inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace latdense
