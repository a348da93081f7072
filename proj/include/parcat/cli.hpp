#ifndef PARCAT_CLI_HPP
#define PARCAT_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace parcat::cli {

// Runs one invocation.  Exit codes: 0 success, 1 domain error, 2 usage
// error, 3 verification failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace parcat::cli

#endif
