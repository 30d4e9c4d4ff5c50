#ifndef BPDL_TOOLS_CLI_HPP_
#define BPDL_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace bpdl::cli {

// Runs one command line (args[0] is the program name). Returns the exit code:
// 0 SAT/VALID/success, 1 UNSAT/NOT_VALID/rejected, 2 usage or input errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bpdl::cli

#endif  // BPDL_TOOLS_CLI_HPP_
