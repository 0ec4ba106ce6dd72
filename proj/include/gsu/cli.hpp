#ifndef GSU_CLI_HPP
#define GSU_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace gsu {

/// Runs a CLI invocation (without the program name). Exit code contract:
/// 0 success, 1 usage or I/O error, 2 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gsu

#endif
