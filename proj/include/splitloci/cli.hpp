#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace splitloci::cli {

/// Executes one command given argv-style arguments (without the program
/// name). Returns the process exit code: 0 success, 1 domain error (module
/// error message on err), 2 usage error. All output is deterministic for
/// fixed arguments.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace splitloci::cli
