#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bohr::cli {

/// Entry point shared by the binary and the tests. Exit codes:
///   0 success, 1 verification violation, 2 solver/config error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace bohr::cli
