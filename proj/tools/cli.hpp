#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wavexfer::cli {

/// Runs one invocation; `args` excludes the program name. Returns the exit
/// code: 0 success, 1 validation error, 2 usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wavexfer::cli
