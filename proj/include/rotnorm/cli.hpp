#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rotnorm::cli {

/// Runs one command line (without the program name). JSON results go to `out`,
/// structured errors to `err`. Returns 0 on success, 1 for bad input and 2 for
/// an internal inconsistency.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rotnorm::cli
