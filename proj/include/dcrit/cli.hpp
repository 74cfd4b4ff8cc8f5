#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dcrit {

/// Runs one command; `args` excludes the program name.
/// Exit codes: 0 all checks passed, 1 a check failed, 2 input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dcrit
