#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace subsplit::cli {

// args excludes the program name. Returns the process exit code:
// 0 success, 1 budget exhausted / no solution / failed fixture check,
// 2 invalid input or usage.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string usage();

} // namespace subsplit::cli
