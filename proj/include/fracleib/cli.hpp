#pragma once

#include <ostream>

namespace fracleib {

// Full command-line front end. Returns the process exit code:
// 0 success, 2 parse error, 3 domain error, 4 tolerance failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace fracleib
