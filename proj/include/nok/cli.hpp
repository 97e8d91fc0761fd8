#pragma once

// The `nok` command line. Exit codes: 0 success, 1 domain error, 2 input or
// usage error, 3 double-description limit (NOK_MAX_VERTICES) exceeded.

#include <ostream>
#include <string>
#include <vector>

namespace nok {

/// `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace nok
