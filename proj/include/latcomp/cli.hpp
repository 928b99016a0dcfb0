#pragma once

#include <string>
#include <vector>

namespace latcomp::cli {

// Runs one command given argv-style tokens (program name excluded) and
// returns the process exit code: 0 success, 1 failure (verification or any
// other error), 2 usage / malformed input, 3 resource guard tripped.
int run_cli(const std::vector<std::string>& args);

} // namespace latcomp::cli
