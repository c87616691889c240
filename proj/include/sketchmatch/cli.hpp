#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace sketchmatch {

// Entry point behind the sketchmatch binary; args exclude the program name.
// Returns the process exit code: 0 success, 1 usage error, 2 data error,
// 3 numeric failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace sketchmatch
