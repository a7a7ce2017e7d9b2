#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fdepth {

inline constexpr const char* kVersion = "0.1.0";

// Runs the command line tool. args excludes the program name. Exit codes:
// 0 success, 1 data or compute error, 2 usage error. Errors are written to
// `err` as one JSON object per line.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fdepth
