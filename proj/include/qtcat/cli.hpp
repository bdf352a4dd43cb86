#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qtcat::cli {

// Exit codes.
constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

// args excludes the program name. Results go to out (or --out), diagnostics
// to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qtcat::cli
