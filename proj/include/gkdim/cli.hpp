#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gkdim::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kParseError = 1;
inline constexpr int kDomainError = 2;
inline constexpr int kOracleMismatch = 3;

// Runs the command line front end. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace gkdim::cli
