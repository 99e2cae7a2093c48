#ifndef TDEG_CLI_HPP
#define TDEG_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace tdeg::cli
{

inline constexpr int exit_ok = 0;
inline constexpr int exit_invalid = 2;
inline constexpr int exit_gap_failure = 3;

// Runs one invocation. args excludes the program name. Reads the problem
// from --input or, when absent, from in.
int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err);

} // namespace tdeg::cli

#endif
