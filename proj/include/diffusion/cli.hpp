#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace diffusion::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitInputError = 2;

// Entry point for the `pardiff` tool. `args` excludes the program name.
// Subcommands: simulate, period, enumerate, render, map, count, verify.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace diffusion::cli
