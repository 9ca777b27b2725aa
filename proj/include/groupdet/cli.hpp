#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "groupdet/group.hpp"

namespace groupdet::cli {

// Exit codes of the command-line tool.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

// Runs the tool with argv-style arguments (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Subgroup tokens accepted by --subgroup and --chain, resolved inside
// `within`:
//   G            the whole of `within`
//   Cn           generated by the smallest-index element of order n
//   {a, b, ...}  generated by the named (or numbered) elements
//   0,4          generated by element indices
Subgroup resolve_subgroup(const std::string& token, const Subgroup& within);

// Splits at commas that are not inside braces or parentheses.
std::vector<std::string> split_top_level(const std::string& text);

}  // namespace groupdet::cli
