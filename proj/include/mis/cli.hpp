#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mis::cli {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCounterexample = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation. args excludes the program name. Output is
/// deterministic for identical arguments and input.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Parses "3", "2..5" or "all" into a list of sizes; "all" means 1..n.
/// Returns nullopt on malformed text.
std::optional<std::vector<int>> parse_size_list(std::string_view text, int n);

}  // namespace mis::cli
