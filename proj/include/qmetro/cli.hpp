#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmetro::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitUsage = 2;

/// Runs one invocation; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a..b" or "a" into an inclusive range.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

}  // namespace qmetro::cli
