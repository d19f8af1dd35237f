#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace littlewood::cli {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

/// Parses "123", "10^9" or "1e5" into an unsigned count.  Throws
/// std::invalid_argument on malformed input or overflow.
std::uint64_t parse_count(std::string_view text);

/// Runs the command line `args` (args[0] is the program name).  Regular output
/// goes to `out` unless --output names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace littlewood::cli
