#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace trel::cli {

// Exit codes shared by all commands.
inline constexpr int kSuccess = 0;
inline constexpr int kError = 1;     // usage, syntax, limit or internal error
inline constexpr int kNegative = 2;  // valid input, negative verdict
inline constexpr int kOpen = 3;      // tableau only: some branch stays open

using EnvLookup = std::function<std::optional<std::string>(std::string_view)>;

// Reads the process environment.
EnvLookup process_environment();

// Runs one invocation. args[0] is the program name. Results go to `out`,
// diagnostics to `err`.
int run(std::span<const std::string> args, std::istream& in, std::ostream& out, std::ostream& err,
        const EnvLookup& env);

}  // namespace trel::cli
