#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace lefschetz {

inline constexpr std::string_view kVersion = "0.1.0";

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitPropertyFails = 1, kExitInputError = 2 };

/// Machine output of one invocation. Big integers are carried as decimal
/// strings inside `result`.
struct Report {
  std::vector<std::string> command;
  nlohmann::json result;
  std::uint64_t seed = 0;
  std::string version{kVersion};

  friend auto operator==(const Report &, const Report &) -> bool = default;
};

void to_json(nlohmann::json &j, const Report &r);
void from_json(const nlohmann::json &j, Report &r);

/// Parses argv (argv[0] is the program name), runs the subcommand and writes
/// one JSON document to `out`, or a table with --pretty. Diagnostics go to
/// `err`. Returns an ExitCode.
auto run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
    -> int;

} // namespace lefschetz
