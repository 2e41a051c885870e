#ifndef MILNOR_CLI_HPP
#define MILNOR_CLI_HPP

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "milnor/magnus.hpp"

namespace milnor::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitBadInput = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

// Environment variable holding the default degree cap (integer >= 2).
inline constexpr const char* kDegreeCapEnv = "MILNOR_DEGREE_CAP";

enum class OutputFormat { json, text };

struct RunConfig {
  std::string subcommand;
  std::optional<std::string> input_path;  // informational; run() takes the bytes
  OutputFormat output = OutputFormat::json;
  std::optional<std::uint64_t> seed;
  bool show_series = false;
  int degree_cap = kDefaultDegreeCap;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;
};

const std::vector<std::string>& subcommands();

// Parses the degree-cap environment value; nullopt when unset. Throws
// InputError for anything but an integer >= 2.
std::optional<int> degree_cap_from_env(const char* value);

// Executes one subcommand on a JSON document. Never throws: failures become
// {"error": code, "detail": message} with exit 2 (bad input), 3 (violated
// precondition) or 4 (internal cross-check mismatch).
RunResult run(const RunConfig& config, std::string_view input);

// The error object and exit code run() reports for a failure: InputError and
// JSON errors give 2, PreconditionError 3, anything else 4.
RunResult error_result(const std::exception& e);

}  // namespace milnor::cli

#endif  // MILNOR_CLI_HPP
