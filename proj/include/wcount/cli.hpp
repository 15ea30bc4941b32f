#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace wcount::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kResourceLimit = 2 };

/// Outcome of one invocation. Exactly one of json_payload / csv_payload is used on success.
struct CommandResult {
    std::string command;
    nlohmann::json params = nlohmann::json::object();
    nlohmann::json json_payload;
    std::string csv_payload;
    bool is_csv = false;
    std::string error;
    int exit_code = kOk;
};

/// Parses and runs a command line (without the program name).
CommandResult run_command(const std::vector<std::string>& args);

/// run_command plus printing: payload to `out`, diagnostics to `err`. Returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Environment variable overriding the default --budget.
inline constexpr const char* kBudgetEnv = "WCOUNT_BUDGET";

}  // namespace wcount::cli
