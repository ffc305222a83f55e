#pragma once

#include <string>
#include <vector>

namespace nvcat {

struct CommandResult {
    int exit_code = 0;
    std::string output;  // stdout
    std::string error;   // stderr
};

/// Runs the command-line front end on argv-style arguments (args[0] is the program name).
/// Exit codes: 0 ok, 2 validation failure, 3 internal limit, 1 anything else.
CommandResult run_cli(const std::vector<std::string>& args);

}  // namespace nvcat
