#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace fluxlim {

/// Exit codes of the command-line front end.
enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 1,        // malformed arguments
    exit_validation = 2,   // inadmissible data, parameters or preconditions
    exit_numerical = 3,    // root finding or quadrature failure
    exit_convergence = 4,  // a sweep or residual assertion failed
};

/// Runs one command (`args` excludes the program name) and returns its exit code.
/// Tables and solutions go to `out`, diagnostics and usage to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Expands `--seed-config FILE`: every key of the JSON object becomes `--key value`
/// unless that flag is already present. Arrays are joined with ','. A "command"
/// key supplies the subcommand when none is given.
std::vector<std::string> expand_seed_config(const std::vector<std::string>& args);

}  // namespace fluxlim
