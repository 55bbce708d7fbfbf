#pragma once

#include <string>

#include "cli/config.hpp"

namespace trapps::cli {

// dispatch one subcommand; returns the process exit code (0 success,
// 4 reference-comparison failure); validation and numerical errors throw
int run_command(const std::string& cmd, const RunConfig& cfg);

} // namespace trapps::cli
