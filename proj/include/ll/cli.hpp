#pragma once

#include <string>
#include <vector>

namespace ll::cli {

/// Dispatches the verification and solver subcommands; returns the process
/// exit code (0 all checks pass, 1 any fail/error, 2 usage errors).
int run(const std::vector<std::string>& args);
int run(int argc, char** argv);

}  // namespace ll::cli
