#pragma once

#include <string>
#include <vector>

namespace kirchhoff {

/// Runs the command-line front end: `solve <config>`, `bifurcate <config>`,
/// `verify <config>`, each with an optional `--out <dir>` override.
/// Exit codes: 0 ok, 1 validation, 2 solver failure, 3 verification failure.
int run_cli(const std::vector<std::string>& args);

}  // namespace kirchhoff
