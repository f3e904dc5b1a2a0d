#pragma once

#include <iosfwd>
#include <string>

#include "kirchhoff/config.hpp"
#include "kirchhoff/pipeline.hpp"

namespace kirchhoff {

/// Round-trip-safe numeric formatting (17 significant digits).
std::string fmt17(double x);

/// Solves at the config's single mu and writes <out_dir>/solve_report.txt.
/// Returns 0 on success; throws on pipeline failure.
int run_solve(const RunConfig& cfg, std::ostream& diag);

/// Sweeps the config's mu-range (one shared Poisson reduction) and writes
/// <out_dir>/bifurcation.csv with the fixed column schema
/// mu,regime,count,T1,T2,T3,norm_sq_1..3,energy_1..3,residual_1..3.
int run_bifurcation(const RunConfig& cfg, std::ostream& diag);

/// Runs the cross-module identity checks at the configured problem and
/// writes <out_dir>/verify_report.txt with one pass/fail line per check.
/// Returns 0 when every check passes, 3 otherwise.
int run_verify(const RunConfig& cfg, std::ostream& diag);

}  // namespace kirchhoff
