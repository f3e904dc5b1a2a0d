#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "kirchhoff/domain.hpp"

namespace kirchhoff {

/// How the source term f is produced.
enum class SourceKind { constant, profile, file };

/// Fully validated run configuration, parsed from flat `key = value` lines.
/// Exactly one of mu / mu-range may be present.
struct RunConfig {
    int dim = 1;
    double lower = 0.0, upper = 1.0;
    int n = 255;
    double lower2 = 0.0, upper2 = 1.0;
    int n2 = 255;

    SourceKind source_kind = SourceKind::constant;
    double source_constant = 1.0;
    std::string source_name;  // profile name or file path

    double a = 1.0;
    double b = 1.0;
    std::optional<double> mu;
    std::optional<double> mu_min, mu_max;
    std::optional<int> mu_steps;

    double cg_tol = 1e-10;
    double double_root_tol = -1.0;  // < 0: auto, 1e-10 * mu_crit
    std::string out_dir = ".";

    DomainSpec domain() const;
    /// Materializes the source field on the config's grid (reads the node
    /// file when source_kind == file).
    GridField source_field() const;
    bool has_mu_range() const { return mu_min.has_value(); }
};

/// Parses and validates the line-oriented `key = value` format
/// (# comments, blank lines allowed, unknown or duplicate keys rejected).
RunConfig parse_config(std::istream& text);
RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

}  // namespace kirchhoff
