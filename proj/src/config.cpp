#include "kirchhoff/config.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace kirchhoff {

DomainSpec RunConfig::domain() const {
    if (dim == 1) return DomainSpec::interval(lower, upper, n);
    return DomainSpec::rectangle(lower, upper, n, lower2, upper2, n2);
}

GridField RunConfig::source_field() const {
    const DomainSpec spec = domain();
    switch (source_kind) {
        case SourceKind::constant:
            return GridField::constant(spec, source_constant);
        case SourceKind::profile: {
            if (source_name == "eigen") {
                // First Dirichlet eigenfunction of the box, positive inside.
                const double lx = upper - lower, ly = upper2 - lower2;
                return GridField::from_function(spec, [&](double x, double y) {
                    double v = std::sin(std::numbers::pi * (x - lower) / lx);
                    if (spec.dimension == 2)
                        v *= std::sin(std::numbers::pi * (y - lower2) / ly);
                    return v;
                });
            }
            throw ValidationError("f", "unknown profile '" + source_name + "'");
        }
        case SourceKind::file: {
            std::ifstream in(source_name);
            if (!in)
                throw ValidationError("f", "cannot open node-value file '" + source_name + "'");
            std::vector<double> v;
            v.reserve(spec.node_count());
            double x = 0.0;
            while (in >> x) v.push_back(x);
            if (static_cast<int>(v.size()) != spec.node_count())
                throw ValidationError("f", "node-value file has " + std::to_string(v.size()) +
                                               " values, grid needs " +
                                               std::to_string(spec.node_count()));
            return GridField(spec, std::move(v));
        }
    }
    throw ValidationError("f", "unreachable source kind");
}

namespace {

double parse_real(const std::string& s, int line) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected a real number, got '" + s + "'");
    }
    if (pos != s.size())
        throw ParseError(line, "trailing characters after number in '" + s + "'");
    return v;
}

int parse_int(const std::string& s, int line) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + s + "'");
    }
    if (pos != s.size())
        throw ParseError(line, "trailing characters after integer in '" + s + "'");
    return static_cast<int>(v);
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

void parse_source(RunConfig& cfg, const std::string& value, int line) {
    const auto colon = value.find(':');
    if (colon == std::string::npos)
        throw ParseError(line, "source must be constant:<c>, profile:<name>, or file:<path>");
    const std::string kind = value.substr(0, colon);
    const std::string rest = value.substr(colon + 1);
    if (kind == "constant") {
        cfg.source_kind = SourceKind::constant;
        cfg.source_constant = parse_real(rest, line);
        if (!(cfg.source_constant > 0.0))
            throw ValidationError("f", "constant source must be positive");
    } else if (kind == "profile") {
        cfg.source_kind = SourceKind::profile;
        cfg.source_name = rest;
    } else if (kind == "file") {
        cfg.source_kind = SourceKind::file;
        cfg.source_name = rest;
    } else {
        throw ParseError(line, "unknown source kind '" + kind + "'");
    }
}

}  // namespace

RunConfig parse_config(std::istream& text) {
    RunConfig cfg;
    std::set<std::string> seen;
    std::string raw;
    int line = 0;
    while (std::getline(text, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError(line, "expected key = value");
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty()) throw ParseError(line, "empty key");
        if (value.empty()) throw ParseError(line, "empty value for key '" + key + "'");
        if (!seen.insert(key).second)
            throw ParseError(line, "duplicate key '" + key + "'");

        if (key == "dim") cfg.dim = parse_int(value, line);
        else if (key == "lower") cfg.lower = parse_real(value, line);
        else if (key == "upper") cfg.upper = parse_real(value, line);
        else if (key == "n") cfg.n = parse_int(value, line);
        else if (key == "lower2") cfg.lower2 = parse_real(value, line);
        else if (key == "upper2") cfg.upper2 = parse_real(value, line);
        else if (key == "n2") cfg.n2 = parse_int(value, line);
        else if (key == "f") parse_source(cfg, value, line);
        else if (key == "a") cfg.a = parse_real(value, line);
        else if (key == "b") cfg.b = parse_real(value, line);
        else if (key == "mu") cfg.mu = parse_real(value, line);
        else if (key == "mu_min") cfg.mu_min = parse_real(value, line);
        else if (key == "mu_max") cfg.mu_max = parse_real(value, line);
        else if (key == "mu_steps") cfg.mu_steps = parse_int(value, line);
        else if (key == "cg_tol") cfg.cg_tol = parse_real(value, line);
        else if (key == "double_root_tol") {
            cfg.double_root_tol = parse_real(value, line);
            if (!(cfg.double_root_tol >= 0.0))
                throw ValidationError("double_root_tol", "must be nonnegative");
        }
        else if (key == "out_dir") cfg.out_dir = value;
        else throw ParseError(line, "unknown key '" + key + "'");
    }

    // Field validation.
    if (cfg.dim != 1 && cfg.dim != 2)
        throw ValidationError("dim", "must be 1 or 2");
    if (!(cfg.upper > cfg.lower))
        throw ValidationError("upper", "must exceed lower");
    if (cfg.n < 3)
        throw ValidationError("n", "must be at least 3");
    if (cfg.dim == 2) {
        if (!(cfg.upper2 > cfg.lower2))
            throw ValidationError("upper2", "must exceed lower2");
        if (cfg.n2 < 3)
            throw ValidationError("n2", "must be at least 3");
    }
    if (!(cfg.a > 0.0)) throw ValidationError("a", "must be positive");
    if (!(cfg.b > 0.0)) throw ValidationError("b", "must be positive");
    if (!(cfg.cg_tol > 0.0 && cfg.cg_tol < 1.0))
        throw ValidationError("cg_tol", "must lie in (0, 1)");

    const bool range_partial =
        cfg.mu_min.has_value() || cfg.mu_max.has_value() || cfg.mu_steps.has_value();
    const bool range_full =
        cfg.mu_min.has_value() && cfg.mu_max.has_value() && cfg.mu_steps.has_value();
    if (cfg.mu.has_value() && range_partial)
        throw ValidationError("mu", "mu and mu-range are mutually exclusive");
    if (range_partial && !range_full)
        throw ValidationError("mu_min", "mu-range needs mu_min, mu_max and mu_steps");
    if (range_full) {
        if (!(*cfg.mu_max >= *cfg.mu_min))
            throw ValidationError("mu_max", "must be at least mu_min");
        if (*cfg.mu_steps < 2)
            throw ValidationError("mu_steps", "must be at least 2");
    }
    return cfg;
}

RunConfig parse_config(const std::string& text) {
    std::istringstream in(text);
    return parse_config(in);
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ValidationError("config", "cannot open '" + path + "'");
    return parse_config(in);
}

}  // namespace kirchhoff
