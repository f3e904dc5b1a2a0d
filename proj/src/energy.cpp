#include "kirchhoff/energy.hpp"

#include <cmath>

namespace kirchhoff {

void validate_params(const ProblemParams& p) {
    if (!(p.a > 0.0)) throw ValidationError("a", "must be positive");
    if (!(p.b > 0.0)) throw ValidationError("b", "must be positive");
    bool all_zero = true;
    for (double x : p.f.values()) {
        if (x < 0.0) throw InvalidSourceError("source has a negative node");
        if (x != 0.0) all_zero = false;
    }
    if (all_zero) throw DegenerateSourceError("source is identically zero");
}

const char* to_string(PSCase c) {
    switch (c) {
        case PSCase::no_sequence: return "no-sequence";
        case PSCase::low_band: return "low-band";
        case PSCase::mid_band: return "mid-band";
        case PSCase::noncompact_level: return "noncompact-level";
        case PSCase::high_band: return "high-band";
    }
    return "?";
}

double energy_eval(const ProblemParams& p, const GridField& u) {
    detail::require_same_domain(u, p.f, "energy_eval");
    const double s = h1_inner(u, u);
    return 0.5 * p.a * s - 0.25 * p.b * s * s - p.mu * l2_inner(p.f, u);
}

double gateaux(const ProblemParams& p, const GridField& u, const GridField& v) {
    detail::require_same_domain(u, p.f, "gateaux");
    detail::require_same_domain(v, p.f, "gateaux");
    return (p.a - p.b * h1_inner(u, u)) * h1_inner(u, v) - p.mu * l2_inner(p.f, v);
}

double critical_identity_residual(const ProblemParams& p, const GridField& u) {
    const double s = h1_inner(u, u);
    return std::abs(0.75 * p.b * s * s - 0.5 * p.a * s - energy_eval(p, u));
}

PSClassification ps_limit_norms(double a, double b, double c) {
    if (!(a > 0.0)) throw ValidationError("a", "must be positive");
    if (!(b > 0.0)) throw ValidationError("b", "must be positive");
    const double tol = energy_tolerance(a, b);
    const double c_min = -a * a / (12.0 * b);
    const double c_star = a * a / (4.0 * b);

    PSClassification out;
    if (c < c_min - tol) {
        out.ps_case = PSCase::no_sequence;
        return out;
    }
    // lim ||u_n||^2 = (a/3b)(1 +- sqrt(1 + 12bc/a^2)); clamp the tiny
    // negative discriminants that arise exactly at c = -a^2/(12b).
    const double disc = std::sqrt(std::max(0.0, 1.0 + 12.0 * b * c / (a * a)));
    const double base = a / (3.0 * b);
    const double plus = base * (1.0 + disc);
    const double minus = base * (1.0 - disc);

    if (c <= 0.0) {
        out.ps_case = PSCase::low_band;
        out.limit_norms_sq = {minus, plus};
    } else if (c < c_star - tol) {
        out.ps_case = PSCase::mid_band;
        out.limit_norms_sq = {plus};
    } else if (c <= c_star + tol) {
        out.ps_case = PSCase::noncompact_level;
        out.limit_norms_sq = {a / b};
    } else {
        out.ps_case = PSCase::high_band;
        out.limit_norms_sq = {plus};
    }
    return out;
}

ThresholdTable thresholds(double a, double b) {
    if (!(a > 0.0)) throw ValidationError("a", "must be positive");
    if (!(b > 0.0)) throw ValidationError("b", "must be positive");
    ThresholdTable t;
    t.norm_bands = {a / (3.0 * b), 2.0 * a / (3.0 * b), a / b, 4.0 * a / (3.0 * b)};
    t.energy_levels = {-a * a / (12.0 * b), 0.0, a * a / (9.0 * b), a * a / (4.0 * b),
                       a * a / b};
    t.mountain_radius = std::sqrt(2.0 * a / (3.0 * b));
    t.mountain_height = a * a / (9.0 * b);
    return t;
}

SobolevConstants sobolev_constants(double a, double b, double S, double norm_f, double mu) {
    if (!(a > 0.0) || !(b > 0.0) || !(S > 0.0) || !(norm_f > 0.0))
        throw ValidationError("sobolev_constants", "a, b, S, norm_f must be positive");
    SobolevConstants k;
    k.mu_star1 = a / (18.0 * b) * std::sqrt(6.0 * a * b * S) / norm_f;
    k.mu_star = a / (72.0 * b) * std::sqrt(3.0 * a * b * S) / norm_f;
    k.R = 2.0 / b * (a + std::sqrt(a * a + b * mu * mu * norm_f * norm_f / (2.0 * a * S)));
    return k;
}

const char* band_label(const ThresholdTable& t, double norm_sq) {
    if (norm_sq < t.norm_bands[0]) return "(0, a/(3b))";
    if (norm_sq < t.norm_bands[1]) return "(a/(3b), 2a/(3b))";
    if (norm_sq < t.norm_bands[2]) return "(2a/(3b), a/b)";
    if (norm_sq < t.norm_bands[3]) return "(a/b, 4a/(3b))";
    return "(4a/(3b), inf)";
}

}  // namespace kirchhoff
