#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "kirchhoff/domain.hpp"

namespace kirchhoff {

/// Coefficients and source of the nonlocal problem
/// -(a - b ||u||^2) lap u = mu f, with f >= 0 and f not identically zero.
struct ProblemParams {
    double a;
    double b;
    double mu;
    GridField f;
};

/// Validates a, b > 0 and the sign/nonzero constraints on f.
void validate_params(const ProblemParams& p);

/// Where a Palais-Smale sequence at level c can accumulate in squared norm.
enum class PSCase {
    no_sequence,       // c < -a^2/(12b): no admissible limit
    low_band,          // -a^2/(12b) <= c <= 0: both branches, in [0, 2a/(3b)]
    mid_band,          // 0 < c < a^2/(4b): + branch only, in (2a/(3b), a/b)
    noncompact_level,  // c = a^2/(4b): limit a/b, compactness fails here
    high_band,         // c > a^2/(4b): + branch only, above a/b
};

const char* to_string(PSCase c);

struct PSClassification {
    PSCase ps_case;
    std::vector<double> limit_norms_sq;  // 0-2 candidate values of lim ||u_n||^2
};

/// Closed-form landmark constants of the energy landscape.
struct ThresholdTable {
    std::array<double, 4> norm_bands;     // a/(3b), 2a/(3b), a/b, 4a/(3b)
    std::array<double, 5> energy_levels;  // -a^2/(12b), 0, a^2/(9b), a^2/(4b), a^2/b
    double mountain_radius;               // r = sqrt(2a/(3b))
    double mountain_height;               // rho = a^2/(9b)
};

/// Sufficient-condition thresholds that depend on the Sobolev constant S
/// (always supplied by the caller, never computed).
struct SobolevConstants {
    double mu_star1;  // a/(18b) sqrt(6abS) / ||f||
    double mu_star;   // a/(72b) sqrt(3abS) / ||f||, always < mu_star1
    double R;         // 2/b [a + sqrt(a^2 + b mu^2 ||f||^2 / (2aS))]
};

/// I(u) = (a/2)||u||^2 - (b/4)||u||^4 - mu * integral(f u).
double energy_eval(const ProblemParams& p, const GridField& u);

/// <I'(u), v> = (a - b||u||^2) (grad u, grad v) - mu * integral(f v).
double gateaux(const ProblemParams& p, const GridField& u, const GridField& v);

/// |(3b/4)||u||^4 - (a/2)||u||^2 - I(u)|, which equals |<I'(u), u>|;
/// vanishes exactly at critical points.
double critical_identity_residual(const ProblemParams& p, const GridField& u);

/// Candidate values of lim ||u_n||^2 = (a/(3b)) (1 +- sqrt(1 + 12bc/a^2))
/// for a Palais-Smale sequence at level c, with the five-case bookkeeping.
PSClassification ps_limit_norms(double a, double b, double c);

ThresholdTable thresholds(double a, double b);

SobolevConstants sobolev_constants(double a, double b, double S, double norm_f, double mu);

/// Scale-aware absolute tolerance for comparing energy levels.
inline double energy_tolerance(double a, double b) {
    return 1e-10 * std::max(1.0, a * a / b);
}

/// Which norm band a squared norm falls in, as a printable label.
const char* band_label(const ThresholdTable& t, double norm_sq);

}  // namespace kirchhoff
