#include "kirchhoff/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace kirchhoff {

const char* to_string(RootRegime r) {
    switch (r) {
        case RootRegime::three: return "three";
        case RootRegime::two: return "two";
        case RootRegime::one: return "one";
        case RootRegime::mu_zero: return "mu-zero";
    }
    return "?";
}

const char* to_string(BracketPos b) {
    switch (b) {
        case BracketPos::below: return "below";
        case BracketPos::between: return "between";
        case BracketPos::above: return "above";
    }
    return "?";
}

static void require_positive_coeffs(double a, double b, double alpha) {
    if (!(a > 0.0)) throw ValidationError("a", "must be positive");
    if (!(b > 0.0)) throw ValidationError("b", "must be positive");
    if (!(alpha > 0.0)) throw DegenerateReductionError("alpha must be positive");
}

double g_eval(double a, double b, double alpha, double mu, double t) {
    require_positive_coeffs(a, b, alpha);
    return (a - b * alpha * t * t) * t - mu;
}

StationaryPoints stationary_points(double a, double b, double alpha) {
    require_positive_coeffs(a, b, alpha);
    const double t_M = std::sqrt(a / (3.0 * b * alpha));
    return {-t_M, t_M};
}

double mu_crit(double a, double b, double norm_U) {
    if (!(a > 0.0)) throw ValidationError("a", "must be positive");
    if (!(b > 0.0)) throw ValidationError("b", "must be positive");
    if (!(norm_U > 0.0)) throw DegenerateReductionError("norm_U must be positive");
    return 2.0 * a * std::sqrt(3.0 * a * b) / (9.0 * b * norm_U);
}

double mu_crit_lower_bound(double a, double b, double lambda1, double norm_f_l2) {
    if (!(a > 0.0) || !(b > 0.0) || !(lambda1 > 0.0) || !(norm_f_l2 > 0.0))
        throw ValidationError("mu_crit_lower_bound", "all inputs must be positive");
    return 2.0 * a * lambda1 * std::sqrt(3.0 * a * b) / (9.0 * b * norm_f_l2);
}

namespace {

// Two guarded Newton steps on g; skipped where g' is too flat to help
// (near the double root the closed form is already the right answer).
double newton_polish(double a, double b, double alpha, double mu, double t) {
    for (int k = 0; k < 2; ++k) {
        const double g = (a - b * alpha * t * t) * t - mu;
        const double dg = a - 3.0 * b * alpha * t * t;
        if (std::abs(dg) < 1e-8 * a) break;
        const double step = g / dg;
        if (!std::isfinite(step)) break;
        t -= step;
    }
    return t;
}

BracketPos bracket_of(double t, double t_M) {
    if (t < -t_M) return BracketPos::below;
    if (t > t_M) return BracketPos::above;
    return BracketPos::between;
}

}  // namespace

CubicRoots solve_reduced(double a, double b, double alpha, double mu, double double_root_tol) {
    require_positive_coeffs(a, b, alpha);
    if (double_root_tol < 0.0)
        throw ValidationError("double_root_tol", "must be nonnegative");

    // Odd symmetry: roots(-mu) = -reverse(roots(mu)).
    if (mu < 0.0) {
        CubicRoots pos = solve_reduced(a, b, alpha, -mu, double_root_tol);
        CubicRoots out = pos;
        const std::size_t n = pos.roots.size();
        for (std::size_t i = 0; i < n; ++i) {
            out.roots[i] = -pos.roots[n - 1 - i];
            out.multiplicity[i] = pos.multiplicity[n - 1 - i];
            BracketPos bp = pos.bracket[n - 1 - i];
            out.bracket[i] = bp == BracketPos::below    ? BracketPos::above
                             : bp == BracketPos::above ? BracketPos::below
                                                       : BracketPos::between;
        }
        return out;
    }

    CubicRoots out;
    const double t_M = std::sqrt(a / (3.0 * b * alpha));
    out.t_stationary = t_M;
    out.mu_crit = mu_crit(a, b, std::sqrt(alpha));

    if (mu == 0.0) {
        const double t_edge = std::sqrt(a / (b * alpha));
        out.roots = {-t_edge, 0.0, t_edge};
        out.multiplicity = {1, 1, 1};
        out.bracket = {BracketPos::below, BracketPos::between, BracketPos::above};
        out.regime = RootRegime::mu_zero;
        return out;
    }

    if (std::abs(mu - out.mu_crit) <= double_root_tol) {
        // b*alpha (t - t_M)^2 (t + 2 t_M) = b*alpha t^3 - a t + mu_crit.
        out.roots = {newton_polish(a, b, alpha, mu, -2.0 * t_M), t_M};
        out.multiplicity = {1, 2};
        out.bracket = {BracketPos::below, BracketPos::between};
        out.regime = RootRegime::two;
        return out;
    }

    // Depressed form t^3 + p t + q with p = -a/(b alpha), q = mu/(b alpha).
    const double p = -a / (b * alpha);
    const double q = mu / (b * alpha);

    if (mu < out.mu_crit) {
        // Three real roots: trigonometric form.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        double arg = 3.0 * q / (p * m);  // = (3q / 2p) sqrt(-3/p)
        arg = std::clamp(arg, -1.0, 1.0);
        const double theta = std::acos(arg);
        std::vector<double> r = {
            m * std::cos(theta / 3.0),
            m * std::cos((theta + 2.0 * std::numbers::pi) / 3.0),
            m * std::cos((theta - 2.0 * std::numbers::pi) / 3.0),
        };
        for (double& t : r) t = newton_polish(a, b, alpha, mu, t);
        std::sort(r.begin(), r.end());
        out.roots = r;
        out.multiplicity = {1, 1, 1};
        out.bracket = {bracket_of(r[0], t_M), bracket_of(r[1], t_M), bracket_of(r[2], t_M)};
        out.regime = RootRegime::three;
        return out;
    }

    // One real root: Cardano.
    const double half_q = q / 2.0;
    const double disc = half_q * half_q + (p / 3.0) * (p / 3.0) * (p / 3.0);
    const double s = std::sqrt(disc);
    double t = std::cbrt(-half_q + s) + std::cbrt(-half_q - s);
    t = newton_polish(a, b, alpha, mu, t);
    out.roots = {t};
    out.multiplicity = {1};
    out.bracket = {bracket_of(t, t_M)};
    out.regime = RootRegime::one;
    return out;
}

CubicRoots solve_reduced(double a, double b, double alpha, double mu) {
    require_positive_coeffs(a, b, alpha);
    return solve_reduced(a, b, alpha, mu, 1e-10 * mu_crit(a, b, std::sqrt(alpha)));
}

ScalingRoots rescale_roots(double a, double b, double alpha) {
    require_positive_coeffs(a, b, alpha);
    ScalingRoots out;
    out.factors.push_back(1.0);
    const double ratio = 4.0 * a / (b * alpha);
    const double disc = ratio - 3.0;
    // Snap the floating-point boundary alpha == 4a/(3b) onto the double root.
    const double snap = 32.0 * std::numeric_limits<double>::epsilon() * std::max(3.0, ratio);
    if (disc < -snap)
        return out;
    if (std::abs(disc) <= snap) {
        out.factors.insert(out.factors.end(), {-0.5, -0.5});
        out.degenerate_pair = true;
        return out;
    }
    const double root = std::sqrt(disc);
    out.factors.push_back(0.5 * (-1.0 + root));
    out.factors.push_back(0.5 * (-1.0 - root));
    return out;
}

GridField zero_mu_scaling(double a, double b, const GridField& u) {
    if (!(a > 0.0)) throw ValidationError("a", "must be positive");
    if (!(b > 0.0)) throw ValidationError("b", "must be positive");
    const double norm_sq = h1_inner(u, u);
    if (!(norm_sq > 0.0))
        throw ZeroFieldError("zero_mu_scaling needs a nonzero field");
    const double factor = std::sqrt(a * b) / (b * std::sqrt(norm_sq));
    return u.scaled(factor);
}

}  // namespace kirchhoff
