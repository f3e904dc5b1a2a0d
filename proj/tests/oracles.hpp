// Test-only oracles, independent of the library code paths they check:
// the cubic is solved by sign-change scanning + bisection, the ray energy
// and its derivative come straight from the closed forms, and directional
// derivatives are approximated by central differences.
#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

inline double g_scalar(double a, double b, double alpha, double mu, double t) {
    return (a - b * alpha * t * t) * t - mu;
}

/// All real roots of (a - b alpha t^2) t = mu by scan + bisection.
inline std::vector<double> cubic_roots(double a, double b, double alpha, double mu) {
    const double t_edge = std::sqrt(a / (b * alpha));
    const double span = 4.0 * t_edge + 4.0 * std::cbrt(std::abs(mu) / (b * alpha)) + 1.0;
    const int steps = 200000;
    std::vector<double> roots;
    double prev_t = -span;
    double prev_g = g_scalar(a, b, alpha, mu, prev_t);
    for (int i = 1; i <= steps; ++i) {
        const double t = -span + 2.0 * span * i / steps;
        const double g = g_scalar(a, b, alpha, mu, t);
        if (g == 0.0) {
            roots.push_back(t);
        } else if (prev_g * g < 0.0) {
            double lo = prev_t, hi = t, glo = prev_g;
            for (int k = 0; k < 200; ++k) {
                const double mid = 0.5 * (lo + hi);
                const double gm = g_scalar(a, b, alpha, mu, mid);
                if (gm == 0.0) { lo = hi = mid; break; }
                if (glo * gm < 0.0) hi = mid;
                else { lo = mid; glo = gm; }
            }
            roots.push_back(0.5 * (lo + hi));
        }
        prev_t = t;
        prev_g = g;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

/// I(t U) along the ray through the Poisson solution:
/// phi(t) = (a/2) t^2 alpha - (b/4) t^4 alpha^2 - mu t alpha.
inline double ray_energy(double a, double b, double alpha, double mu, double t) {
    return 0.5 * a * t * t * alpha - 0.25 * b * t * t * t * t * alpha * alpha -
           mu * t * alpha;
}

/// Central-difference directional derivative of a scalar functional.
inline double central_difference(const std::function<double(double)>& f, double eps) {
    return (f(eps) - f(-eps)) / (2.0 * eps);
}

/// Composite closed-form integrals used as quadrature references.
namespace exact {
// int_0^1 (x(1-x)/2)' ^2 dx = int_0^1 ((1-2x)/2)^2 dx
inline constexpr double h1_parabola = 1.0 / 12.0;
// int_0^1 x(1-x)/2 dx
inline constexpr double l2_one_parabola = 1.0 / 12.0;
}  // namespace exact

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

}  // namespace oracle
