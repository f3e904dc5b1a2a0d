#pragma once

#include <vector>

#include "kirchhoff/domain.hpp"

namespace kirchhoff {

/// Root-count regime of the reduced cubic relative to the critical
/// parameter: three for 0 < |mu| < mu**, two at |mu| = mu**, one beyond.
/// mu = 0 is reported separately; its t = 0 root is the trivial solution and
/// the problem has an infinite solution family there.
enum class RootRegime { three, two, one, mu_zero };

const char* to_string(RootRegime r);

/// Position of a root relative to the stationary points -t_M, +t_M of g
/// (boundary values count as "between").
enum class BracketPos { below, between, above };

const char* to_string(BracketPos b);

/// Real roots of (a - b*alpha*t^2) t = mu, ascending, with multiplicities
/// and bracket labels. A double root is stored once with multiplicity 2.
struct CubicRoots {
    std::vector<double> roots;
    std::vector<int> multiplicity;
    std::vector<BracketPos> bracket;
    RootRegime regime = RootRegime::one;
    double t_stationary = 0.0;  // +t_M = sqrt(a / (3 b alpha))
    double mu_crit = 0.0;       // critical |mu| for this (a, b, alpha)
};

/// Scaling factors t with t (a - b t^2 alpha) = a - b alpha, i.e. the
/// multipliers carrying one known solution of squared norm alpha to the
/// others. factors = {1} alone when alpha > 4a/(3b); {1, t1, t2} otherwise,
/// with degenerate_pair set when t1 == t2 == -1/2 (alpha == 4a/(3b)).
struct ScalingRoots {
    std::vector<double> factors;
    bool degenerate_pair = false;
};

/// g(t) = (a - b*alpha*t^2) t - mu, the scalar residual whose zeros are the
/// admissible multipliers of the Poisson solution.
double g_eval(double a, double b, double alpha, double mu, double t);

/// Stationary points of g: (t_m, t_M) = (-sqrt(a/(3 b alpha)), +sqrt(...)).
/// g decreases on (-inf, t_m), increases on [t_m, t_M], decreases after.
struct StationaryPoints {
    double t_m;
    double t_M;
};
StationaryPoints stationary_points(double a, double b, double alpha);

/// The critical parameter 2a sqrt(3ab) / (9b ||U||): the mu-independent
/// height of the local maximum of g (and the negated minimum).
double mu_crit(double a, double b, double norm_U);

/// 2a lambda1 sqrt(3ab) / (9b ||f||_2), the certificate lower bound printed
/// for mu** in terms of data (see verify output for its numerical status).
double mu_crit_lower_bound(double a, double b, double lambda1, double norm_f_l2);

/// All real roots of the reduced cubic, Newton-polished, with regime
/// classification: |mu| is compared against mu_crit within double_root_tol.
/// mu < 0 is handled by odd symmetry, mu = 0 returns the exact factorization
/// {-sqrt(a/(b alpha)), 0, +sqrt(a/(b alpha))} under the mu_zero regime.
CubicRoots solve_reduced(double a, double b, double alpha, double mu, double double_root_tol);

/// Convenience overload with the default tolerance 1e-10 * mu_crit.
CubicRoots solve_reduced(double a, double b, double alpha, double mu);

ScalingRoots rescale_roots(double a, double b, double alpha);

/// V = sqrt(ab) / (b ||u||) * u: the scaling that puts any nonzero field on
/// the sphere ||V||^2 = a/b, annihilating the nonlocal coefficient. Every
/// such V solves the mu = 0 problem.
GridField zero_mu_scaling(double a, double b, const GridField& u);

}  // namespace kirchhoff
