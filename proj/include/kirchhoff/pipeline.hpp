#pragma once

#include <string>
#include <vector>

#include "kirchhoff/elliptic.hpp"
#include "kirchhoff/energy.hpp"
#include "kirchhoff/reduction.hpp"

namespace kirchhoff {

/// Which solution of the three-branch structure a root plays. For mu > 0 in
/// the three-root regime the middle root is the small local minimizer, the
/// largest the mountain-pass-level solution, the smallest the high-energy
/// negative one; mirrored for mu < 0. The assignment is re-verified against
/// the norm-band and energy invariants on every solve.
enum class BranchRole { u1_like, u2_like, u3_like, double_root, single, trivial };

const char* to_string(BranchRole r);

/// One verified solution u = T U of the nonlocal problem.
struct SolutionBranch {
    SolutionBranch(double multiplier_, GridField field_)
        : multiplier(multiplier_), field(std::move(field_)) {}

    double multiplier;        // T
    GridField field;          // T U
    double norm_sq = 0.0;     // T^2 alpha
    double energy = 0.0;      // I(T U)
    SignClass sign_class = SignClass::zero;
    std::string band;         // norm-band label
    double residual = 0.0;    // strong-form weak residual
    BranchRole role = BranchRole::single;
    int multiplicity = 1;
};

/// Result of a full solve at one mu (mu != 0).
struct SolveResult {
    ReducedProblem reduced;
    CubicRoots roots;
    std::vector<SolutionBranch> branches;  // sorted by multiplier
};

/// The mu = 0 picture: every field on the sphere ||V||^2 = a/b solves the
/// problem (plus the trivial zero solution); one representative is returned
/// instead of an enumeration.
struct ZeroMuFamily {
    ZeroMuFamily(ReducedProblem reduced_, GridField representative_)
        : reduced(std::move(reduced_)), representative(std::move(representative_)) {}

    ReducedProblem reduced;
    GridField representative;   // zero_mu_scaling of the Poisson solution
    double norm_sq = 0.0;       // = a/b up to roundoff
    double energy = 0.0;        // = a^2/(4b)
    SignClass sign_class = SignClass::zero;
    double nonlocal_residual = 0.0;  // ||(a - b||V||^2) lap V|| / ||lap V||
};

/// Builds the Poisson reduction, enumerates the cubic roots, and verifies
/// every scaled branch as a weak solution (residual <= tol, else
/// VerificationFailureError naming the branch). Requires mu != 0.
SolveResult solve_all(const ProblemParams& p, const DomainSpec& spec, double tol,
                      double cg_tol = 1e-10, double double_root_tol = -1.0);

/// Scales, measures and classifies root i of an existing reduction.
SolutionBranch make_branch(const ProblemParams& p, const ReducedProblem& red,
                           const CubicRoots& roots, std::size_t i);

/// mu = 0 route: representative of the infinite family.
ZeroMuFamily solve_zero_mu(const ProblemParams& p, const DomainSpec& spec,
                           double cg_tol = 1e-10);

/// Same on an existing reduction (for sweeps that reuse one Poisson solve).
ZeroMuFamily zero_mu_family(const ProblemParams& p, const ReducedProblem& red);

/// ||(a - b||u||^2)(-lap u) - mu f||_2 / max(||mu f||_2, eps): the
/// strong-form residual of the discrete equation, in quadrature norms.
double weak_residual(const ProblemParams& p, const GridField& u);

/// Maximum over branch pairs (u, v) of
/// ||u - ((a - b||v||^2)/(a - b||u||^2)) v|| / ||u||; near zero certifies
/// that the computed solutions are pairwise proportional.
double check_linear_dependence(const std::vector<SolutionBranch>& branches, double a,
                               double b);

/// H1 steepest descent on I with Armijo backtracking, confined to the
/// monotone basin around the small local minimizer. Needs mu > 0 and
/// ||u0||^2 < a/(3b); throws BallEscapeError if an iterate reaches
/// ||u||^2 >= 2a/(3b), IterationLimitError past max_iter.
GridField descent_minimize(const ProblemParams& p, const GridField& u0, double step0,
                           double grad_tol, int max_iter);

}  // namespace kirchhoff
