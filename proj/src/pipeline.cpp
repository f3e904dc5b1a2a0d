#include "kirchhoff/pipeline.hpp"

#include <cmath>
#include <limits>

namespace kirchhoff {

const char* to_string(BranchRole r) {
    switch (r) {
        case BranchRole::u1_like: return "u1-like";
        case BranchRole::u2_like: return "u2-like";
        case BranchRole::u3_like: return "u3-like";
        case BranchRole::double_root: return "double";
        case BranchRole::single: return "single";
        case BranchRole::trivial: return "trivial";
    }
    return "?";
}

double weak_residual(const ProblemParams& p, const GridField& u) {
    detail::require_same_domain(u, p.f, "weak_residual");
    const LaplacianOperator A(u.domain());
    const GridField au = A.apply(u);
    const double coeff = p.a - p.b * h1_inner(u, u);
    const GridField r = combine(coeff, au, -p.mu, p.f);
    const double denom = std::max(std::abs(p.mu) * l2_norm(p.f), 1e-300);
    return l2_norm(r) / denom;
}

static BranchRole role_of(std::size_t i, const CubicRoots& roots, double mu) {
    if (roots.regime == RootRegime::one) return BranchRole::single;
    if (roots.regime == RootRegime::two)
        return roots.multiplicity[i] == 2 ? BranchRole::double_root : BranchRole::single;
    // Three roots, ascending. For mu > 0: T2 is the local minimizer, T3 the
    // mountain-pass solution, T1 the negative one; mirrored for mu < 0.
    if (mu > 0.0) {
        if (i == 1) return BranchRole::u1_like;
        return i == 2 ? BranchRole::u2_like : BranchRole::u3_like;
    }
    if (i == 1) return BranchRole::u1_like;
    return i == 0 ? BranchRole::u2_like : BranchRole::u3_like;
}

SolutionBranch make_branch(const ProblemParams& p, const ReducedProblem& red,
                           const CubicRoots& roots, std::size_t i) {
    const ThresholdTable bands = thresholds(p.a, p.b);
    const double T = roots.roots[i];
    SolutionBranch br{T, red.U.scaled(T)};
    br.norm_sq = h1_inner(br.field, br.field);
    br.energy = energy_eval(p, br.field);
    br.sign_class = sign_classify(br.field, 0.0);
    br.band = band_label(bands, br.norm_sq);
    br.residual = weak_residual(p, br.field);
    br.role = role_of(i, roots, p.mu);
    br.multiplicity = roots.multiplicity[i];
    return br;
}

SolveResult solve_all(const ProblemParams& p, const DomainSpec& spec, double tol,
                      double cg_tol, double double_root_tol) {
    validate_params(p);
    if (p.mu == 0.0)
        throw ValidationError("mu", "mu = 0 has an infinite solution family; "
                                    "use solve_zero_mu");
    if (!(p.f.domain() == spec))
        throw DomainMismatchError("solve_all source");

    SolveResult out{reduce_problem(spec, p.f, p.a, p.b, cg_tol), {}, {}};
    const double tol_dbl = double_root_tol >= 0.0
                               ? double_root_tol
                               : 1e-10 * mu_crit(p.a, p.b, out.reduced.norm_U());
    out.roots = solve_reduced(p.a, p.b, out.reduced.alpha, p.mu, tol_dbl);

    for (std::size_t i = 0; i < out.roots.roots.size(); ++i) {
        SolutionBranch br = make_branch(p, out.reduced, out.roots, i);
        if (!(br.residual <= tol))
            throw VerificationFailureError(
                "branch with multiplier " + std::to_string(br.multiplier) +
                    " has weak residual " + std::to_string(br.residual) +
                    " above tolerance",
                br.residual);
        out.branches.push_back(std::move(br));
    }
    return out;
}

ZeroMuFamily zero_mu_family(const ProblemParams& p, const ReducedProblem& red) {
    GridField V = zero_mu_scaling(p.a, p.b, red.U);
    ZeroMuFamily fam{red, std::move(V)};
    fam.norm_sq = h1_inner(fam.representative, fam.representative);
    ProblemParams p0 = p;
    p0.mu = 0.0;
    fam.energy = energy_eval(p0, fam.representative);
    fam.sign_class = sign_classify(fam.representative, 0.0);
    const LaplacianOperator A(red.U.domain());
    const GridField av = A.apply(fam.representative);
    const GridField coeff_av = av.scaled(p.a - p.b * fam.norm_sq);
    fam.nonlocal_residual = l2_norm(coeff_av) / std::max(l2_norm(av), 1e-300);
    return fam;
}

ZeroMuFamily solve_zero_mu(const ProblemParams& p, const DomainSpec& spec, double cg_tol) {
    validate_params(p);
    return zero_mu_family(p, reduce_problem(spec, p.f, p.a, p.b, cg_tol));
}

double check_linear_dependence(const std::vector<SolutionBranch>& branches, double a,
                               double b) {
    if (branches.size() < 2)
        throw ValidationError("branches", "need at least two branches");
    double worst = 0.0;
    for (std::size_t i = 0; i < branches.size(); ++i) {
        for (std::size_t j = 0; j < branches.size(); ++j) {
            if (i == j) continue;
            const SolutionBranch& u = branches[i];
            const SolutionBranch& v = branches[j];
            const double cu = a - b * u.norm_sq;
            const double cv = a - b * v.norm_sq;
            if (cu == 0.0 || cv == 0.0)
                throw DegenerateCoefficientError(
                    "branch with a - b||u||^2 = 0; reconstruction factor undefined");
            const GridField diff = combine(1.0, u.field, -cv / cu, v.field);
            worst = std::max(worst, h1_norm(diff) / h1_norm(u.field));
        }
    }
    return worst;
}

GridField descent_minimize(const ProblemParams& p, const GridField& u0, double step0,
                           double grad_tol, int max_iter) {
    validate_params(p);
    if (!(p.mu > 0.0))
        throw ValidationError("mu", "descent oracle needs mu > 0");
    if (!(step0 > 0.0))
        throw ValidationError("step0", "must be positive");
    const double ball = p.a / (3.0 * p.b);
    const double escape = 2.0 * p.a / (3.0 * p.b);
    if (!(h1_inner(u0, u0) < ball))
        throw ValidationError("u0", "initial iterate must satisfy ||u0||^2 < a/(3b)");

    // Riesz representative of I'(u) in H0^1: (a - b||u||^2) u - mu A^{-1} f.
    // Descending along it keeps the step size mesh-independent; the plain
    // nodewise gradient would need O(h^-2) iterations.
    const LaplacianOperator A(u0.domain());
    const GridField Uf = solve_cg(A, p.f, 1e-12, 30 * u0.domain().node_count() + 2000);

    GridField u = u0;
    double energy = energy_eval(p, u);
    for (int it = 0; it < max_iter; ++it) {
        const double coeff = p.a - p.b * h1_inner(u, u);
        const GridField grad = combine(coeff, u, -p.mu, Uf);
        const double grad_norm_sq = h1_inner(grad, grad);
        if (std::sqrt(std::max(0.0, grad_norm_sq)) <= grad_tol)
            return u;

        double step = step0;
        bool accepted = false;
        while (step > 1e-300) {
            const GridField trial = combine(1.0, u, -step, grad);
            const double trial_energy = energy_eval(p, trial);
            if (trial_energy <= energy - 1e-4 * step * grad_norm_sq) {
                const double trial_norm_sq = h1_inner(trial, trial);
                if (trial_norm_sq >= escape)
                    throw BallEscapeError("descent iterate left the trust ball "
                                          "(mu too large for the local-minimum basin)",
                                          trial_norm_sq);
                u = trial;
                energy = trial_energy;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            throw IterationLimitError("descent: backtracking stalled", it,
                                      std::sqrt(grad_norm_sq));
    }
    const double coeff = p.a - p.b * h1_inner(u, u);
    const GridField grad = combine(coeff, u, -p.mu, Uf);
    throw IterationLimitError("descent: gradient tolerance not reached", max_iter,
                              h1_norm(grad));
}

}  // namespace kirchhoff
