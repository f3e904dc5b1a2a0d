#pragma once

#include "kirchhoff/domain.hpp"

namespace kirchhoff {

/// Matrix-free negative Laplacian with homogeneous Dirichlet boundary:
/// the 3-point (1D) or 5-point (2D) second-order stencil scaled by 1/h^2
/// per axis. Symmetric positive definite on interior-node vectors.
class LaplacianOperator {
public:
    explicit LaplacianOperator(DomainSpec domain) : domain_(domain) {}

    const DomainSpec& domain() const { return domain_; }

    void apply(std::span<const double> u, std::span<double> out) const {
        detail::apply_neg_laplacian(domain_, u, out);
    }
    GridField apply(const GridField& u) const;

private:
    DomainSpec domain_;
};

/// The nonlocal problem compressed to one scalar: U solves -lap U = f,
/// alpha = h1_inner(U, U) = l2_inner(f, U).
struct ReducedProblem {
    GridField U;
    double alpha = 0.0;
    double a = 0.0;
    double b = 0.0;

    double norm_U() const;
};

/// Plain conjugate gradients, zero initial guess. Stops when the Euclidean
/// residual norm drops below rel_tol * ||rhs||; throws IterationLimitError
/// (carrying the final relative residual) past max_iter.
GridField solve_cg(const LaplacianOperator& A, const GridField& rhs, double rel_tol,
                   int max_iter);

/// Same with an explicit initial guess.
GridField solve_cg(const LaplacianOperator& A, const GridField& rhs, double rel_tol,
                   int max_iter, const GridField& x0);

/// Solves the auxiliary Poisson problem -lap U = f and packages (U, alpha).
/// Requires f >= 0 nodewise and f not identically zero; checks the weak-form
/// identity alpha = l2_inner(f, U) to 10 * rel_tol internally.
ReducedProblem reduce_problem(const DomainSpec& spec, const GridField& f, double a, double b,
                              double rel_tol);

/// Smallest Dirichlet eigenvalue of the discrete Laplacian via inverse power
/// iteration (inner solves by CG); stops when the Rayleigh quotient is
/// stationary to rel_tol between successive iterates.
double smallest_eigenvalue(const DomainSpec& spec, double rel_tol, int max_iter);

}  // namespace kirchhoff
