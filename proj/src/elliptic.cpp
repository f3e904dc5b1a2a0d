#include "kirchhoff/elliptic.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace kirchhoff {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

GridField LaplacianOperator::apply(const GridField& u) const {
    if (!(u.domain() == domain_))
        throw DomainMismatchError("laplacian apply");
    std::vector<double> out(u.size());
    detail::apply_neg_laplacian(domain_, u.values(), out);
    return GridField(domain_, std::move(out));
}

double ReducedProblem::norm_U() const { return std::sqrt(alpha); }

static GridField cg_impl(const LaplacianOperator& A, const GridField& rhs, double rel_tol,
                         int max_iter, const std::vector<double>* x0) {
    if (!(A.domain() == rhs.domain()))
        throw DomainMismatchError("solve_cg");
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw ValidationError("rel_tol", "must lie in (0, 1)");
    if (max_iter < 1)
        throw ValidationError("max_iter", "must be at least 1");

    const std::size_t n = rhs.size();
    const double rhs_norm = std::sqrt(dot(rhs.values(), rhs.values()));
    std::vector<double> x(n, 0.0);
    std::vector<double> r(rhs.values().begin(), rhs.values().end());
    if (rhs_norm == 0.0 && x0 == nullptr)
        return GridField(A.domain(), std::move(x));

    if (x0 != nullptr) {
        x = *x0;
        std::vector<double> ax(n);
        A.apply(x, ax);
        for (std::size_t i = 0; i < n; ++i) r[i] -= ax[i];
    }

    const double target = rel_tol * rhs_norm;
    double rr = dot(r, r);
    if (std::sqrt(rr) <= target)
        return GridField(A.domain(), std::move(x));

    std::vector<double> p = r, ap(n);
    for (int it = 0; it < max_iter; ++it) {
        A.apply(p, ap);
        const double alpha = rr / dot(p, ap);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] += alpha * p[i];
            r[i] -= alpha * ap[i];
        }
        const double rr_new = dot(r, r);
        if (std::sqrt(rr_new) <= target)
            return GridField(A.domain(), std::move(x));
        const double beta = rr_new / rr;
        rr = rr_new;
        for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
    }
    throw IterationLimitError(
        "cg: no convergence within " + std::to_string(max_iter) + " iterations",
        max_iter, std::sqrt(rr) / (rhs_norm > 0.0 ? rhs_norm : 1.0));
}

GridField solve_cg(const LaplacianOperator& A, const GridField& rhs, double rel_tol,
                   int max_iter) {
    return cg_impl(A, rhs, rel_tol, max_iter, nullptr);
}

GridField solve_cg(const LaplacianOperator& A, const GridField& rhs, double rel_tol,
                   int max_iter, const GridField& x0) {
    if (!(x0.domain() == rhs.domain()))
        throw DomainMismatchError("solve_cg initial guess");
    std::vector<double> guess(x0.values().begin(), x0.values().end());
    return cg_impl(A, rhs, rel_tol, max_iter, &guess);
}

ReducedProblem reduce_problem(const DomainSpec& spec, const GridField& f, double a, double b,
                              double rel_tol) {
    if (!(f.domain() == spec))
        throw DomainMismatchError("reduce_problem source");
    if (!(a > 0.0) || !(b > 0.0))
        throw ValidationError(a > 0.0 ? "b" : "a", "must be positive");
    bool all_zero = true;
    for (double x : f.values()) {
        if (x < 0.0)
            throw InvalidSourceError("source has a negative node");
        if (x != 0.0) all_zero = false;
    }
    if (all_zero)
        throw DegenerateSourceError("source is identically zero");

    const LaplacianOperator A(spec);
    const int max_iter = 30 * spec.node_count() + 2000;
    GridField U = solve_cg(A, f, rel_tol, max_iter);
    const double alpha = h1_inner(U, U);
    const double alpha_weak = l2_inner(f, U);
    if (std::abs(alpha - alpha_weak) > 10.0 * rel_tol * std::abs(alpha))
        throw IterationLimitError("reduce_problem: weak-form identity out of tolerance", 0,
                                  std::abs(alpha - alpha_weak));
    return ReducedProblem{std::move(U), alpha, a, b};
}

double smallest_eigenvalue(const DomainSpec& spec, double rel_tol, int max_iter) {
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw ValidationError("rel_tol", "must lie in (0, 1)");
    const LaplacianOperator A(spec);
    const int cg_iters = 30 * spec.node_count() + 2000;
    // Inner solves one order tighter than the outer stationarity test.
    const double cg_tol = std::min(1e-12, 0.01 * rel_tol);

    GridField x = GridField::constant(spec, 1.0);
    x = x.scaled(1.0 / l2_norm(x));
    double rho = h1_inner(x, x) / l2_inner(x, x);
    for (int it = 0; it < max_iter; ++it) {
        GridField y = solve_cg(A, x, cg_tol, cg_iters, x);
        y = y.scaled(1.0 / l2_norm(y));
        const double rho_new = h1_inner(y, y) / l2_inner(y, y);
        const bool stationary = std::abs(rho_new - rho) <= rel_tol * std::abs(rho_new);
        rho = rho_new;
        x = std::move(y);
        if (stationary) return rho;
    }
    throw IterationLimitError("smallest_eigenvalue: Rayleigh quotient not stationary within " +
                                  std::to_string(max_iter) + " iterations",
                              max_iter, rho);
}

}  // namespace kirchhoff
