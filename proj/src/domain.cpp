#include "kirchhoff/domain.hpp"

#include <algorithm>
#include <cmath>

namespace kirchhoff {

static void check_axis(double lo, double hi, int n, const char* axis) {
    if (!(hi > lo))
        throw ValidationError(axis, "upper bound must exceed lower bound");
    if (n < 3)
        throw ValidationError(axis, "interior node count must be at least 3");
}

DomainSpec DomainSpec::interval(double lo, double hi, int n) {
    check_axis(lo, hi, n, "axis1");
    DomainSpec d;
    d.dimension = 1;
    d.lower = {lo, 0.0};
    d.upper = {hi, 1.0};
    d.resolution = {n, 1};
    return d;
}

DomainSpec DomainSpec::rectangle(double lo_x, double hi_x, int nx,
                                 double lo_y, double hi_y, int ny) {
    check_axis(lo_x, hi_x, nx, "axis1");
    check_axis(lo_y, hi_y, ny, "axis2");
    DomainSpec d;
    d.dimension = 2;
    d.lower = {lo_x, lo_y};
    d.upper = {hi_x, hi_y};
    d.resolution = {nx, ny};
    return d;
}

GridField::GridField(DomainSpec domain, std::vector<double> values)
    : domain_(domain), values_(std::move(values)) {
    if (static_cast<std::size_t>(domain_.node_count()) != values_.size())
        throw ValidationError("values", "length must equal product of per-axis resolutions");
}

GridField GridField::zeros(const DomainSpec& domain) {
    return GridField(domain, std::vector<double>(domain.node_count(), 0.0));
}

GridField GridField::constant(const DomainSpec& domain, double value) {
    return GridField(domain, std::vector<double>(domain.node_count(), value));
}

GridField GridField::from_function(const DomainSpec& domain,
                                   const std::function<double(double, double)>& fn) {
    std::vector<double> v(domain.node_count());
    if (domain.dimension == 1) {
        for (int i = 0; i < domain.resolution[0]; ++i)
            v[i] = fn(domain.node_coord(0, i), 0.0);
    } else {
        const int nx = domain.resolution[0];
        const int ny = domain.resolution[1];
        for (int iy = 0; iy < ny; ++iy)
            for (int ix = 0; ix < nx; ++ix)
                v[static_cast<std::size_t>(iy) * nx + ix] =
                    fn(domain.node_coord(0, ix), domain.node_coord(1, iy));
    }
    return GridField(domain, std::move(v));
}

GridField GridField::scaled(double factor) const {
    std::vector<double> v(values_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = factor * values_[i];
    return GridField(domain_, std::move(v));
}

double GridField::max_abs() const {
    double m = 0.0;
    for (double x : values_) m = std::max(m, std::abs(x));
    return m;
}

GridField combine(double c_u, const GridField& u, double c_v, const GridField& v) {
    detail::require_same_domain(u, v, "combine");
    std::vector<double> w(u.size());
    for (std::size_t i = 0; i < w.size(); ++i) w[i] = c_u * u[i] + c_v * v[i];
    return GridField(u.domain(), std::move(w));
}

void detail::require_same_domain(const GridField& u, const GridField& v, const char* op) {
    if (!(u.domain() == v.domain()))
        throw DomainMismatchError(op);
}

void detail::apply_neg_laplacian(const DomainSpec& domain, std::span<const double> u,
                                 std::span<double> out) {
    if (domain.dimension == 1) {
        const int n = domain.resolution[0];
        const double h = domain.mesh_width(0);
        const double ih2 = 1.0 / (h * h);
        for (int i = 0; i < n; ++i) {
            const double left = (i > 0) ? u[i - 1] : 0.0;
            const double right = (i + 1 < n) ? u[i + 1] : 0.0;
            out[i] = (2.0 * u[i] - left - right) * ih2;
        }
        return;
    }
    const int nx = domain.resolution[0];
    const int ny = domain.resolution[1];
    const double ihx2 = 1.0 / (domain.mesh_width(0) * domain.mesh_width(0));
    const double ihy2 = 1.0 / (domain.mesh_width(1) * domain.mesh_width(1));
    for (int iy = 0; iy < ny; ++iy) {
        const std::size_t row = static_cast<std::size_t>(iy) * nx;
        for (int ix = 0; ix < nx; ++ix) {
            const std::size_t k = row + ix;
            const double c = u[k];
            const double w = (ix > 0) ? u[k - 1] : 0.0;
            const double e = (ix + 1 < nx) ? u[k + 1] : 0.0;
            const double s = (iy > 0) ? u[k - nx] : 0.0;
            const double nn = (iy + 1 < ny) ? u[k + nx] : 0.0;
            out[k] = (2.0 * c - w - e) * ihx2 + (2.0 * c - s - nn) * ihy2;
        }
    }
}

double l2_inner(const GridField& u, const GridField& v) {
    detail::require_same_domain(u, v, "l2_inner");
    double s = 0.0;
    const auto uu = u.values();
    const auto vv = v.values();
    for (std::size_t i = 0; i < uu.size(); ++i) s += uu[i] * vv[i];
    return u.domain().cell_measure() * s;
}

double h1_inner(const GridField& u, const GridField& v) {
    detail::require_same_domain(u, v, "h1_inner");
    std::vector<double> au(u.size());
    detail::apply_neg_laplacian(u.domain(), u.values(), au);
    double s = 0.0;
    const auto vv = v.values();
    for (std::size_t i = 0; i < au.size(); ++i) s += au[i] * vv[i];
    return u.domain().cell_measure() * s;
}

double l2_norm(const GridField& u) { return std::sqrt(l2_inner(u, u)); }
double h1_norm(const GridField& u) { return std::sqrt(h1_inner(u, u)); }

const char* to_string(SignClass s) {
    switch (s) {
        case SignClass::positive: return "positive";
        case SignClass::negative: return "negative";
        case SignClass::indefinite: return "indefinite";
        case SignClass::zero: return "zero";
    }
    return "?";
}

SignClass sign_classify(const GridField& u, double tol) {
    const double m = u.max_abs();
    if (m == 0.0) return SignClass::zero;
    const double cut = tol * m;
    bool all_pos = true, all_neg = true;
    for (double x : u.values()) {
        if (!(x > cut)) all_pos = false;
        if (!(x < -cut)) all_neg = false;
        if (!all_pos && !all_neg) break;
    }
    if (all_pos) return SignClass::positive;
    if (all_neg) return SignClass::negative;
    return SignClass::indefinite;
}

}  // namespace kirchhoff
