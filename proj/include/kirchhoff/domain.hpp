#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "kirchhoff/errors.hpp"

namespace kirchhoff {

/// Axis-aligned box domain (interval or rectangle) discretized with a
/// uniform grid of interior nodes and homogeneous Dirichlet boundary.
///
/// Per axis: n interior nodes, mesh width h = (upper - lower)/(n + 1).
/// Boundary nodes are never stored; a field value of zero there is implied.
struct DomainSpec {
    int dimension = 1;                    // 1 or 2
    std::array<double, 2> lower{0.0, 0.0};
    std::array<double, 2> upper{1.0, 1.0};
    std::array<int, 2> resolution{0, 1};  // interior nodes per axis; axis 1 unused in 1D

    static DomainSpec interval(double lo, double hi, int n);
    static DomainSpec rectangle(double lo_x, double hi_x, int nx,
                                double lo_y, double hi_y, int ny);

    double mesh_width(int axis) const {
        return (upper[axis] - lower[axis]) / (resolution[axis] + 1);
    }
    /// Coordinate of interior node index i along an axis (i in [0, n)).
    double node_coord(int axis, int i) const {
        return lower[axis] + (i + 1) * mesh_width(axis);
    }
    int node_count() const {
        return dimension == 1 ? resolution[0] : resolution[0] * resolution[1];
    }
    /// Quadrature weight of one interior node: h in 1D, h1*h2 in 2D.
    double cell_measure() const {
        return dimension == 1 ? mesh_width(0) : mesh_width(0) * mesh_width(1);
    }
    bool operator==(const DomainSpec&) const = default;
};

/// Real values at the interior nodes of a DomainSpec; the discrete stand-in
/// for a function in H_0^1. Immutable after construction. 2D storage is
/// row-major with x fastest: values[iy * nx + ix].
class GridField {
public:
    GridField(DomainSpec domain, std::vector<double> values);

    static GridField zeros(const DomainSpec& domain);
    static GridField constant(const DomainSpec& domain, double value);
    /// Samples fn at interior node coordinates: fn(x) in 1D, fn(x, y) in 2D
    /// (the 1D overload ignores the second argument).
    static GridField from_function(const DomainSpec& domain,
                                   const std::function<double(double, double)>& fn);

    const DomainSpec& domain() const { return domain_; }
    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }

    GridField scaled(double factor) const;
    double max_abs() const;

private:
    DomainSpec domain_;
    std::vector<double> values_;
};

/// c_u * u + c_v * v on a shared domain.
GridField combine(double c_u, const GridField& u, double c_v, const GridField& v);

/// Quadrature of the L2 pairing: cell_measure * sum_i u_i v_i. Exact
/// counterpart of the stiffness form below, so that for the assembled
/// Laplacian A the identity h1_inner(u, v) == l2_inner(A u, v) is bit-exact.
double l2_inner(const GridField& u, const GridField& v);

/// The H_0^1 inner product evaluated as the stiffness quadratic form of the
/// second-order difference stencil: h1_inner(u, v) = l2_inner(-lap_h u, v).
double h1_inner(const GridField& u, const GridField& v);

double l2_norm(const GridField& u);
double h1_norm(const GridField& u);

enum class SignClass { positive, negative, indefinite, zero };

const char* to_string(SignClass s);

/// positive  iff every node value >  tol * max|u|
/// negative  iff every node value < -tol * max|u|
/// zero      iff max|u| == 0
/// indefinite otherwise.
SignClass sign_classify(const GridField& u, double tol);

namespace detail {
/// out = -lap_h u with the 3-point (1D) / 5-point (2D) stencil, Dirichlet
/// values implied zero outside the interior block.
void apply_neg_laplacian(const DomainSpec& domain, std::span<const double> u,
                         std::span<double> out);
void require_same_domain(const GridField& u, const GridField& v, const char* op);
}  // namespace detail

}  // namespace kirchhoff
