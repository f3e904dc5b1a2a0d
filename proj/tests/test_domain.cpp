#include <doctest.h>

#include <cmath>
#include <random>

#include "kirchhoff/domain.hpp"
#include "kirchhoff/elliptic.hpp"
#include "oracles.hpp"

using namespace kirchhoff;

namespace {

GridField parabola_field(const DomainSpec& spec) {
    return GridField::from_function(spec, [](double x, double) { return x * (1.0 - x) / 2.0; });
}

GridField random_field(const DomainSpec& spec, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<double> v(spec.node_count());
    for (double& x : v) x = dist(rng);
    return GridField(spec, std::move(v));
}

}  // namespace

TEST_CASE("domain spec invariants") {
    const DomainSpec d = DomainSpec::interval(0.0, 1.0, 1023);
    CHECK(d.mesh_width(0) == 1.0 / 1024.0);
    CHECK(d.node_count() == 1023);
    CHECK(d.node_coord(0, 0) == doctest::Approx(1.0 / 1024.0).epsilon(1e-15));

    CHECK_THROWS_AS(DomainSpec::interval(0.0, 1.0, 2), ValidationError);
    CHECK_THROWS_AS(DomainSpec::interval(1.0, 1.0, 16), ValidationError);
    CHECK_THROWS_AS(DomainSpec::rectangle(0, 1, 8, 1, 0, 8), ValidationError);

    const DomainSpec r = DomainSpec::rectangle(0, 2, 15, -1, 1, 31);
    CHECK(r.node_count() == 15 * 31);
    CHECK(r.cell_measure() == doctest::Approx((2.0 / 16) * (2.0 / 32)).epsilon(1e-15));
}

TEST_CASE("grid field storage") {
    const DomainSpec d = DomainSpec::interval(0.0, 1.0, 7);
    CHECK_THROWS_AS(GridField(d, std::vector<double>(6, 0.0)), ValidationError);
    const GridField z = GridField::zeros(d);
    CHECK(z.max_abs() == 0.0);
    const GridField c = GridField::constant(d, 3.5);
    CHECK(c[0] == 3.5);
    CHECK(c.size() == 7);
}

TEST_CASE("h1 inner product: analytic parabola and symmetry") {
    const DomainSpec d = DomainSpec::interval(0.0, 1.0, 1023);
    const GridField u = parabola_field(d);

    // Stiffness form of sampled x(1-x)/2: (1 - h^2)/12 exactly.
    const double val = h1_inner(u, u);
    CHECK(val == doctest::Approx(oracle::exact::h1_parabola).epsilon(1e-5));
    const double h = d.mesh_width(0);
    CHECK(val == doctest::Approx((1.0 - h * h) / 12.0).epsilon(1e-12));

    const GridField z = GridField::zeros(d);
    CHECK(h1_inner(z, z) == 0.0);

    auto rng = oracle::rng(101);
    for (int k = 0; k < 5; ++k) {
        const GridField a = random_field(d, rng);
        const GridField b = random_field(d, rng);
        const double ab = h1_inner(a, b);
        const double ba = h1_inner(b, a);
        CHECK(std::abs(ab - ba) <= 1e-12 * std::max(1.0, std::abs(ab)));
    }

    const DomainSpec other = DomainSpec::interval(0.0, 1.0, 511);
    CHECK_THROWS_AS(h1_inner(u, GridField::zeros(other)), DomainMismatchError);
}

TEST_CASE("h1 equals the stencil pairing bit-exactly") {
    const DomainSpec d = DomainSpec::interval(0.0, 2.0, 255);
    auto rng = oracle::rng(202);
    const GridField u = random_field(d, rng);
    const GridField v = random_field(d, rng);
    std::vector<double> au(u.size());
    detail::apply_neg_laplacian(d, u.values(), au);
    CHECK(h1_inner(u, v) == l2_inner(GridField(d, au), v));
}

TEST_CASE("l2 inner product: quadrature values") {
    const DomainSpec d = DomainSpec::interval(0.0, 1.0, 1023);
    const GridField ones = GridField::constant(d, 1.0);
    const GridField para = parabola_field(d);

    // Interior-node quadrature of the constant: n*h = 1 - h. The h-sized
    // deficit is the boundary cell of a field that implicitly vanishes
    // there; it converges to the full integral at first order.
    const double h = d.mesh_width(0);
    CHECK(l2_inner(ones, ones) == doctest::Approx(1023.0 * h).epsilon(1e-14));
    CHECK(std::abs(l2_inner(ones, ones) - 1.0) <= h);

    CHECK(l2_inner(ones, para) ==
          doctest::Approx(oracle::exact::l2_one_parabola).epsilon(1e-5));
    CHECK(l2_inner(para, GridField::zeros(d)) == 0.0);

    const DomainSpec d2 = DomainSpec::rectangle(0, 1, 63, 0, 1, 63);
    const GridField ones2 = GridField::constant(d2, 1.0);
    const double h2 = d2.mesh_width(0);
    CHECK(l2_inner(ones2, ones2) == doctest::Approx(63.0 * 63.0 * h2 * h2).epsilon(1e-14));
}

TEST_CASE("bilinearity of both forms") {
    const DomainSpec d = DomainSpec::interval(-1.0, 3.0, 127);
    auto rng = oracle::rng(303);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    for (int k = 0; k < 10; ++k) {
        const GridField u = random_field(d, rng);
        const GridField w = random_field(d, rng);
        const GridField v = random_field(d, rng);
        const double ca = coeff(rng), cb = coeff(rng);
        const GridField lin = combine(ca, u, cb, w);
        {
            const double lhs = l2_inner(lin, v);
            const double rhs = ca * l2_inner(u, v) + cb * l2_inner(w, v);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
        {
            const double lhs = h1_inner(lin, v);
            const double rhs = ca * h1_inner(u, v) + cb * h1_inner(w, v);
            CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
        }
    }
}

TEST_CASE("discrete Poincare inequality against lambda1") {
    const DomainSpec d = DomainSpec::interval(0.0, 1.0, 127);
    const double lambda1 = smallest_eigenvalue(d, 1e-10, 200);
    auto rng = oracle::rng(404);
    for (int k = 0; k < 10; ++k) {
        const GridField u = random_field(d, rng);
        const double lhs = h1_inner(u, u);
        const double rhs = lambda1 * l2_inner(u, u);
        CHECK(lhs >= rhs - 1e-7 * rhs);
    }
}

TEST_CASE("sign classification") {
    const DomainSpec d = DomainSpec::interval(0.0, 1.0, 63);
    const GridField para = parabola_field(d);
    CHECK(sign_classify(para, 0.0) == SignClass::positive);
    CHECK(sign_classify(para.scaled(-1.0), 0.0) == SignClass::negative);
    CHECK(sign_classify(GridField::zeros(d), 0.0) == SignClass::zero);

    auto rng = oracle::rng(505);
    CHECK(sign_classify(random_field(d, rng), 0.0) == SignClass::indefinite);

    // Nodes below tol*max|u| disqualify strict positivity.
    std::vector<double> v(63, 1.0);
    v[10] = 1e-6;
    const GridField spiky(d, v);
    CHECK(sign_classify(spiky, 0.0) == SignClass::positive);
    CHECK(sign_classify(spiky, 1e-3) == SignClass::indefinite);
}

TEST_CASE("mesh refinement: stiffness form converges at second order") {
    std::vector<double> errs;
    for (int n : {63, 127, 255, 511}) {
        const DomainSpec d = DomainSpec::interval(0.0, 1.0, n);
        const GridField u = parabola_field(d);
        errs.push_back(std::abs(h1_inner(u, u) - oracle::exact::h1_parabola));
    }
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        const double order = std::log2(errs[i] / errs[i + 1]);
        CHECK(order == doctest::Approx(2.0).epsilon(0.1));
    }
}
