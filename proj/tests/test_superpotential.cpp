#include <doctest.h>

#include <cmath>

#include "vekua/superpotential.hpp"

using namespace vekua;

TEST_CASE("potentials of the quadratic superpotential") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    auto pot = potentials(sp);
    auto u0 = sample(g, [](double x, double y) { return x*x + y*y - 2; });
    auto u2 = sample(g, [](double x, double y) { return x*x + y*y + 2; });
    CHECK(max_abs_interior(pot.u0 - u0) < 1e-12);
    CHECK(max_abs_interior(pot.u2 - u2) < 1e-12);
    CHECK(max_abs_interior(pot.m12) < 1e-12);
}

TEST_CASE("complex form of the matrix potential agrees with the Cartesian one") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("quadratic", {1.0, -0.5}, g);
    auto a = potentials(sp), b = potentials_complex_form(sp);
    double const h2 = g.gx.spacing()*g.gx.spacing();
    CHECK(max_abs_interior(a.m11 - b.m11, 2) < 50*h2);
    CHECK(max_abs_interior(a.m22 - b.m22, 2) < 50*h2);
    CHECK(max_abs_interior(a.m12 - b.m12, 2) < 50*h2);
}

TEST_CASE("Riccati equations hold for both potentials") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    double const h2 = g.gx.spacing()*g.gx.spacing();
    CHECK(max_abs_interior(riccati_residual(sp, 0), 2) < 10*h2);
    CHECK(max_abs_interior(riccati_residual(sp, 2), 2) < 10*h2);
}

TEST_CASE("generating pair has constant Wronskian -2i") {
    auto g = make_square_grid(1.0, 41);
    auto sp = catalog_superpotential("quadratic", {1.0, 2.0}, g);
    for (int m : {0, 1}) {
        auto p = generating_pair(sp, m);
        for (std::size_t k = 0; k < p.F.size(); ++k) {
            complex const w = p.F[k]*std::conj(p.G[k]) - std::conj(p.F[k])*p.G[k];
            CHECK(std::abs(w - complex{0, -2}) < 1e-12);
        }
    }
    auto p0 = generating_pair(sp, 0);
    CHECK(p0.F(30, 10).real() == doctest::Approx(std::exp(0.5*(0.5*0.5) + 0.5*2*(0.5*0.5))));
}

TEST_CASE("tabulated profile reproduces the analytic potential") {
    auto g = make_square_grid(1.0, 201);
    std::vector<double> c1(g.nx()), c2(g.ny());
    for (int k = 0; k < g.nx(); ++k) c1[k] = std::sin(g.x(k));
    for (int k = 0; k < g.ny(); ++k) c2[k] = 0.5*g.y(k)*g.y(k);
    auto sp = tabulated_superpotential(g, c1, c2);
    auto u0 = sample(g, [](double x, double y) {
        return std::cos(x)*std::cos(x) + std::sin(x) + y*y - 1;
    });
    CHECK(sp.profile(Axis::X).is_tabulated());
    CHECK(max_abs_interior(potentials(sp).u0 - u0, 2) < 1e-3);
}

TEST_CASE("negated superpotential swaps the potentials") {
    auto g = make_square_grid(1.0, 51);
    auto sp = catalog_superpotential("quadratic", {1.0, 0.5}, g);
    auto neg = sp.negated();
    CHECK(max_abs_interior(neg.chi() + sp.chi()) < 1e-15);
    CHECK(max_abs_interior(potentials(neg).u0 - potentials(sp).u2) < 1e-12);
}

TEST_CASE("catalog rejects unknown names and wrong arity") {
    auto g = make_square_grid(1.0, 11);
    CHECK_THROWS_AS(catalog_superpotential("cubic", {}, g), DomainError);
    CHECK_THROWS_AS(catalog_superpotential("linear", {1.0}, g), DomainError);
    CHECK_NOTHROW(catalog_superpotential("zero", {}, g));
}
