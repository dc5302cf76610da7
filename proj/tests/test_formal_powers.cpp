#include <doctest.h>

#include <cmath>

#include "vekua/formal_powers.hpp"
#include "vekua/susy_operators.hpp"

using namespace vekua;

TEST_CASE("with chi = 0 the formal powers are z^n") {
    auto g = make_square_grid(1.0, 201);
    auto sp = catalog_superpotential("zero", {}, g);
    auto t = assemble_formal_powers(sp, 6);
    CHECK(t.period() == 1);
    for (int n = 0; n <= 6; ++n) {
        auto zn = sample(g, [n](double x, double y) { return std::pow(complex{x, y}, n); });
        CHECK(max_abs_interior(t.power(0, n, Unit::One) - zn) < 5e-3);
        CHECK(max_abs_interior(t.power(0, n, Unit::I) - complex{0, 1}*zn) < 5e-3);
    }
}

TEST_CASE("axis system for chi = x has phi_1 = sinh x") {
    Grid1D g(1.0, 401);
    std::vector<double> chi(g.size());
    for (int k = 0; k < g.size(); ++k) chi[k] = g.node(k);
    auto s = build_axis_system(g, chi, 2);
    double err0 = 0, err1 = 0, err2 = 0;
    for (int k = 0; k < g.size(); ++k) {
        double const x = g.node(k);
        err0 = std::max(err0, std::abs(s.phi[0][k] - std::exp(x)));
        err1 = std::max(err1, std::abs(s.phi[1][k] - std::sinh(x)));
        err2 = std::max(err2, std::abs(s.phi[2][k] - (x*std::exp(x) - std::sinh(x))));
    }
    CHECK(err0 < 1e-14);
    CHECK(err1 < 1e-4);
    CHECK(err2 < 1e-4);
}

TEST_CASE("zeroth powers are the generating pair") {
    auto g = make_square_grid(1.0, 51);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    auto t = assemble_formal_powers(sp, 1);
    auto p = generating_pair(sp, 0);
    CHECK(max_abs_interior(t.power(0, 0, Unit::One) - p.F) < 1e-14);
    CHECK(max_abs_interior(t.power(0, 0, Unit::I) - p.G) < 1e-14);
}

TEST_CASE("formal powers solve the Vekua equation") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    SusyAlgebra alg(sp);
    auto t = assemble_formal_powers(sp, 5);
    double const h2 = g.gx.spacing()*g.gx.spacing();
    for (int n = 0; n <= 5; ++n) {
        for (complex a : {complex{1, 0}, complex{0, 1}, complex{0.6, -0.8}}) {
            CHECK(max_abs_interior(alg.vekua(VekuaKind::V, t.formal_power(n, a)), 2) < 100*h2);
            CHECK(max_abs_interior(alg.vekua(VekuaKind::V1, t.formal_power(n, a, 1)), 2) < 100*h2);
        }
    }
}

TEST_CASE("assembled and recursive tables coincide") {
    // both routes reduce to the same trapezoid sums along L-paths
    auto sp = catalog_superpotential("quadratic", {1.0, 0.5}, make_square_grid(1.0, 51));
    auto a = assemble_formal_powers(sp, 4), r = recursive_formal_powers(sp, 4);
    for (int m : {0, 1}) {
        for (int n = 0; n <= 4; ++n) {
            CHECK(max_abs_interior(a.power(m, n, Unit::One) - r.power(m, n, Unit::One)) < 1e-12);
            CHECK(max_abs_interior(a.power(m, n, Unit::I) - r.power(m, n, Unit::I)) < 1e-12);
        }
    }
}

TEST_CASE("Bers derivative lowers the exponent") {
    auto g = make_square_grid(1.0, 201);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    SusyAlgebra alg(sp);
    auto t = assemble_formal_powers(sp, 3);
    double const h2 = g.gx.spacing()*g.gx.spacing();
    // d_(F,G) Z^(n)(a) = n Z_1^(n-1)(a)
    auto lhs = alg.bers_derivative(t.power(0, 3, Unit::I), 0);
    CHECK(max_abs_interior(lhs - 3.0*t.power(1, 2, Unit::I), 3) < 300*h2);
}

TEST_CASE("formal powers are real linear in the coefficient") {
    auto g = make_square_grid(1.0, 21);
    auto t = assemble_formal_powers(catalog_superpotential("linear", {1.0, -0.5}, g), 2);
    auto lhs = t.formal_power(2, complex{2, -3});
    auto rhs = 2.0*t.power(0, 2, Unit::One) - 3.0*t.power(0, 2, Unit::I);
    CHECK(max_abs_interior(lhs - rhs) < 1e-13);
}

TEST_CASE("decompose inverts lambda F + mu G") {
    complex const F{1.3, 0.2}, G{-0.1, 0.9}, a{0.4, -2.0};
    auto [l, m] = decompose(a, F, G);
    CHECK(std::abs(l*F + m*G - a) < 1e-14);
    CHECK_THROWS_AS(decompose(a, F, 2.0*F), DegeneratePairError);
}

TEST_CASE("binomial coefficients") {
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(6, 0) == 1);
    CHECK(binomial(6, 6) == 1);
}
