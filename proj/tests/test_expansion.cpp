#include <doctest.h>

#include <cmath>

#include "vekua/expansion.hpp"

using namespace vekua;

TEST_CASE("Taylor coefficients of z^2 with chi = 0") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("zero", {}, g);
    auto tab = assemble_formal_powers(sp, 4);
    auto w = sample(g, [](double x, double y) { complex z{x, y}; return z*z; });
    auto c = taylor_coefficients(sp, w, tab, 4);
    REQUIRE(c.a.size() == 5);
    CHECK(std::abs(c.a[2] - 1.0) < 1e-6);
    for (int n : {0, 1, 3, 4}) CHECK(std::abs(c.a[n]) < 1e-6);
}

TEST_CASE("Taylor coefficients of the generating function F") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    auto tab = assemble_formal_powers(sp, 3);
    auto c = taylor_coefficients(sp, generating_pair(sp, 0).F, tab, 3);
    CHECK(std::abs(c.a[0] - 1.0) < 1e-12);
    for (int n = 1; n <= 3; ++n) CHECK(std::abs(c.a[n]) <= c.uncertainty[n] + 1e-6);
}

TEST_CASE("Taylor round trip stays within the noise bound") {
    auto g = make_square_grid(1.0, 201);
    auto sp = catalog_superpotential("quadratic", {1.0, 0.5}, g);
    auto tab = assemble_formal_powers(sp, 4);
    auto w = tab.formal_power(3, complex{0.5, -1.0}) + tab.formal_power(1, complex{0, 2});
    auto c = taylor_coefficients(sp, w, tab, 4);
    auto chk = check_series(c, tab, w);
    CHECK(chk.residual <= chk.noise_bound);
    CHECK(std::abs(c.a[3] - complex{0.5, -1.0}) < 1e-3);
    CHECK(std::abs(c.a[1] - complex{0, 2}) < 1e-3);
}

TEST_CASE("fit of x^2 - y^2 with chi = 0 lands on Im Z^(2)(i)") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("zero", {}, g);
    auto tab = assemble_formal_powers(sp, 3);
    auto target = sample(g, [](double x, double y) { return x*x - y*y; });
    auto fit = fit_formal_polynomial(sp, target, BasisKind::KerH0, tab, 3);
    REQUIRE(fit.coefficients.size() == 8);
    for (int s = 0; s < 8; ++s) CHECK(std::abs(fit.coefficients[s] - (s == 5 ? 1.0 : 0.0)) < 1e-6);
    // Im Z^(0)(1) = 0 for chi = 0
    CHECK(fit.dropped == std::vector<int>{0});
}

TEST_CASE("self fit of the ground state") {
    auto g = make_square_grid(1.0, 101);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    auto tab = assemble_formal_powers(sp, 2);
    auto fit = fit_formal_polynomial(sp, exp(-sp.chi()), BasisKind::KerH0, tab, 2);
    for (int s = 0; s < 6; ++s) CHECK(std::abs(fit.coefficients[s] - (s == 1 ? 1.0 : 0.0)) < 1e-6);
    CHECK(max_abs_interior(evaluate_fit(fit, tab) - exp(-sp.chi())) < 1e-10);
}

TEST_CASE("fit rejects targets outside the kernel") {
    auto g = make_square_grid(1.0, 51);
    auto sp = catalog_superpotential("quadratic", {1.0, 1.0}, g);
    auto tab = assemble_formal_powers(sp, 2);
    CHECK_THROWS_AS(fit_formal_polynomial(sp, exp(sp.chi()), BasisKind::KerH0, tab, 2), PreconditionError);
}

TEST_CASE("fit residual does not grow with the degree") {
    auto g = make_square_grid(1.0, 81);
    auto sp = catalog_superpotential("zero", {}, g);
    auto tab = assemble_formal_powers(sp, 6);
    // harmonic, so in the kernel of H0 = -Laplacian, but not a finite formal polynomial
    auto target = sample(g, [](double x, double y) { return std::exp(x)*std::cos(y); });
    double prev = 1e300;
    for (int n = 1; n <= 6; ++n) {
        auto fit = fit_formal_polynomial(sp, target, BasisKind::KerH0, tab, n);
        CHECK(fit.residual_rms <= prev*(1 + 1e-9));
        prev = fit.residual_rms;
    }
    CHECK(prev < 1e-3);
}
