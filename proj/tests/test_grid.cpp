#include <doctest.h>

#include <cmath>
#include <sstream>

#include "vekua/field_io.hpp"
#include "vekua/grid.hpp"

using namespace vekua;

namespace {
  double sup_error_dx(int n) {
      auto g = make_square_grid(1.0, n);
      auto f = sample(g, [](double x, double y) { return std::sin(2*x)*std::cos(y); });
      auto err = d_x(f) - sample(g, [](double x, double y) { return 2*std::cos(2*x)*std::cos(y); });
      return max_abs_interior(err);
  }
}

TEST_CASE("grid nodes are symmetric about the origin") {
    Grid1D g(2.0, 41);
    CHECK(g.spacing() == doctest::Approx(0.1));
    CHECK(g.origin_index() == 20);
    CHECK(g.node(g.origin_index()) == 0.0);
    CHECK(g.node(0) == -g.node(40));
    CHECK(g.find_node(0.3) == 23);
}

TEST_CASE("invalid grids are rejected") {
    CHECK_THROWS_AS(make_grid(1.0, 1.0, 100, 101), Error);
    CHECK_THROWS_AS(make_grid(1.0, 1.0, 1, 101), Error);
    CHECK_THROWS_AS(make_grid(-1.0, 1.0, 11, 11), Error);
}

TEST_CASE("first derivative converges at second order including the boundary") {
    double const e1 = sup_error_dx(101), e2 = sup_error_dx(201);
    CHECK(e1 < 1e-2);
    CHECK(e1/e2 == doctest::Approx(4.0).epsilon(0.15));
}

TEST_CASE("Wirtinger derivatives of z^2") {
    auto g = make_square_grid(1.0, 101);
    auto w = sample(g, [](double x, double y) { complex z{x, y}; return z*z; });
    auto dz = d_z(w) - sample(g, [](double x, double y) { return 2.0*complex{x, y}; });
    CHECK(max_abs_interior(dz) < 1e-10);
    CHECK(max_abs_interior(d_zbar(w)) < 1e-10);
}

TEST_CASE("Laplacian of a harmonic polynomial vanishes") {
    auto g = make_square_grid(1.0, 51);
    auto f = sample(g, [](double x, double y) { return x*x*x - 3*x*y*y; });
    CHECK(max_abs_interior(laplacian(f), 1) < 1e-9);
}

TEST_CASE("cumulative trapezoid of exp(-2s) from the origin") {
    Grid1D g(1.0, 2001);
    std::vector<double> s(g.size());
    for (int k = 0; k < g.size(); ++k) s[k] = std::exp(-2*g.node(k));
    auto I = cumulative_integral_1d<double>(g, s, g.origin_index());
    CHECK(I[g.origin_index()] == 0.0);
    CHECK(I.back() == doctest::Approx((1 - std::exp(-2.0))/2).epsilon(1e-6));
    CHECK(I.front() == doctest::Approx((1 - std::exp(2.0))/2).epsilon(1e-6));
}

TEST_CASE("line integral of 2z recovers z^2 from the origin") {
    auto g = make_grid(1.0, 0.5, 101, 51);
    auto w = sample(g, [](double x, double y) { return 2.0*complex{x, y}; });
    auto I = line_integral(w, origin_node(g));
    auto exact = sample(g, [](double x, double y) { complex z{x, y}; return z*z; });
    CHECK(max_abs_interior(I - exact) < 1e-12);
    auto J = line_integral(w, origin_node(g), PathOrder::YThenX);
    CHECK(max_abs_interior(J - exact) < 1e-12);
}

TEST_CASE("restriction to every other node keeps the sub-lattice values") {
    auto g = make_square_grid(1.0, 21);
    auto f = sample(g, [](double x, double y) { return x + 10*y; });
    auto c = restrict_every_other(f);
    CHECK(c.grid() == coarsened(g));
    CHECK(c.grid().nx() == 11);
    CHECK(c(3, 7) == f(6, 14));
}

TEST_CASE("mismatched grids raise ShapeError") {
    auto a = RealField(make_square_grid(1.0, 11));
    auto b = RealField(make_square_grid(1.0, 13));
    CHECK_THROWS_AS(a + b, ShapeError);
}

TEST_CASE("field CSV round trip is exact") {
    auto g = make_grid(1.0, 0.5, 11, 7);
    auto w = sample(g, [](double x, double y) { return complex{std::exp(x)*std::sin(y), 1.0/3 + x*y}; });
    std::stringstream ss;
    io::write_field_csv(ss, w);
    auto r = io::read_field_csv(ss);
    CHECK(r.grid() == g);
    for (std::size_t k = 0; k < w.size(); ++k) CHECK(r[k] == w[k]);
}

TEST_CASE("malformed field CSV is rejected") {
    std::stringstream ss("x,y,re,im\n0,0,1\n");
    CHECK_THROWS_AS(io::read_field_csv(ss), Error);
}
