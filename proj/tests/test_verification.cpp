#include <doctest.h>

#include "vekua/verification.hpp"

using namespace vekua;

namespace {
  Measurement m(double r, double cap, CheckKind k = CheckKind::Converging) {
      return {"id", "tag", k, r, cap, 1.0};
  }
}

TEST_CASE("judge accepts second-order convergence") {
    ToleranceFactors tol;
    auto row = judge(m(1e-3, 1e-2), m(2.5e-4, 2.5e-3), tol);
    CHECK(row.passed);
    CHECK(row.ratio == doctest::Approx(4.0));
}

TEST_CASE("judge rejects first-order convergence and cap violations") {
    ToleranceFactors tol;
    CHECK_FALSE(judge(m(1e-3, 1e-2), m(5e-4, 2.5e-3), tol).passed);
    auto row = judge(m(2e-2, 1e-2), m(5e-3, 2.5e-3), tol);
    CHECK_FALSE(row.passed);
    CHECK(row.verdict == "fail: cap");
}

TEST_CASE("residuals at rounding level skip the ratio test") {
    ToleranceFactors tol;
    auto row = judge(m(1e-12, 1e-2), m(3e-12, 2.5e-3), tol);
    CHECK(row.passed);
    CHECK(row.verdict == "pass (exact)");
}

TEST_CASE("exact rows need the cap on both grids") {
    ToleranceFactors tol;
    CHECK(judge(m(1e-13, 1e-12, CheckKind::Exact), m(1e-13, 1e-12, CheckKind::Exact), tol).passed);
    CHECK_FALSE(judge(m(1e-13, 1e-12, CheckKind::Exact), m(1e-11, 1e-12, CheckKind::Exact), tol).passed);
}

TEST_CASE("corpus scale never drops below one") {
    auto g = make_square_grid(1.0, 21);
    CHECK(corpus_scale(ComplexField(g)) == 1.0);
    auto big = sample(g, [](double x, double) { return complex{5*x, 0}; });
    CHECK(corpus_scale(big, 0) == doctest::Approx(5.0));
}

TEST_CASE("battery passes on a small grid and detects a corrupted U0") {
    VerifySettings s;
    s.n1 = s.n2 = 101;
    auto factory = [](Grid2D const &g) { return catalog_superpotential("quadratic", {1.0, 0.5}, g); };
    auto good = run_verification(factory, s);
    CHECK_MESSAGE(good.passed, good.first_failure);
    CHECK(good.rows.size() > 200);
    s.u0_offset = 1.0;
    auto bad = run_verification(factory, s);
    CHECK_FALSE(bad.passed);
    CHECK_FALSE(bad.first_failure.empty());
}
