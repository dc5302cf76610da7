#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vekua/grid.hpp"
#include "vekua/superpotential.hpp"

namespace vekua {

  // Caps are C * h^2 * scale with the constants below (h = max axis spacing of the coarse grid).
  struct ToleranceFactors {
      double analytic_limit = 50.0;
      double vekua = 100.0;
      double zero_mode = 10.0;
      double ground_state = 200.0;
      double operator_identity = 100.0;
      double transmutation = 100.0;
      double mapping = 300.0;
      double commuting = 300.0;
      double conjugate = 50.0;
      double fit_residual = 10.0;
      double fit_coefficient = 1e-6;   // absolute
      double exact = 1e-9;             // relative floor below which a residual counts as exact
      double rounding = 1e-6;          // fraction of the cap treated as rounding noise (no ratio test)
      double ratio_lo = 3.5;
      double ratio_hi = 4.5;
  };

  enum class CheckKind {
      Converging,  // O(h^2): cap on the coarse grid and halving ratio in [lo, hi] unless exact
      Exact,       // cap on both grids, no ratio
      Bound        // residual within a cap supplied by the check itself, both grids
  };

  struct Measurement {
      std::string identity;
      std::string tag;
      CheckKind kind = CheckKind::Converging;
      double residual = 0.0;
      double cap = 0.0;
      double scale = 1.0;
  };

  struct CheckRow {
      std::string identity;
      std::string tag;
      std::string grid;        // "N1xN2/M1xM2"
      double residual = 0.0;   // coarse grid
      double residual_fine = 0.0;
      double cap = 0.0;
      double ratio = 0.0;      // residual / residual_fine, 0 when undefined
      std::string verdict;     // "pass", "pass (exact)", "fail: cap", "fail: ratio"
      bool passed = false;
  };

  struct VerifySettings {
      double a1 = 1.0, a2 = 1.0;
      int n1 = 201, n2 = 201;
      double u0_offset = 0.0;
      ToleranceFactors tol;
  };

  using SuperpotentialFactory = std::function<Superpotential(Grid2D const &)>;

  // All checks on one grid, in a fixed order.
  std::vector<Measurement> measure_identities(Superpotential const &sp, VerifySettings const &settings);

  struct VerifyReport {
      std::vector<CheckRow> rows;
      bool passed = false;
      std::string first_failure;
  };

  // Runs the battery at (N1, N2) and (2N1 - 1, 2N2 - 1) and judges every row.
  VerifyReport run_verification(SuperpotentialFactory const &factory, VerifySettings const &settings);

  CheckRow judge(Measurement const &coarse, Measurement const &fine, ToleranceFactors const &tol);

  // Smooth test fields: low-degree polynomials times exp(-(x^2 + y^2)).
  struct CorpusField {
      std::string name;
      std::function<complex(double, double)> fn;
  };
  std::vector<CorpusField> const & test_corpus();

  // max(1, interior max-norm)
  double corpus_scale(ComplexField const &w, int margin = 2);

} // namespace vekua
