#pragma once

#include <string>
#include <vector>

#include "vekua/formal_powers.hpp"
#include "vekua/grid.hpp"
#include "vekua/superpotential.hpp"

namespace vekua {

  // a_n = W^[n](z0)/n!, W^[n+1] the Bers derivative of W^[n] with respect to (F_n, G_n).
  struct TaylorCoefficients {
      NodeIndex z0{};
      std::vector<complex> a;
      // |a_n(h) - a_n(2h)| plus a roundoff term eps |W| h^-n / n!.
      std::vector<double> uncertainty;
  };

  inline constexpr int max_taylor_order = 6;

  // Coefficients at the table center. Throws PreconditionError when a coefficient's uncertainty
  // exceeds the largest coefficient magnitude (finer grid needed).
  TaylorCoefficients taylor_coefficients(Superpotential const &sp, ComplexField const &w,
                                         FormalPowerTable const &table, int n);

  // sum_n Z^(n)(a_n, z0; z)
  ComplexField evaluate_series(TaylorCoefficients const &coeffs, FormalPowerTable const &table);

  struct SeriesCheck {
      double residual = 0.0;     // max |series - W| on the centered subrectangle
      double noise_bound = 0.0;  // sum_n uncertainty_n (|Z^(n)(1)| + |Z^(n)(i)|) there
  };

  SeriesCheck check_series(TaylorCoefficients const &coeffs, FormalPowerTable const &table,
                           ComplexField const &w, double fraction = 0.5);

  // ker H0: Im Z^(n)(1), Im Z^(n)(i);  ker H2: Re Z^(n)(1), Re Z^(n)(i).
  enum class BasisKind { KerH0, KerH2 };

  struct FitOptions {
      int margin = 2;
      // target must satisfy |H target| <= kernel_cap_factor * h^2 * max(1, |target|)
      double kernel_cap_factor = 1000.0;
      // smallest accepted ratio of singular values of the column-normalized basis
      double rank_tol = 1e-10;
  };

  struct FitResult {
      int degree = 0;
      BasisKind kind = BasisKind::KerH0;
      // slot 2n is the Z^(n)(1) column, slot 2n + 1 the Z^(n)(i) column
      std::vector<double> coefficients;
      // slots whose basis column vanishes identically; their coefficient is 0
      std::vector<int> dropped;
      std::vector<double> singular_values;
      double residual_max = 0.0;
      double residual_rms = 0.0;
      double kernel_residual = 0.0;   // max interior |H target| in units of h^2 max(1, |target|)
  };

  FitResult fit_formal_polynomial(Superpotential const &sp, RealField const &target, BasisKind kind,
                                  FormalPowerTable const &table, int degree, FitOptions const &opts = {});

  // sum over slots of coefficient * basis column.
  RealField evaluate_fit(FitResult const &fit, FormalPowerTable const &table);

} // namespace vekua
