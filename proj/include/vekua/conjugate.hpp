#pragma once

#include <string>
#include <vector>

#include "vekua/grid.hpp"
#include "vekua/superpotential.hpp"

namespace vekua {

  struct ConjugateOptions {
      // Thresholds in units of h^2 * max(1, |input|): warn above `warn_factor`, fail above `cap_factor`.
      double warn_factor = 100.0;
      double cap_factor = 1000.0;
      int margin = 2;
      PathOrder order = PathOrder::XThenY;
  };

  // phi with d_zbar phi = Phi (Abar) or d_z phi = Phi (A), phi(z0) = 0, integrated along L-paths.
  struct PotentialIntegral {
      RealField value;
      double compatibility_defect = 0.0;  // scaled as in ConjugateOptions
      NodeIndex worst_node{};
      std::vector<std::string> warnings;
  };

  // Abar[Phi] = 2 int Phi1 dx + Phi2 dy; requires d_y Phi1 - d_x Phi2 = 0.
  PotentialIntegral abar_operator(ComplexField const &Phi, NodeIndex z0, ConjugateOptions const &opts = {});
  // A[Phi] = 2 int Phi1 dx - Phi2 dy; requires d_y Phi1 + d_x Phi2 = 0.
  PotentialIntegral a_operator(ComplexField const &Phi, NodeIndex z0, ConjugateOptions const &opts = {});

  struct ConjugateResult {
      RealField partner;
      double gauge_constant = 0.0;        // partner is fixed by partner(z0) = 0
      double vekua_residual = 0.0;        // max interior |V(W1 + i W2)|
      double partner_residual = 0.0;      // max interior |H0 W2| (resp. |H2 W1|) of the partner
      double input_residual = 0.0;        // max interior |H2 W1| (resp. |H0 W2|) of the input
      double compatibility_defect = 0.0;
      std::vector<std::string> warnings;
  };

  // W2 = e^{-chi} Abar[i e^{2chi} d_zbar(e^{-chi} W1)] for W1 in ker H2.
  ConjugateResult conjugate_from_w1(Superpotential const &sp, RealField const &w1, NodeIndex z0,
                                    ConjugateOptions const &opts = {});
  // W1 = -e^{chi} Abar[i e^{-2chi} d_zbar(e^{chi} W2)] for W2 in ker H0.
  ConjugateResult conjugate_from_w2(Superpotential const &sp, RealField const &w2, NodeIndex z0,
                                    ConjugateOptions const &opts = {});

  struct GaugeFit {
      double c = 0.0;
      double residual = 0.0;   // max interior |partner + c * zero_mode - reference|
  };

  // One-parameter least squares for the free constant multiplying the zero mode.
  GaugeFit fit_gauge(RealField const &partner, RealField const &reference, RealField const &zero_mode, int margin = 2);

} // namespace vekua
