#pragma once

#include <functional>
#include <string>
#include <vector>

#include "vekua/grid.hpp"

namespace vekua {

  enum class Axis { X, Y };

  // A real function of one variable with its first two derivatives, evaluable anywhere
  // on its interval. Closed-form families carry exact callbacks; tabulated profiles
  // interpolate node samples (derivatives from finite differences).
  class AxisProfile {
    public:
      using Fn = std::function<double(double)>;

      AxisProfile() = default;
      static AxisProfile analytic(Fn value, Fn first, Fn second);
      static AxisProfile tabulated(Grid1D const &grid, std::vector<double> samples);

      double value(double x) const { return value_(x); }
      double first(double x) const { return first_(x); }
      double second(double x) const { return second_(x); }
      // Potential of the 1-D Schroedinger operator with zero mode exp(chi): chi'' + chi'^2.
      double potential(double x) const { double const d = first_(x); return second_(x) + d*d; }
      bool is_tabulated() const { return tabulated_; }

      AxisProfile negated() const;

    private:
      Fn value_, first_, second_;
      bool tabulated_ = false;
  };

  struct AxisSamples {
      std::vector<double> value;
      std::vector<double> first;
      std::vector<double> second;
  };

  // Separable superpotential chi(x, y) = chi1(x) + chi2(y) sampled on a Grid2D,
  // normalized so that chi1(0) = chi2(0) = 0.
  class Superpotential {
    public:
      Superpotential(std::string name, std::vector<double> params, Grid2D grid,
                     AxisProfile chi1, AxisProfile chi2);

      std::string const & name() const { return name_; }
      std::vector<double> const & params() const { return params_; }
      Grid2D const & grid() const { return grid_; }

      AxisProfile const & profile(Axis axis) const { return axis == Axis::X ? chi1_ : chi2_; }
      AxisSamples const & samples(Axis axis) const { return axis == Axis::X ? s1_ : s2_; }
      Grid1D const & axis_grid(Axis axis) const { return axis == Axis::X ? grid_.gx : grid_.gy; }

      RealField chi() const;
      RealField chi_x() const;
      RealField chi_y() const;
      RealField chi_xx() const;
      RealField chi_yy() const;

      // d/dx_j exp(chi_j) at 0, i.e. chi_j'(0) under the normalization.
      double h_parameter(Axis axis) const { return profile(axis).first(0.0); }

      // Same family on a different grid.
      Superpotential on_grid(Grid2D const &grid) const;
      // chi1 -> -chi1: the superpotential of the successor pair (exp(-chi1+chi2), i exp(chi1-chi2)).
      Superpotential successor() const;
      // chi -> -chi.
      Superpotential negated() const;

      // Largest |sampled derivative - finite difference of sampled values| in units of h^2*scale.
      double derivative_consistency() const;

    private:
      std::string name_;
      std::vector<double> params_;
      Grid2D grid_;
      AxisProfile chi1_, chi2_;
      AxisSamples s1_, s2_;
  };

  // Catalog: "zero", "linear" [alpha, beta] (chi = alpha x + beta y),
  // "quadratic" [alpha, beta] (chi = alpha x^2/2 + beta y^2/2).
  Superpotential catalog_superpotential(std::string const &name, std::vector<double> const &params,
                                        Grid2D const &grid);
  // Node samples chi1 on gx and chi2 on gy; throws unless chi_j(0) = 0 within 1e-10.
  Superpotential tabulated_superpotential(Grid2D const &grid, std::vector<double> chi1,
                                          std::vector<double> chi2);

  struct Potentials {
      RealField u0;               // sum (d_k chi)^2 - d_k^2 chi
      RealField u2;               // sum (d_k chi)^2 + d_k^2 chi
      RealField m11, m12, m21, m22;  // matrix potential of H1 (H1 = -Laplacian + M)
  };

  Potentials potentials(Superpotential const &sp);
  // Matrix potential written through complex derivatives of chi:
  // 4 [[|d_z chi|^2 + Re d_z^2 chi, -Im d_z^2 chi], [-Im d_z^2 chi, |d_z chi|^2 - Re d_z^2 chi]].
  Potentials potentials_complex_form(Superpotential const &sp);

  struct GeneratingPair {
      ComplexField F;
      ComplexField G;
  };

  // (F_m, G_m) of the period-two Cartesian generating sequence:
  // even m -> (e^chi, i e^-chi), odd m -> (e^{-chi1+chi2}, i e^{chi1-chi2}).
  GeneratingPair generating_pair(Superpotential const &sp, int m);

  struct CharacteristicCoefficients {
      ComplexField a, b, A, B;
  };

  // Coefficients of the Vekua equation d_zbar W = a W + b conj(W) and of the Bers derivative
  // d_z W - A W - B conj(W), with finite-difference Wirtinger derivatives.
  CharacteristicCoefficients characteristic_coefficients(GeneratingPair const &pair);

  // d_zbar R + |R|^2 - U/4, with R = -d_z chi, U = U0 (which == 0) or R = d_z chi, U = U2 (which == 2).
  RealField riccati_residual(Superpotential const &sp, int which);

} // namespace vekua
