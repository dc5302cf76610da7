#pragma once

#include <array>
#include <vector>

#include "vekua/grid.hpp"
#include "vekua/superpotential.hpp"

namespace vekua {

  // Auxiliary integrals along one axis, all anchored at the origin node:
  //   plain[0] = tilde[0] = 1,
  //   plain[n](x) = n int_0^x plain[n-1](s) exp((-1)^n 2 chi(s)) ds,
  //   tilde[n](x) = n int_0^x tilde[n-1](s) exp((-1)^(n+1) 2 chi(s)) ds,
  // and the derived systems
  //   phi[k]       = e^chi  * (k odd ? plain : tilde)[k],
  //   phi_tilde[k] = e^-chi * (k odd ? tilde : plain)[k].
  struct AxisSystem {
      std::vector<std::vector<double>> plain;
      std::vector<std::vector<double>> tilde;
      std::vector<std::vector<double>> phi;
      std::vector<std::vector<double>> phi_tilde;
  };

  AxisSystem build_axis_system(Grid1D const &grid, std::vector<double> const &chi, int n_max);

  // X, X~, phi, phi~ along x and Y, Y~, psi, psi~ along y.
  struct AuxSystem {
      Grid2D grid;
      int n_max = 0;
      AxisSystem x;
      AxisSystem y;
  };

  AuxSystem build_aux_system(Superpotential const &sp, int n_max);

  enum class Unit { One, I };

  // Z^(n)(1), Z^(n)(i) (sequence index 0) and Z_1^(n)(1), Z_1^(n)(i) (sequence index 1),
  // n = 0..n_max, centered at the origin node.
  class FormalPowerTable {
    public:
      FormalPowerTable(Grid2D grid, int n_max, int period);

      Grid2D const & grid() const { return grid_; }
      int n_max() const { return n_max_; }
      NodeIndex center() const { return origin_node(grid_); }
      // Period of the generating sequence: 2, or 1 when chi1 vanishes identically.
      int period() const { return period_; }

      ComplexField const & power(int m, int n, Unit unit) const;
      ComplexField & power(int m, int n, Unit unit);

      // Z_m^(n)(a1 + i a2) = a1 Z_m^(n)(1) + a2 Z_m^(n)(i)  (real-linear in a).
      ComplexField formal_power(int n, complex a, int m = 0) const;

    private:
      void check(int m, int n) const;

      Grid2D grid_;
      int n_max_;
      int period_;
      std::array<std::vector<ComplexField>, 2> one_, i_;
  };

  // Binomial assembly of the formal powers from the auxiliary systems; the sequence-1
  // powers use the same sums with phi and phi~ exchanged.
  FormalPowerTable assemble_formal_powers(AuxSystem const &aux, Superpotential const &sp);
  inline FormalPowerTable assemble_formal_powers(Superpotential const &sp, int n_max) {
      return assemble_formal_powers(build_aux_system(sp, n_max), sp);
  }

  // (F_m, G_m)-integral of w along L-paths from z0:
  //   F(z) Re int G* w dz + G(z) Re int F* w dz,  F* = -2 conj F/(F conj G - conj F G),
  //   G* = 2 conj G/(F conj G - conj F G).
  ComplexField fg_integral(int m, Superpotential const &sp, ComplexField const &w,
                           NodeIndex z0, PathOrder order = PathOrder::XThenY);
  inline ComplexField fg_integral(int m, Superpotential const &sp, ComplexField const &w) {
      return fg_integral(m, sp, w, origin_node(sp.grid()));
  }

  // Real (lambda, mu) with lambda F + mu G = a at one node.
  std::array<double, 2> decompose(complex a, complex F, complex G);

  // The same table built by repeated (F_m, G_m)-integration,
  // Z_m^(n+1) = (n+1) int Z_{m+1}^(n) d_(F_m,G_m) zeta. Independent of the aux systems.
  FormalPowerTable recursive_formal_powers(Superpotential const &sp, int n_max);

  double binomial(int n, int k);

} // namespace vekua
