#pragma once

#include <cstdlib>
#include <span>
#include <vector>

#include "vekua/grid.hpp"
#include "vekua/superpotential.hpp"

namespace vekua {

  // Values on the double cone {(x, t) : |t| <= |x|} over a symmetric axis grid.
  // Row m (x = m h, m = -c..c) holds entries l = -|m|..|m| (t = l h).
  class KernelTable {
    public:
      KernelTable() = default;
      explicit KernelTable(Grid1D const &grid);

      Grid1D const & grid() const { return grid_; }
      int half() const { return grid_.origin_index(); }

      double & at(int m, int l) { return values_[offset(m) + (l + std::abs(m))]; }
      double at(int m, int l) const { return values_[offset(m) + (l + std::abs(m))]; }
      std::span<double const> row(int m) const { return {values_.data() + offset(m), std::size_t(2*std::abs(m) + 1)}; }
      std::span<double> row(int m) { return {values_.data() + offset(m), std::size_t(2*std::abs(m) + 1)}; }

    private:
      std::size_t offset(int m) const { return offsets_[m + half()]; }

      Grid1D grid_;
      std::vector<std::size_t> offsets_;
      std::vector<double> values_;
  };

  struct GoursatOptions {
      double tol = 1e-12;
      int max_iter = 60;
  };

  // Solution K of (d_x^2 - q(x)) K = d_t^2 K with K(x, x) = 1/2 int_0^x q and K(x, -x) = 0,
  // where q = chi'' + chi'^2.
  struct GoursatKernel {
      Grid1D grid;
      double h_param = 0.0;          // chi'(0)
      std::vector<double> q;         // potential at the axis nodes
      KernelTable K;
      int iterations = 0;
      std::vector<double> defect_history;
      double final_defect = 0.0;
  };

  // Picard iteration on K(u, v) = K(u, 0) + int_0^u int_0^v q(a + b) K(a, b) db da in the
  // characteristic variables u = (x + t)/2, v = (x - t)/2, on a lattice of spacing h/2 so that
  // every (x_m, t_l) node of the cone is a lattice point. Throws ConvergenceError (with the
  // defect history) when max_iter is exhausted.
  GoursatKernel solve_goursat(AxisProfile const &chi, Grid1D const &grid, GoursatOptions const &opts = {});
  inline GoursatKernel solve_goursat(Superpotential const &sp, Axis axis, GoursatOptions const &opts = {}) {
      return solve_goursat(sp.profile(axis), sp.axis_grid(axis), opts);
  }

  // K(x, t; h) = h/2 + K(x, t) + h/2 int_t^x [K(x, s) - K(x, -s)] ds.
  KernelTable build_kernel_with_h(GoursatKernel const &kernel);

  enum class Variant { Plain, Tilde };

  // The 1-D transmutation operators of one axis:
  //   T[f](x)  = f(x) + int_{-x}^{x} K(x, t; h) f(t) dt,
  //   T~[f](x) = f(x) + int_{-x}^{x} K~(x, t; -h) f(t) dt,
  // with oriented limits for x < 0.
  class AxisTransmutation {
    public:
      AxisTransmutation(AxisProfile chi, Grid1D const &grid, GoursatOptions const &opts = {});

      Grid1D const & grid() const { return grid_; }
      GoursatKernel const & goursat() const { return goursat_; }
      KernelTable const & kernel() const { return full_; }
      KernelTable const & kernel_tilde() const { return tilde_; }

      std::vector<double> apply(std::span<double const> f, Variant variant = Variant::Plain) const;
      // T~[f] = e^{-chi} (int_0^x e^{chi} T[f'] ds + f(0)), f' by finite differences.
      std::vector<double> apply_tilde_derivative_form(std::span<double const> f) const;

      // Max disagreement of the two T~ routes over the probe set {1, x, x^2, x^3},
      // relative to max(1, |T~ f|), recorded at construction.
      double tilde_route_disagreement() const { return tilde_check_; }

    private:
      std::vector<double> volterra(KernelTable const &kernel, std::span<double const> f) const;

      AxisProfile chi_;
      Grid1D grid_;
      GoursatKernel goursat_;
      KernelTable full_;
      KernelTable tilde_;
      std::vector<double> chi_samples_;
      double tilde_check_ = 0.0;
  };

  // Kernel of T~ assembled from the full kernel K(x, t; h) of T:
  //   K~(x, t) = e^{-chi(x)} [ e^{chi(t)} K(t, t; h) - (e^chi)'(t) - int_t^x e^{chi(s)} d_t K(s, t; h) ds ]
  //     for t on the same side of 0 as x, and
  //   K~(x, t) = -e^{-chi(x)} [ e^{chi(-t)} K(-t, t; h) + int_{-t}^x e^{chi(s)} d_t K(s, t; h) ds ]
  //     otherwise (K(-t, t; h) = h/2).
  KernelTable build_tilde_kernel(KernelTable const &full, AxisProfile const &chi);

  // Bold T0 = T1 T2 P+ + i T~1 T~2 P-,  bold T1 = T~1 T2 P+ + i T1 T~2 P-,
  // with T1, T~1 acting along x and T2, T~2 along y.
  class Transmutation2D {
    public:
      explicit Transmutation2D(Superpotential const &sp, GoursatOptions const &opts = {});

      Grid2D const & grid() const { return grid_; }
      AxisTransmutation const & axis(Axis a) const { return a == Axis::X ? x_ : y_; }

      // One axis operator applied to every line of a real field.
      RealField apply_axis(Axis a, Variant v, RealField const &f) const;
      ComplexField apply_axis(Axis a, Variant v, ComplexField const &w) const;

      ComplexField t0(ComplexField const &w) const;
      ComplexField t1(ComplexField const &w) const;

    private:
      Grid2D grid_;
      AxisTransmutation x_, y_;
  };

} // namespace vekua
