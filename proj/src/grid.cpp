#include "vekua/grid.hpp"

#include <algorithm>
#include <string>

namespace vekua {

  Grid1D::Grid1D(double half_width, int node_count)
      : half_width_(half_width), nodes_(node_count) {
      if (!(half_width > 0)) throw DomainError("grid half-width must be positive");
      if (node_count < 3 || node_count % 2 == 0) throw DomainError("grid node count must be odd and >= 3, got " + std::to_string(node_count));
      spacing_ = 2*half_width/(node_count - 1);
  }

  std::vector<double> Grid1D::nodes() const {
      std::vector<double> x(nodes_);
      for (int k = 0; k < nodes_; ++k) x[k] = node(k);
      return x;
  }

  int Grid1D::find_node(double x, double rel_tol) const {
      double const s = x/spacing_ + origin_index();
      int const k = int(std::lround(s));
      if (k < 0 || k >= nodes_) return -1;
      if (std::abs(s - k) > rel_tol*std::max(1.0, double(nodes_))) return -1;
      return k;
  }

  Grid2D make_grid(double a1, double a2, int n1, int n2) {
      return Grid2D{Grid1D(a1, n1), Grid1D(a2, n2)};
  }

  NodeIndex node_at(Grid2D const &g, double x, double y) {
      int const i = g.gx.find_node(x), j = g.gy.find_node(y);
      if (i < 0 || j < 0) {
          throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) + ") is not a grid node");
      }
      return {i, j};
  }

  RealField real_part(ComplexField const &w) { return map(w, [](complex v) { return v.real(); }); }
  RealField imag_part(ComplexField const &w) { return map(w, [](complex v) { return v.imag(); }); }
  ComplexField conj(ComplexField const &w) { return map(w, [](complex v) { return std::conj(v); }); }
  ComplexField to_complex(RealField const &re) { return map(re, [](double v) { return complex(v, 0.0); }); }
  ComplexField to_complex(RealField const &re, RealField const &im) {
      return zip(re, im, [](double a, double b) { return complex(a, b); });
  }
  RealField exp(RealField const &f) { return map(f, [](double v) { return std::exp(v); }); }

  Grid2D coarsened(Grid2D const &g) {
      auto coarse_axis = [](Grid1D const &a) {
          int const c = a.origin_index();
          // keep indices congruent to c (mod 2); the outermost node is dropped when c is odd
          int const first = c % 2;
          int const count = (a.size() - 1 - first)/2 + 1;
          int const kept = (count % 2 == 1) ? count : count - 1;
          double const half = (kept - 1)*a.spacing();
          return Grid1D(half, kept);
      };
      return Grid2D{coarse_axis(g.gx), coarse_axis(g.gy)};
  }

  template <typename T>
  Field<T> restrict_every_other(Field<T> const &f) {
      auto const &g = f.grid();
      Grid2D const cg = coarsened(g);
      int const ox = g.origin_i() - 2*cg.origin_i();
      int const oy = g.origin_j() - 2*cg.origin_j();
      Field<T> out(cg);
      for (int j = 0; j < cg.ny(); ++j) {
          for (int i = 0; i < cg.nx(); ++i) out(i, j) = f(ox + 2*i, oy + 2*j);
      }
      return out;
  }

  template <typename T>
  std::vector<T> cumulative_integral_1d(std::span<T const> f, double h, int origin) {
      int const n = int(f.size());
      if (origin < 0 || origin >= n) throw DomainError("cumulative integral origin index out of range");
      std::vector<T> F(n, T{});
      for (int k = origin + 1; k < n; ++k) F[k] = F[k - 1] + 0.5*h*(f[k - 1] + f[k]);
      for (int k = origin - 1; k >= 0; --k) F[k] = F[k + 1] - 0.5*h*(f[k + 1] + f[k]);
      return F;
  }

  template <typename T>
  std::vector<T> derivative_1d(std::span<T const> f, double h) {
      int const n = int(f.size());
      if (n < 3) throw ShapeError("derivative needs at least 3 samples");
      std::vector<T> d(n);
      double const inv2h = 0.5/h;
      for (int k = 1; k < n - 1; ++k) d[k] = (f[k + 1] - f[k - 1])*inv2h;
      d[0] = (-3.0*f[0] + 4.0*f[1] - f[2])*inv2h;
      d[n - 1] = (3.0*f[n - 1] - 4.0*f[n - 2] + f[n - 3])*inv2h;
      return d;
  }

  template <typename T>
  std::vector<T> second_derivative_1d(std::span<T const> f, double h) {
      int const n = int(f.size());
      if (n < 4) throw ShapeError("second derivative needs at least 4 samples");
      std::vector<T> d(n);
      double const invh2 = 1.0/(h*h);
      for (int k = 1; k < n - 1; ++k) d[k] = (f[k + 1] - 2.0*f[k] + f[k - 1])*invh2;
      d[0] = (2.0*f[0] - 5.0*f[1] + 4.0*f[2] - f[3])*invh2;
      d[n - 1] = (2.0*f[n - 1] - 5.0*f[n - 2] + 4.0*f[n - 3] - f[n - 4])*invh2;
      return d;
  }

  namespace {

    // Apply a 1-D stencil routine along x (every row) or y (every column).
    template <typename T, typename Op>
    Field<T> along_x(Field<T> const &f, Op &&op) {
        auto const &g = f.grid();
        Field<T> out(g);
        std::vector<T> row(g.nx());
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) row[i] = f(i, j);
            auto const r = op(std::span<T const>(row), g.gx.spacing());
            for (int i = 0; i < g.nx(); ++i) out(i, j) = r[i];
        }
        return out;
    }

    template <typename T, typename Op>
    Field<T> along_y(Field<T> const &f, Op &&op) {
        auto const &g = f.grid();
        Field<T> out(g);
        std::vector<T> col(g.ny());
        for (int i = 0; i < g.nx(); ++i) {
            for (int j = 0; j < g.ny(); ++j) col[j] = f(i, j);
            auto const r = op(std::span<T const>(col), g.gy.spacing());
            for (int j = 0; j < g.ny(); ++j) out(i, j) = r[j];
        }
        return out;
    }

  } // namespace

  template <typename T> Field<T> d_x(Field<T> const &f) { return along_x(f, derivative_1d<T>); }
  template <typename T> Field<T> d_y(Field<T> const &f) { return along_y(f, derivative_1d<T>); }
  template <typename T> Field<T> d_xx(Field<T> const &f) { return along_x(f, second_derivative_1d<T>); }
  template <typename T> Field<T> d_yy(Field<T> const &f) { return along_y(f, second_derivative_1d<T>); }
  template <typename T> Field<T> laplacian(Field<T> const &f) { return d_xx(f) + d_yy(f); }

  ComplexField d_z(ComplexField const &f) {
      return zip(d_x(f), d_y(f), [](complex a, complex b) { return 0.5*(a - I*b); });
  }

  ComplexField d_zbar(ComplexField const &f) {
      return zip(d_x(f), d_y(f), [](complex a, complex b) { return 0.5*(a + I*b); });
  }

  template <typename T>
  Field<T> l_path_integral(Field<T> const &fx, Field<T> const &fy, NodeIndex start, PathOrder order) {
      fx.check_same(fy);
      auto const &g = fx.grid();
      if (start.i < 0 || start.i >= g.nx() || start.j < 0 || start.j >= g.ny()) {
          throw DomainError("path start is not a grid node");
      }
      Field<T> out(g);
      if (order == PathOrder::XThenY) {
          std::vector<T> row(g.nx());
          for (int i = 0; i < g.nx(); ++i) row[i] = fx(i, start.j);
          auto const along = cumulative_integral_1d(std::span<T const>(row), g.gx.spacing(), start.i);
          std::vector<T> col(g.ny());
          for (int i = 0; i < g.nx(); ++i) {
              for (int j = 0; j < g.ny(); ++j) col[j] = fy(i, j);
              auto const up = cumulative_integral_1d(std::span<T const>(col), g.gy.spacing(), start.j);
              for (int j = 0; j < g.ny(); ++j) out(i, j) = along[i] + up[j];
          }
      } else {
          std::vector<T> col(g.ny());
          for (int j = 0; j < g.ny(); ++j) col[j] = fy(start.i, j);
          auto const up = cumulative_integral_1d(std::span<T const>(col), g.gy.spacing(), start.j);
          std::vector<T> row(g.nx());
          for (int j = 0; j < g.ny(); ++j) {
              for (int i = 0; i < g.nx(); ++i) row[i] = fx(i, j);
              auto const along = cumulative_integral_1d(std::span<T const>(row), g.gx.spacing(), start.i);
              for (int i = 0; i < g.nx(); ++i) out(i, j) = up[j] + along[i];
          }
      }
      return out;
  }

  ComplexField line_integral(ComplexField const &g, NodeIndex start, PathOrder order) {
      return l_path_integral(g, I*g, start, order);
  }

  RealField path_integral_L(RealField const &phi1, RealField const &phi2, NodeIndex start, PathSign sign,
                            PathOrder order) {
      double const s = (sign == PathSign::Plus) ? 1.0 : -1.0;
      return 2.0*l_path_integral(phi1, s*phi2, start, order);
  }

#define VEKUA_INSTANTIATE(T)                                                                     \
  template Field<T> restrict_every_other(Field<T> const &);                                      \
  template std::vector<T> cumulative_integral_1d(std::span<T const>, double, int);              \
  template std::vector<T> derivative_1d(std::span<T const>, double);                            \
  template std::vector<T> second_derivative_1d(std::span<T const>, double);                     \
  template Field<T> d_x(Field<T> const &);                                                       \
  template Field<T> d_y(Field<T> const &);                                                       \
  template Field<T> d_xx(Field<T> const &);                                                      \
  template Field<T> d_yy(Field<T> const &);                                                      \
  template Field<T> laplacian(Field<T> const &);                                                 \
  template Field<T> l_path_integral(Field<T> const &, Field<T> const &, NodeIndex, PathOrder);

  VEKUA_INSTANTIATE(double)
  VEKUA_INSTANTIATE(complex)

#undef VEKUA_INSTANTIATE

} // namespace vekua
