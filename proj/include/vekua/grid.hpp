#pragma once

#include <cassert>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <type_traits>
#include <vector>

#include "vekua/errors.hpp"

namespace vekua {

  using complex = std::complex<double>;
  inline constexpr complex I{0.0, 1.0};

  // Uniform symmetric grid x_k = -a + k*h on [-a, a] with an odd node count,
  // so that x = 0 is the node with index origin_index().
  class Grid1D {
    public:
      Grid1D() = default;
      Grid1D(double half_width, int node_count);

      double half_width() const { return half_width_; }
      int size() const { return nodes_; }
      double spacing() const { return spacing_; }
      int origin_index() const { return (nodes_ - 1)/2; }

      // Exactly antisymmetric: node(k) == -node(size()-1-k).
      double node(int k) const {
          int const m = k - origin_index();
          return m*spacing_;
      }
      std::vector<double> nodes() const;

      // Index of the node at coordinate x, or -1 when x is not a node.
      int find_node(double x, double rel_tol = 1e-9) const;

      bool operator==(Grid1D const &other) const {
          return nodes_ == other.nodes_ && half_width_ == other.half_width_;
      }

    private:
      double half_width_ = 1.0;
      int nodes_ = 3;
      double spacing_ = 1.0;
  };

  // Tensor-product grid on the rectangle [-a1, a1] x [-a2, a2].
  // Storage is row-major with rows at fixed y: index = j*nx + i.
  struct Grid2D {
      Grid1D gx;
      Grid1D gy;

      int nx() const { return gx.size(); }
      int ny() const { return gy.size(); }
      std::size_t size() const { return std::size_t(nx())*std::size_t(ny()); }
      std::size_t index(int i, int j) const { return std::size_t(j)*std::size_t(nx()) + std::size_t(i); }
      double x(int i) const { return gx.node(i); }
      double y(int j) const { return gy.node(j); }
      complex z(int i, int j) const { return {gx.node(i), gy.node(j)}; }
      int origin_i() const { return gx.origin_index(); }
      int origin_j() const { return gy.origin_index(); }

      bool operator==(Grid2D const &other) const = default;
  };

  Grid2D make_grid(double a1, double a2, int n1, int n2);
  inline Grid2D make_square_grid(double a, int n) { return make_grid(a, a, n, n); }

  // Values sampled on every node of a Grid2D.
  template <typename T>
  class Field {
    public:
      using value_type = T;

      Field() = default;
      explicit Field(Grid2D const &grid, T fill = T{}) : grid_(grid), values_(grid.size(), fill) {}
      Field(Grid2D const &grid, std::vector<T> values) : grid_(grid), values_(std::move(values)) {
          if (values_.size() != grid_.size()) throw ShapeError("field value count does not match grid size");
      }

      Grid2D const & grid() const { return grid_; }
      std::size_t size() const { return values_.size(); }

      T & operator()(int i, int j) { return values_[grid_.index(i, j)]; }
      T const & operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
      T & operator[](std::size_t k) { return values_[k]; }
      T const & operator[](std::size_t k) const { return values_[k]; }

      std::span<T> values() { return values_; }
      std::span<T const> values() const { return values_; }

      Field & operator+=(Field const &o) { check_same(o); for (std::size_t k = 0; k < size(); ++k) values_[k] += o.values_[k]; return *this; }
      Field & operator-=(Field const &o) { check_same(o); for (std::size_t k = 0; k < size(); ++k) values_[k] -= o.values_[k]; return *this; }
      Field & operator*=(T s) { for (auto &v : values_) v *= s; return *this; }

      void check_same(Field const &o) const { if (!(grid_ == o.grid_)) throw ShapeError("fields live on different grids"); }
      template <typename U>
      void check_same(Field<U> const &o) const { if (!(grid_ == o.grid())) throw ShapeError("fields live on different grids"); }

    private:
      Grid2D grid_;
      std::vector<T> values_;
  };

  using RealField = Field<double>;
  using ComplexField = Field<complex>;

  template <typename T> inline constexpr bool is_complex_v = false;
  template <typename T> inline constexpr bool is_complex_v<std::complex<T>> = true;

  // Nodewise map over one or two fields; the result type follows the callable.
  template <typename T, typename Fn>
  auto map(Field<T> const &a, Fn &&fn) {
      using R = std::decay_t<decltype(fn(a[0]))>;
      Field<R> out(a.grid());
      for (std::size_t k = 0; k < a.size(); ++k) out[k] = fn(a[k]);
      return out;
  }

  template <typename T, typename U, typename Fn>
  auto zip(Field<T> const &a, Field<U> const &b, Fn &&fn) {
      a.check_same(b);
      using R = std::decay_t<decltype(fn(a[0], b[0]))>;
      Field<R> out(a.grid());
      for (std::size_t k = 0; k < a.size(); ++k) out[k] = fn(a[k], b[k]);
      return out;
  }

  template <typename Fn>
  auto sample(Grid2D const &grid, Fn &&fn) {
      using R = std::decay_t<decltype(fn(0.0, 0.0))>;
      Field<R> out(grid);
      for (int j = 0; j < grid.ny(); ++j) {
          for (int i = 0; i < grid.nx(); ++i) out(i, j) = fn(grid.x(i), grid.y(j));
      }
      return out;
  }

  template <typename T, typename U>
  auto operator+(Field<T> const &a, Field<U> const &b) { return zip(a, b, [](T x, U y) { return x + y; }); }
  template <typename T, typename U>
  auto operator-(Field<T> const &a, Field<U> const &b) { return zip(a, b, [](T x, U y) { return x - y; }); }
  template <typename T, typename U>
  auto operator*(Field<T> const &a, Field<U> const &b) { return zip(a, b, [](T x, U y) { return x*y; }); }
  template <typename T>
  Field<T> operator-(Field<T> const &a) { return map(a, [](T x) { return -x; }); }

  template <typename T, typename S, typename = std::enable_if_t<std::is_arithmetic_v<S> || is_complex_v<S>>>
  auto operator*(S s, Field<T> const &a) { return map(a, [s](T x) { return s*x; }); }
  template <typename T, typename S, typename = std::enable_if_t<std::is_arithmetic_v<S> || is_complex_v<S>>>
  auto operator*(Field<T> const &a, S s) { return map(a, [s](T x) { return x*s; }); }

  RealField real_part(ComplexField const &w);
  RealField imag_part(ComplexField const &w);
  ComplexField conj(ComplexField const &w);
  ComplexField to_complex(RealField const &re);
  ComplexField to_complex(RealField const &re, RealField const &im);
  RealField exp(RealField const &f);

  // Max-norm over nodes at least `margin` nodes away from every edge.
  template <typename T>
  double max_abs_interior(Field<T> const &f, int margin = 0) {
      auto const &g = f.grid();
      double m = 0;
      for (int j = margin; j < g.ny() - margin; ++j) {
          for (int i = margin; i < g.nx() - margin; ++i) m = std::max(m, double(std::abs(f(i, j))));
      }
      return m;
  }

  // Max-norm restricted to |x| <= fx*a1, |y| <= fy*a2 (centered subrectangle).
  template <typename T>
  double max_abs_centered(Field<T> const &f, double fraction) {
      auto const &g = f.grid();
      double m = 0;
      for (int j = 0; j < g.ny(); ++j) {
          if (std::abs(g.y(j)) > fraction*g.gy.half_width() + 1e-12) continue;
          for (int i = 0; i < g.nx(); ++i) {
              if (std::abs(g.x(i)) > fraction*g.gx.half_width() + 1e-12) continue;
              m = std::max(m, double(std::abs(f(i, j))));
          }
      }
      return m;
  }

  // Injection onto every other node (indices congruent to the origin index mod 2).
  template <typename T>
  Field<T> restrict_every_other(Field<T> const &f);
  Grid2D coarsened(Grid2D const &g);

  // Nodes of a fine grid (2N-1 nodes) that coincide with a coarse grid (N nodes).
  template <typename T>
  Field<T> restrict_to(Field<T> const &fine, Grid2D const &coarse) {
      auto const &g = fine.grid();
      int const sx = (g.nx() - 1)/(coarse.nx() - 1), sy = (g.ny() - 1)/(coarse.ny() - 1);
      if (sx*(coarse.nx() - 1) != g.nx() - 1 || sy*(coarse.ny() - 1) != g.ny() - 1) {
          throw ShapeError("coarse grid is not a sub-lattice of the fine grid");
      }
      Field<T> out(coarse);
      for (int j = 0; j < coarse.ny(); ++j) {
          for (int i = 0; i < coarse.nx(); ++i) out(i, j) = fine(sx*i, sy*j);
      }
      return out;
  }

  // ---- one-dimensional calculus ----

  // Composite trapezoid antiderivative F with F(x_origin) = 0.
  template <typename T>
  std::vector<T> cumulative_integral_1d(std::span<T const> samples, double h, int origin_index);
  template <typename T>
  std::vector<T> cumulative_integral_1d(Grid1D const &g, std::span<T const> samples, int origin_index) {
      if (int(samples.size()) != g.size()) throw ShapeError("sample count does not match 1-D grid");
      return cumulative_integral_1d(samples, g.spacing(), origin_index);
  }

  // Central differences inside, second-order one-sided at both ends.
  template <typename T>
  std::vector<T> derivative_1d(std::span<T const> samples, double h);
  template <typename T>
  std::vector<T> second_derivative_1d(std::span<T const> samples, double h);

  // ---- two-dimensional finite differences ----

  template <typename T> Field<T> d_x(Field<T> const &f);
  template <typename T> Field<T> d_y(Field<T> const &f);
  template <typename T> Field<T> d_xx(Field<T> const &f);
  template <typename T> Field<T> d_yy(Field<T> const &f);
  // 5-point stencil in the interior; edge rows use one-sided second differences
  // and should be excluded from residual norms.
  template <typename T> Field<T> laplacian(Field<T> const &f);

  ComplexField d_z(ComplexField const &f);     // (d_x - i d_y)/2
  ComplexField d_zbar(ComplexField const &f);  // (d_x + i d_y)/2
  inline ComplexField d_z(RealField const &f) { return d_z(to_complex(f)); }
  inline ComplexField d_zbar(RealField const &f) { return d_zbar(to_complex(f)); }

  // ---- axis-parallel path integrals ----

  enum class PathOrder { XThenY, YThenX };

  struct NodeIndex {
      int i = 0;
      int j = 0;
  };

  // Integral of fx dx + fy dy along the L-path from `start` to every node.
  // XThenY: along x at the start row, then along y at the end column.
  template <typename T>
  Field<T> l_path_integral(Field<T> const &fx, Field<T> const &fy, NodeIndex start,
                           PathOrder order = PathOrder::XThenY);

  // Complex line integral of g dz = g (dx + i dy) along L-paths from `start`.
  ComplexField line_integral(ComplexField const &g, NodeIndex start,
                             PathOrder order = PathOrder::XThenY);

  enum class PathSign { Plus, Minus };

  // 2(int phi1 dx +/- phi2 dy) along the L-path from `start` to every node.
  RealField path_integral_L(RealField const &phi1, RealField const &phi2, NodeIndex start, PathSign sign,
                            PathOrder order = PathOrder::XThenY);

  // Node of the grid at coordinates (x, y); throws DomainError when off-grid.
  NodeIndex node_at(Grid2D const &g, double x, double y);
  inline NodeIndex origin_node(Grid2D const &g) { return {g.origin_i(), g.origin_j()}; }

} // namespace vekua
