#include "vekua/transmutation.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace vekua {

  KernelTable::KernelTable(Grid1D const &grid) : grid_(grid) {
      int const c = grid.origin_index();
      offsets_.resize(2*c + 1);
      std::size_t total = 0;
      for (int m = -c; m <= c; ++m) {
          offsets_[m + c] = total;
          total += 2*std::abs(m) + 1;
      }
      values_.assign(total, 0.0);
  }

  namespace {

    // k(i, j) on the lattice triangle i, j >= 0, i + j <= M, stored in a square array.
    struct Triangle {
        int M;
        std::vector<double> v;
        explicit Triangle(int M_) : M(M_), v(std::size_t(M_ + 1)*(M_ + 1), 0.0) {}
        double & operator()(int i, int j) { return v[std::size_t(i)*(M + 1) + j]; }
        double operator()(int i, int j) const { return v[std::size_t(i)*(M + 1) + j]; }
    };

    // Picard iteration for k(i, j) = b(i) + int_0^{i d} int_0^{j d} qd(a + b) k da db on a lattice of
    // spacing d. qd[s] is the potential at s d.
    Triangle picard(std::vector<double> const &qd, std::vector<double> const &b, double d,
                    GoursatOptions const &opts, std::vector<double> &history, int &iterations) {
        int const M = int(b.size()) - 1;
        Triangle k(M), C(M), next(M);
        for (int i = 0; i <= M; ++i) {
            for (int j = 0; i + j <= M; ++j) k(i, j) = b[i];
        }
        double const half = 0.5*d;
        for (int it = 1; it <= opts.max_iter; ++it) {
            for (int i = 0; i <= M; ++i) {
                C(i, 0) = 0.0;
                double prev = qd[i]*k(i, 0);
                for (int j = 1; i + j <= M; ++j) {
                    double const g = qd[i + j]*k(i, j);
                    C(i, j) = C(i, j - 1) + half*(prev + g);
                    prev = g;
                }
            }
            double defect = 0.0, scale = 1.0;
            for (int j = 0; j <= M; ++j) {
                double S = 0.0;
                next(0, j) = b[0];
                for (int i = 1; i + j <= M; ++i) {
                    S += half*(C(i - 1, j) + C(i, j));
                    next(i, j) = b[i] + S;
                }
            }
            for (int i = 0; i <= M; ++i) {
                for (int j = 0; i + j <= M; ++j) {
                    defect = std::max(defect, std::abs(next(i, j) - k(i, j)));
                    scale = std::max(scale, std::abs(next(i, j)));
                }
            }
            std::swap(k.v, next.v);
            history.push_back(defect/scale);
            iterations = it;
            if (defect/scale <= opts.tol) return k;
        }
        std::ostringstream msg;
        msg << "Goursat kernel did not converge in " << opts.max_iter << " iterations; defect history:";
        for (double h : history) msg << ' ' << h;
        throw ConvergenceError(msg.str());
    }

  } // namespace

  GoursatKernel solve_goursat(AxisProfile const &chi, Grid1D const &grid, GoursatOptions const &opts) {
      if (opts.max_iter < 1 || !(opts.tol > 0.0)) throw DomainError("Goursat options need tol > 0 and max_iter >= 1");
      GoursatKernel out;
      out.grid = grid;
      out.h_param = chi.first(0.0);
      int const c = grid.origin_index();
      double const h = grid.spacing();
      for (int k = 0; k < grid.size(); ++k) out.q.push_back(chi.potential(grid.node(k)));

      // characteristic lattice of spacing h/2 reaching |x| = a
      int const M = 2*c;
      double const d = 0.5*h;
      std::vector<double> qp(M + 1), qn(M + 1), bp(M + 1, 0.0), bn(M + 1, 0.0);
      for (int s = 0; s <= M; ++s) {
          qp[s] = chi.potential(s*d);
          qn[s] = chi.potential(-s*d);
      }
      for (int s = 1; s <= M; ++s) {
          bp[s] = bp[s - 1] + 0.25*d*(qp[s - 1] + qp[s]);
          bn[s] = bn[s - 1] - 0.25*d*(qn[s - 1] + qn[s]);
      }
      int itp = 0, itn = 0;
      std::vector<double> hp, hn;
      auto const kp = picard(qp, bp, d, opts, hp, itp);
      auto const kn = picard(qn, bn, d, opts, hn, itn);

      out.K = KernelTable(grid);
      for (int m = -c; m <= c; ++m) {
          int const a = std::abs(m);
          for (int l = -a; l <= a; ++l) {
              out.K.at(m, l) = (m >= 0) ? kp(m + l, m - l) : kn(a - l, a + l);
          }
      }
      out.iterations = std::max(itp, itn);
      out.defect_history.resize(std::max(hp.size(), hn.size()), 0.0);
      for (std::size_t i = 0; i < out.defect_history.size(); ++i) {
          double const a = i < hp.size() ? hp[i] : 0.0;
          double const b = i < hn.size() ? hn[i] : 0.0;
          out.defect_history[i] = std::max(a, b);
      }
      out.final_defect = out.defect_history.back();
      return out;
  }

  KernelTable build_kernel_with_h(GoursatKernel const &kernel) {
      auto const &grid = kernel.grid;
      int const c = grid.origin_index();
      double const h = grid.spacing();
      double const hp = kernel.h_param;
      KernelTable full(grid);
      for (int m = -c; m <= c; ++m) {
          int const a = std::abs(m);
          // G(l) = int_{-|x|}^{t_l} [K(x, s) - K(x, -s)] ds
          std::vector<double> G(2*a + 1, 0.0);
          for (int l = -a + 1; l <= a; ++l) {
              double const g0 = kernel.K.at(m, l - 1) - kernel.K.at(m, 1 - l);
              double const g1 = kernel.K.at(m, l) - kernel.K.at(m, -l);
              G[l + a] = G[l - 1 + a] + 0.5*h*(g0 + g1);
          }
          double const Gx = G[m + a];
          for (int l = -a; l <= a; ++l) {
              full.at(m, l) = 0.5*hp + kernel.K.at(m, l) + 0.5*hp*(Gx - G[l + a]);
          }
      }
      return full;
  }

  KernelTable build_tilde_kernel(KernelTable const &full, AxisProfile const &chi) {
      auto const &grid = full.grid();
      int const c = grid.origin_index();
      double const h = grid.spacing();
      std::vector<double> e(2*c + 1), de(2*c + 1);
      for (int m = -c; m <= c; ++m) {
          double const x = grid.node(m + c);
          e[m + c] = std::exp(chi.value(x));
          de[m + c] = chi.first(x)*e[m + c];
      }
      auto ex = [&](int m) { return e[m + c]; };

      // d_t K(s, t; h) along every row
      KernelTable dt(grid);
      for (int m = -c; m <= c; ++m) {
          if (m == 0) continue;
          auto const d = derivative_1d(full.row(m), h);
          std::copy(d.begin(), d.end(), dt.row(m).begin());
      }
      if (c >= 1) dt.at(0, 0) = 0.5*(dt.at(1, 0) + dt.at(-1, 0));

      KernelTable tilde(grid);
      std::vector<double> Cp(c + 1), Cn(c + 1);   // indexed by |m|
      for (int l = -c; l <= c; ++l) {
          int const a = std::abs(l);
          // oriented integrals int_{+-|t|}^{x} e^chi d_t K ds for x on either side
          Cp[a] = 0.0;
          Cn[a] = 0.0;
          for (int m = a + 1; m <= c; ++m) {
              Cp[m] = Cp[m - 1] + 0.5*h*(ex(m - 1)*dt.at(m - 1, l) + ex(m)*dt.at(m, l));
              Cn[m] = Cn[m - 1] - 0.5*h*(ex(1 - m)*dt.at(1 - m, l) + ex(-m)*dt.at(-m, l));
          }
          for (int m = a; m <= c; ++m) {
              for (int side : {1, -1}) {
                  if (m == 0 && side == -1) continue;
                  int const x = side*m;
                  double const integral = (side == 1) ? Cp[m] : Cn[m];
                  bool const same = (l == 0) || ((l > 0) == (x > 0));
                  double v;
                  if (same) v = ex(l)*full.at(l, l) - de[l + c] - integral;
                  else v = -(ex(-l)*full.at(-l, l) + integral);
                  tilde.at(x, l) = v/ex(x);
              }
          }
      }
      return tilde;
  }

  AxisTransmutation::AxisTransmutation(AxisProfile chi, Grid1D const &grid, GoursatOptions const &opts)
      : chi_(std::move(chi)), grid_(grid) {
      goursat_ = solve_goursat(chi_, grid_, opts);
      full_ = build_kernel_with_h(goursat_);
      tilde_ = build_tilde_kernel(full_, chi_);
      for (int k = 0; k < grid_.size(); ++k) chi_samples_.push_back(chi_.value(grid_.node(k)));

      double const h = grid_.spacing();
      double worst = 0.0;
      for (int p = 0; p <= 3; ++p) {
          std::vector<double> f(grid_.size());
          for (int k = 0; k < grid_.size(); ++k) f[k] = std::pow(grid_.node(k), p);
          auto const r1 = apply_tilde_derivative_form(f);
          auto const r2 = volterra(tilde_, f);
          double diff = 0.0, scale = 1.0;
          for (std::size_t k = 0; k < r1.size(); ++k) {
              diff = std::max(diff, std::abs(r1[k] - r2[k]));
              scale = std::max(scale, std::abs(r1[k]));
          }
          worst = std::max(worst, diff/scale);
      }
      tilde_check_ = worst;
      if (!(worst <= 50.0*h*h)) {
          std::ostringstream msg;
          msg << "transmutation kernels inconsistent: the two T~ constructions differ by " << worst
              << " (limit 50 h^2 = " << 50.0*h*h << ")";
          throw ConvergenceError(msg.str());
      }
  }

  std::vector<double> AxisTransmutation::volterra(KernelTable const &kernel, std::span<double const> f) const {
      if (int(f.size()) != grid_.size()) throw ShapeError("sample count does not match the axis grid");
      int const c = grid_.origin_index();
      double const h = grid_.spacing();
      std::vector<double> out(f.begin(), f.end());
      for (int m = -c; m <= c; ++m) {
          if (m == 0) continue;
          int const a = std::abs(m);
          auto const row = kernel.row(m);
          double s = 0.5*(row[0]*f[c - a] + row[2*a]*f[c + a]);
          for (int l = -a + 1; l < a; ++l) s += row[l + a]*f[c + l];
          out[m + c] += (m > 0 ? h : -h)*s;
      }
      return out;
  }

  std::vector<double> AxisTransmutation::apply(std::span<double const> f, Variant variant) const {
      return volterra(variant == Variant::Plain ? full_ : tilde_, f);
  }

  std::vector<double> AxisTransmutation::apply_tilde_derivative_form(std::span<double const> f) const {
      if (int(f.size()) != grid_.size()) throw ShapeError("sample count does not match the axis grid");
      int const c = grid_.origin_index();
      auto const df = derivative_1d(f, grid_.spacing());
      auto const tf = volterra(full_, df);
      std::vector<double> integrand(tf.size());
      for (std::size_t k = 0; k < tf.size(); ++k) integrand[k] = std::exp(chi_samples_[k])*tf[k];
      auto const I = cumulative_integral_1d(std::span<double const>(integrand), grid_.spacing(), c);
      std::vector<double> out(tf.size());
      for (std::size_t k = 0; k < tf.size(); ++k) out[k] = std::exp(-chi_samples_[k])*(I[k] + f[c]);
      return out;
  }

  Transmutation2D::Transmutation2D(Superpotential const &sp, GoursatOptions const &opts)
      : grid_(sp.grid()),
        x_(sp.profile(Axis::X), sp.axis_grid(Axis::X), opts),
        y_(sp.profile(Axis::Y), sp.axis_grid(Axis::Y), opts) {}

  RealField Transmutation2D::apply_axis(Axis a, Variant v, RealField const &f) const {
      if (!(f.grid() == grid_)) throw ShapeError("field grid does not match the transmutation grid");
      RealField out(grid_);
      if (a == Axis::X) {
          std::vector<double> line(grid_.nx());
          for (int j = 0; j < grid_.ny(); ++j) {
              for (int i = 0; i < grid_.nx(); ++i) line[i] = f(i, j);
              auto const r = x_.apply(line, v);
              for (int i = 0; i < grid_.nx(); ++i) out(i, j) = r[i];
          }
      } else {
          std::vector<double> line(grid_.ny());
          for (int i = 0; i < grid_.nx(); ++i) {
              for (int j = 0; j < grid_.ny(); ++j) line[j] = f(i, j);
              auto const r = y_.apply(line, v);
              for (int j = 0; j < grid_.ny(); ++j) out(i, j) = r[j];
          }
      }
      return out;
  }

  ComplexField Transmutation2D::apply_axis(Axis a, Variant v, ComplexField const &w) const {
      return to_complex(apply_axis(a, v, real_part(w)), apply_axis(a, v, imag_part(w)));
  }

  ComplexField Transmutation2D::t0(ComplexField const &w) const {
      auto const re = apply_axis(Axis::X, Variant::Plain, apply_axis(Axis::Y, Variant::Plain, real_part(w)));
      auto const im = apply_axis(Axis::X, Variant::Tilde, apply_axis(Axis::Y, Variant::Tilde, imag_part(w)));
      return to_complex(re, im);
  }

  ComplexField Transmutation2D::t1(ComplexField const &w) const {
      auto const re = apply_axis(Axis::X, Variant::Tilde, apply_axis(Axis::Y, Variant::Plain, real_part(w)));
      auto const im = apply_axis(Axis::X, Variant::Plain, apply_axis(Axis::Y, Variant::Tilde, imag_part(w)));
      return to_complex(re, im);
  }

} // namespace vekua
