#include "vekua/formal_powers.hpp"

#include <string>

namespace vekua {

  double binomial(int n, int k) {
      if (k < 0 || k > n) return 0.0;
      double r = 1.0;
      for (int j = 1; j <= k; ++j) r = r*(n - k + j)/j;
      return std::round(r);
  }

  AxisSystem build_axis_system(Grid1D const &grid, std::vector<double> const &chi, int n_max) {
      if (n_max < 0) throw DomainError("n_max must be non-negative");
      if (int(chi.size()) != grid.size()) throw ShapeError("superpotential samples do not match the axis grid");
      int const size = grid.size(), origin = grid.origin_index();
      std::vector<double> w_plus(size), w_minus(size);  // exp(2 chi), exp(-2 chi)
      for (int k = 0; k < size; ++k) {
          w_plus[k] = std::exp(2*chi[k]);
          w_minus[k] = std::exp(-2*chi[k]);
      }
      AxisSystem s;
      s.plain.assign(n_max + 1, std::vector<double>(size, 1.0));
      s.tilde.assign(n_max + 1, std::vector<double>(size, 1.0));
      std::vector<double> integrand(size);
      for (int n = 1; n <= n_max; ++n) {
          bool const even = (n % 2 == 0);
          auto const &wp = even ? w_plus : w_minus;   // exp((-1)^n 2 chi)
          auto const &wt = even ? w_minus : w_plus;   // exp((-1)^(n+1) 2 chi)
          for (int k = 0; k < size; ++k) integrand[k] = s.plain[n - 1][k]*wp[k];
          s.plain[n] = cumulative_integral_1d(std::span<double const>(integrand), grid.spacing(), origin);
          for (int k = 0; k < size; ++k) integrand[k] = s.tilde[n - 1][k]*wt[k];
          s.tilde[n] = cumulative_integral_1d(std::span<double const>(integrand), grid.spacing(), origin);
          for (int k = 0; k < size; ++k) {
              s.plain[n][k] *= n;
              s.tilde[n][k] *= n;
          }
      }
      s.phi.assign(n_max + 1, std::vector<double>(size));
      s.phi_tilde.assign(n_max + 1, std::vector<double>(size));
      for (int n = 0; n <= n_max; ++n) {
          bool const odd = (n % 2 == 1);
          for (int k = 0; k < size; ++k) {
              double const e = std::exp(chi[k]);
              s.phi[n][k] = e*(odd ? s.plain[n][k] : s.tilde[n][k]);
              s.phi_tilde[n][k] = (odd ? s.tilde[n][k] : s.plain[n][k])/e;
          }
      }
      return s;
  }

  AuxSystem build_aux_system(Superpotential const &sp, int n_max) {
      AuxSystem aux;
      aux.grid = sp.grid();
      aux.n_max = n_max;
      aux.x = build_axis_system(sp.grid().gx, sp.samples(Axis::X).value, n_max);
      aux.y = build_axis_system(sp.grid().gy, sp.samples(Axis::Y).value, n_max);
      return aux;
  }

  FormalPowerTable::FormalPowerTable(Grid2D grid, int n_max, int period)
      : grid_(grid), n_max_(n_max), period_(period) {
      for (int m = 0; m < 2; ++m) {
          one_[m].assign(n_max + 1, ComplexField(grid));
          i_[m].assign(n_max + 1, ComplexField(grid));
      }
  }

  void FormalPowerTable::check(int m, int n) const {
      if (m < 0 || m > 1) throw DomainError("sequence index must be 0 or 1");
      if (n < 0 || n > n_max_) {
          throw DomainError("formal power exponent " + std::to_string(n) + " outside table range 0.." + std::to_string(n_max_));
      }
  }

  ComplexField const & FormalPowerTable::power(int m, int n, Unit unit) const {
      check(m, n);
      return unit == Unit::One ? one_[m][n] : i_[m][n];
  }

  ComplexField & FormalPowerTable::power(int m, int n, Unit unit) {
      check(m, n);
      return unit == Unit::One ? one_[m][n] : i_[m][n];
  }

  ComplexField FormalPowerTable::formal_power(int n, complex a, int m) const {
      auto const &z1 = power(m, n, Unit::One);
      auto const &zi = power(m, n, Unit::I);
      return zip(z1, zi, [a](complex u, complex v) { return a.real()*u + a.imag()*v; });
  }

  namespace {

    // Outer product of an x-profile and a y-profile accumulated into a real field.
    void add_product(RealField &out, double coeff, std::vector<double> const &fx, std::vector<double> const &fy) {
        auto const &g = out.grid();
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) out(i, j) += coeff*fx[i]*fy[j];
        }
    }

    bool vanishes(std::vector<double> const &v) {
        for (double x : v) if (x != 0.0) return false;
        return true;
    }

    // phi / phi~ are the x-systems (swapped for the successor), psi / psi~ the y-systems.
    void assemble_sequence(FormalPowerTable &table, int m, AxisSystem const &x, AxisSystem const &y, bool swap) {
        auto const &phi = swap ? x.phi_tilde : x.phi;
        auto const &phit = swap ? x.phi : x.phi_tilde;
        auto const &psi = y.phi;
        auto const &psit = y.phi_tilde;
        auto const &g = table.grid();
        for (int n = 1; n <= table.n_max(); ++n) {
            RealField re1(g), im1(g), rei(g), imi(g);
            for (int k = 0; 2*k <= n; ++k) {
                double const sgn = (k % 2 == 0) ? 1.0 : -1.0;
                add_product(re1, sgn*binomial(n, 2*k), phi[n - 2*k], psi[2*k]);
                add_product(imi, sgn*binomial(n, 2*k), phit[n - 2*k], psit[2*k]);
            }
            for (int k = 0; 2*k + 1 <= n; ++k) {
                double const sgn = (k % 2 == 0) ? 1.0 : -1.0;
                add_product(im1, sgn*binomial(n, 2*k + 1), phit[n - 2*k - 1], psit[2*k + 1]);
                add_product(rei, -sgn*binomial(n, 2*k + 1), phi[n - 2*k - 1], psi[2*k + 1]);
            }
            table.power(m, n, Unit::One) = to_complex(re1, im1);
            table.power(m, n, Unit::I) = to_complex(rei, imi);
        }
    }

  } // namespace

  FormalPowerTable assemble_formal_powers(AuxSystem const &aux, Superpotential const &sp) {
      if (!(aux.grid == sp.grid())) throw ShapeError("auxiliary system and superpotential use different grids");
      int const period = vanishes(sp.samples(Axis::X).value) ? 1 : 2;
      FormalPowerTable table(aux.grid, aux.n_max, period);
      for (int m = 0; m < 2; ++m) {
          auto const pair = generating_pair(sp, m);
          table.power(m, 0, Unit::One) = pair.F;
          table.power(m, 0, Unit::I) = pair.G;
      }
      assemble_sequence(table, 0, aux.x, aux.y, false);
      assemble_sequence(table, 1, aux.x, aux.y, true);
      return table;
  }

  ComplexField fg_integral(int m, Superpotential const &sp, ComplexField const &w, NodeIndex z0, PathOrder order) {
      if (!(w.grid() == sp.grid())) throw ShapeError("integrand and superpotential use different grids");
      auto const pair = generating_pair(sp, m);
      auto const &F = pair.F;
      auto const &G = pair.G;
      auto const &g = w.grid();
      ComplexField gw(g), fw(g);
      for (std::size_t k = 0; k < g.size(); ++k) {
          complex const den = F[k]*std::conj(G[k]) - std::conj(F[k])*G[k];
          complex const Fs = -2.0*std::conj(F[k])/den;
          complex const Gs = 2.0*std::conj(G[k])/den;
          gw[k] = Gs*w[k];
          fw[k] = Fs*w[k];
      }
      auto const ig = line_integral(gw, z0, order);
      auto const jf = line_integral(fw, z0, order);
      ComplexField out(g);
      for (std::size_t k = 0; k < g.size(); ++k) out[k] = F[k]*ig[k].real() + G[k]*jf[k].real();
      return out;
  }

  std::array<double, 2> decompose(complex a, complex F, complex G) {
      // a = lambda F + mu G with real lambda, mu (Cramer's rule on the 2x2 real system)
      double const det = F.real()*G.imag() - F.imag()*G.real();
      if (det == 0.0) throw DegeneratePairError("generating pair is degenerate at the center");
      return {(a.real()*G.imag() - a.imag()*G.real())/det, (F.real()*a.imag() - F.imag()*a.real())/det};
  }

  FormalPowerTable recursive_formal_powers(Superpotential const &sp, int n_max) {
      if (n_max < 0) throw DomainError("n_max must be non-negative");
      auto const &g = sp.grid();
      NodeIndex const c = origin_node(g);
      int const period = vanishes(sp.samples(Axis::X).value) ? 1 : 2;
      FormalPowerTable table(g, n_max, period);
      for (int m = 0; m < 2; ++m) {
          auto const pair = generating_pair(sp, m);
          for (auto unit : {Unit::One, Unit::I}) {
              complex const a = (unit == Unit::One) ? complex(1.0) : I;
              auto const lm = decompose(a, pair.F(c.i, c.j), pair.G(c.i, c.j));
              table.power(m, 0, unit) = zip(pair.F, pair.G, [&lm](complex f, complex gg) { return lm[0]*f + lm[1]*gg; });
          }
      }
      for (int n = 0; n < n_max; ++n) {
          for (int m = 0; m < 2; ++m) {
              for (auto unit : {Unit::One, Unit::I}) {
                  auto const &prev = table.power(1 - m, n, unit);
                  table.power(m, n + 1, unit) = double(n + 1)*fg_integral(m, sp, prev, c);
              }
          }
      }
      return table;
  }

} // namespace vekua
