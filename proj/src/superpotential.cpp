#include "vekua/superpotential.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

namespace vekua {

  namespace {

    // Piecewise-linear interpolant through node samples of a Grid1D.
    AxisProfile::Fn interpolant(Grid1D const &g, std::vector<double> samples) {
        auto data = std::make_shared<std::vector<double> const>(std::move(samples));
        return [g, data](double x) {
            auto const &v = *data;
            double const s = x/g.spacing() + g.origin_index();
            int k = int(std::floor(s));
            k = std::clamp(k, 0, g.size() - 2);
            double const t = s - k;
            return (1 - t)*v[k] + t*v[k + 1];
        };
    }

    std::vector<double> sample_axis(Grid1D const &g, AxisProfile::Fn const &fn) {
        std::vector<double> out(g.size());
        for (int k = 0; k < g.size(); ++k) out[k] = fn(g.node(k));
        return out;
    }

    AxisSamples axis_samples(Grid1D const &g, AxisProfile const &p) {
        return {sample_axis(g, [&p](double x) { return p.value(x); }),
                sample_axis(g, [&p](double x) { return p.first(x); }),
                sample_axis(g, [&p](double x) { return p.second(x); })};
    }

    template <typename Fn>
    RealField separable(Grid2D const &g, Fn &&fn) {
        RealField out(g);
        for (int j = 0; j < g.ny(); ++j) {
            for (int i = 0; i < g.nx(); ++i) out(i, j) = fn(i, j);
        }
        return out;
    }

    std::string node_label(Grid2D const &g, int i, int j) {
        std::ostringstream os;
        os << "node (" << i << ", " << j << ") at (" << g.x(i) << ", " << g.y(j) << ")";
        return os.str();
    }

  } // namespace

  AxisProfile AxisProfile::analytic(Fn value, Fn first, Fn second) {
      AxisProfile p;
      p.value_ = std::move(value);
      p.first_ = std::move(first);
      p.second_ = std::move(second);
      return p;
  }

  AxisProfile AxisProfile::tabulated(Grid1D const &grid, std::vector<double> samples) {
      if (int(samples.size()) != grid.size()) throw ShapeError("tabulated superpotential sample count does not match axis grid");
      auto const d1 = derivative_1d(std::span<double const>(samples), grid.spacing());
      auto const d2 = second_derivative_1d(std::span<double const>(samples), grid.spacing());
      AxisProfile p;
      p.value_ = interpolant(grid, samples);
      p.first_ = interpolant(grid, d1);
      p.second_ = interpolant(grid, d2);
      p.tabulated_ = true;
      return p;
  }

  AxisProfile AxisProfile::negated() const {
      AxisProfile p;
      p.value_ = [f = value_](double x) { return -f(x); };
      p.first_ = [f = first_](double x) { return -f(x); };
      p.second_ = [f = second_](double x) { return -f(x); };
      p.tabulated_ = tabulated_;
      return p;
  }

  Superpotential::Superpotential(std::string name, std::vector<double> params, Grid2D grid,
                                 AxisProfile chi1, AxisProfile chi2)
      : name_(std::move(name)), params_(std::move(params)), grid_(grid),
        chi1_(std::move(chi1)), chi2_(std::move(chi2)) {
      s1_ = axis_samples(grid_.gx, chi1_);
      s2_ = axis_samples(grid_.gy, chi2_);
      double const at0 = std::max(std::abs(chi1_.value(0.0)), std::abs(chi2_.value(0.0)));
      if (at0 > 1e-10) {
          throw DomainError("superpotential '" + name_ + "' violates chi_j(0) = 0 (|chi(0)| = " + std::to_string(at0) + ")");
      }
  }

  RealField Superpotential::chi() const {
      return separable(grid_, [this](int i, int j) { return s1_.value[i] + s2_.value[j]; });
  }
  RealField Superpotential::chi_x() const {
      return separable(grid_, [this](int i, int) { return s1_.first[i]; });
  }
  RealField Superpotential::chi_y() const {
      return separable(grid_, [this](int, int j) { return s2_.first[j]; });
  }
  RealField Superpotential::chi_xx() const {
      return separable(grid_, [this](int i, int) { return s1_.second[i]; });
  }
  RealField Superpotential::chi_yy() const {
      return separable(grid_, [this](int, int j) { return s2_.second[j]; });
  }

  Superpotential Superpotential::on_grid(Grid2D const &grid) const {
      return Superpotential(name_, params_, grid, chi1_, chi2_);
  }

  Superpotential Superpotential::successor() const {
      return Superpotential(name_ + "/successor", params_, grid_, chi1_.negated(), chi2_);
  }

  Superpotential Superpotential::negated() const {
      return Superpotential(name_ + "/negated", params_, grid_, chi1_.negated(), chi2_.negated());
  }

  double Superpotential::derivative_consistency() const {
      auto axis_defect = [](Grid1D const &g, AxisSamples const &s) {
          double const h = g.spacing();
          auto const d1 = derivative_1d(std::span<double const>(s.value), h);
          auto const d2 = derivative_1d(std::span<double const>(s.first), h);
          double scale = 1.0, defect = 0.0;
          for (int k = 0; k < g.size(); ++k) {
              scale = std::max({scale, std::abs(s.value[k]), std::abs(s.first[k]), std::abs(s.second[k])});
              defect = std::max({defect, std::abs(d1[k] - s.first[k]), std::abs(d2[k] - s.second[k])});
          }
          return defect/(h*h*scale);
      };
      return std::max(axis_defect(grid_.gx, s1_), axis_defect(grid_.gy, s2_));
  }

  Superpotential catalog_superpotential(std::string const &name, std::vector<double> const &params,
                                        Grid2D const &grid) {
      auto expect = [&](std::size_t n) {
          if (params.size() != n) {
              throw DomainError("superpotential '" + name + "' takes " + std::to_string(n) + " parameters, got " + std::to_string(params.size()));
          }
      };
      auto zero = [](double) { return 0.0; };
      if (name == "zero") {
          expect(0);
          auto p = AxisProfile::analytic(zero, zero, zero);
          return Superpotential(name, params, grid, p, p);
      }
      if (name == "linear") {
          expect(2);
          auto linear = [&](double c) {
              return AxisProfile::analytic([c](double x) { return c*x; }, [c](double) { return c; }, zero);
          };
          return Superpotential(name, params, grid, linear(params[0]), linear(params[1]));
      }
      if (name == "quadratic") {
          expect(2);
          auto quadratic = [&](double c) {
              return AxisProfile::analytic([c](double x) { return 0.5*c*x*x; }, [c](double x) { return c*x; },
                                           [c](double) { return c; });
          };
          return Superpotential(name, params, grid, quadratic(params[0]), quadratic(params[1]));
      }
      throw DomainError("unknown superpotential family '" + name + "' (known: zero, linear, quadratic, tabulated)");
  }

  Superpotential tabulated_superpotential(Grid2D const &grid, std::vector<double> chi1, std::vector<double> chi2) {
      auto p1 = AxisProfile::tabulated(grid.gx, std::move(chi1));
      auto p2 = AxisProfile::tabulated(grid.gy, std::move(chi2));
      return Superpotential("tabulated", {}, grid, std::move(p1), std::move(p2));
  }

  Potentials potentials(Superpotential const &sp) {
      auto const &g = sp.grid();
      auto const &s1 = sp.samples(Axis::X);
      auto const &s2 = sp.samples(Axis::Y);
      Potentials p{RealField(g), RealField(g), RealField(g), RealField(g), RealField(g), RealField(g)};
      for (int j = 0; j < g.ny(); ++j) {
          for (int i = 0; i < g.nx(); ++i) {
              double const grad2 = s1.first[i]*s1.first[i] + s2.first[j]*s2.first[j];
              double const lap = s1.second[i] + s2.second[j];
              p.u0(i, j) = grad2 - lap;
              p.u2(i, j) = grad2 + lap;
              // H1_ij = delta_ij H0 + 2 d_i d_j chi; the mixed derivative vanishes for separable chi
              p.m11(i, j) = p.u0(i, j) + 2*s1.second[i];
              p.m22(i, j) = p.u0(i, j) + 2*s2.second[j];
              p.m12(i, j) = 0.0;
              p.m21(i, j) = 0.0;
          }
      }
      return p;
  }

  Potentials potentials_complex_form(Superpotential const &sp) {
      auto const &g = sp.grid();
      auto const &s1 = sp.samples(Axis::X);
      auto const &s2 = sp.samples(Axis::Y);
      Potentials p{RealField(g), RealField(g), RealField(g), RealField(g), RealField(g), RealField(g)};
      for (int j = 0; j < g.ny(); ++j) {
          for (int i = 0; i < g.nx(); ++i) {
              complex const dz = 0.5*complex(s1.first[i], -s2.first[j]);
              complex const dz2 = 0.25*complex(s1.second[i] - s2.second[j], 0.0);  // chi_xy = 0
              double const dzbar_dz = 0.25*(s1.second[i] + s2.second[j]);
              double const mod2 = std::norm(dz);
              p.u0(i, j) = 4*(mod2 - dzbar_dz);
              p.u2(i, j) = 4*(mod2 + dzbar_dz);
              p.m11(i, j) = 4*(mod2 + dz2.real());
              p.m22(i, j) = 4*(mod2 - dz2.real());
              p.m12(i, j) = -4*dz2.imag();
              p.m21(i, j) = -4*dz2.imag();
          }
      }
      return p;
  }

  GeneratingPair generating_pair(Superpotential const &sp, int m) {
      bool const odd = (m % 2) != 0;
      auto const &g = sp.grid();
      auto const &s1 = sp.samples(Axis::X);
      auto const &s2 = sp.samples(Axis::Y);
      GeneratingPair pair{ComplexField(g), ComplexField(g)};
      for (int j = 0; j < g.ny(); ++j) {
          for (int i = 0; i < g.nx(); ++i) {
              double const c = (odd ? -s1.value[i] : s1.value[i]) + s2.value[j];
              pair.F(i, j) = std::exp(c);
              pair.G(i, j) = I*std::exp(-c);
          }
      }
      return pair;
  }

  CharacteristicCoefficients characteristic_coefficients(GeneratingPair const &pair) {
      auto const &F = pair.F;
      auto const &G = pair.G;
      F.check_same(G);
      auto const &g = F.grid();
      for (int j = 0; j < g.ny(); ++j) {
          for (int i = 0; i < g.nx(); ++i) {
              double const im = std::imag(std::conj(F(i, j))*G(i, j));
              double const scale = std::abs(F(i, j))*std::abs(G(i, j));
              if (!(std::abs(im) > 1e-14*scale) || scale == 0.0) {
                  throw DegeneratePairError("Im(conj(F) G) vanishes at " + node_label(g, i, j));
              }
          }
      }
      auto const Fzb = d_zbar(F), Gzb = d_zbar(G), Fz = d_z(F), Gz = d_z(G);
      CharacteristicCoefficients c{ComplexField(g), ComplexField(g), ComplexField(g), ComplexField(g)};
      for (std::size_t k = 0; k < g.size(); ++k) {
          complex const f = F[k], gg = G[k];
          complex const den = f*std::conj(gg) - std::conj(f)*gg;
          c.a[k] = -(std::conj(f)*Gzb[k] - std::conj(gg)*Fzb[k])/den;
          c.b[k] = (f*Gzb[k] - gg*Fzb[k])/den;
          c.A[k] = -(std::conj(f)*Gz[k] - std::conj(gg)*Fz[k])/den;
          c.B[k] = (f*Gz[k] - gg*Fz[k])/den;
      }
      return c;
  }

  RealField riccati_residual(Superpotential const &sp, int which) {
      if (which != 0 && which != 2) throw DomainError("riccati_residual: which must be 0 or 2");
      auto const pot = potentials(sp);
      double const sign = (which == 0) ? -1.0 : 1.0;
      ComplexField const R = zip(sp.chi_x(), sp.chi_y(), [sign](double cx, double cy) { return sign*0.5*complex(cx, -cy); });
      auto const dR = d_zbar(R);
      auto const &U = (which == 0) ? pot.u0 : pot.u2;
      RealField out(sp.grid());
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = (dR[k] + std::norm(R[k]) - 0.25*U[k]).real();
      return out;
  }

} // namespace vekua
