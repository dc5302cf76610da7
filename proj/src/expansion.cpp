#include "vekua/expansion.hpp"

#include <cfloat>
#include <sstream>

#include <Eigen/Dense>

#include "vekua/susy_operators.hpp"

namespace vekua {

  namespace {

    double factorial(int n) {
        double f = 1.0;
        for (int k = 2; k <= n; ++k) f *= k;
        return f;
    }

    std::vector<complex> raw_coefficients(Superpotential const &sp, ComplexField const &w, int n) {
        SusyAlgebra alg(sp);
        NodeIndex const c = origin_node(sp.grid());
        std::array<GeneratingPair, 2> const pairs{generating_pair(sp, 0), generating_pair(sp, 1)};
        std::vector<complex> a;
        ComplexField cur = w;
        for (int k = 0; k <= n; ++k) {
            auto const &p = pairs[k % 2];
            auto const lm = decompose(cur(c.i, c.j), p.F(c.i, c.j), p.G(c.i, c.j));
            a.push_back(complex(lm[0], lm[1])/factorial(k));
            if (k < n) cur = alg.bers_derivative(cur, k);
        }
        return a;
    }

    RealField basis_column(FormalPowerTable const &table, BasisKind kind, int slot) {
        auto const &z = table.power(0, slot/2, slot % 2 == 0 ? Unit::One : Unit::I);
        return kind == BasisKind::KerH0 ? imag_part(z) : real_part(z);
    }

  } // namespace

  TaylorCoefficients taylor_coefficients(Superpotential const &sp, ComplexField const &w,
                                         FormalPowerTable const &table, int n) {
      if (n < 0 || n > max_taylor_order) {
          throw DomainError("Taylor order must lie in 0.." + std::to_string(max_taylor_order));
      }
      if (n > table.n_max()) throw DomainError("Taylor order exceeds the formal power table");
      if (!(w.grid() == sp.grid()) || !(table.grid() == sp.grid())) {
          throw ShapeError("field, table and superpotential use different grids");
      }
      TaylorCoefficients out;
      out.z0 = table.center();
      out.a = raw_coefficients(sp, w, n);

      auto const coarse = coarsened(sp.grid());
      auto const ac = raw_coefficients(sp.on_grid(coarse), restrict_every_other(w), n);
      double const h = std::max(sp.grid().gx.spacing(), sp.grid().gy.spacing());
      double const wmax = max_abs_interior(w);
      double scale = 0.0;
      for (auto const &v : out.a) scale = std::max(scale, std::abs(v));
      for (int k = 0; k <= n; ++k) {
          double const roundoff = DBL_EPSILON*wmax*std::pow(h, -k)/factorial(k);
          out.uncertainty.push_back(std::abs(out.a[k] - ac[k]) + roundoff);
      }
      for (int k = 0; k <= n; ++k) {
          if (out.uncertainty[k] > scale) {
              std::ostringstream msg;
              msg << "Taylor coefficient " << k << " is dominated by stencil noise (uncertainty "
                  << out.uncertainty[k] << " > coefficient scale " << scale << "); use a finer grid or a lower order";
              throw PreconditionError(msg.str());
          }
      }
      return out;
  }

  ComplexField evaluate_series(TaylorCoefficients const &coeffs, FormalPowerTable const &table) {
      if (int(coeffs.a.size()) - 1 > table.n_max()) throw DomainError("series longer than the formal power table");
      ComplexField out(table.grid());
      for (std::size_t k = 0; k < coeffs.a.size(); ++k) out += table.formal_power(int(k), coeffs.a[k]);
      return out;
  }

  SeriesCheck check_series(TaylorCoefficients const &coeffs, FormalPowerTable const &table,
                           ComplexField const &w, double fraction) {
      SeriesCheck out;
      out.residual = max_abs_centered(evaluate_series(coeffs, table) - w, fraction);
      for (std::size_t k = 0; k < coeffs.a.size(); ++k) {
          double const mag = max_abs_centered(table.power(0, int(k), Unit::One), fraction)
                           + max_abs_centered(table.power(0, int(k), Unit::I), fraction);
          out.noise_bound += coeffs.uncertainty[k]*mag;
      }
      return out;
  }

  FitResult fit_formal_polynomial(Superpotential const &sp, RealField const &target, BasisKind kind,
                                  FormalPowerTable const &table, int degree, FitOptions const &opts) {
      if (degree < 0 || degree > table.n_max()) throw DomainError("fit degree outside the formal power table");
      auto const &g = sp.grid();
      if (!(target.grid() == g) || !(table.grid() == g)) throw ShapeError("target, table and superpotential use different grids");

      FitResult fit;
      fit.degree = degree;
      fit.kind = kind;

      SusyAlgebra alg(sp);
      double const h2 = g.gx.spacing()*g.gy.spacing();
      auto const hr = kind == BasisKind::KerH0 ? alg.h0(target) : alg.h2(target);
      fit.kernel_residual = max_abs_interior(hr, opts.margin)/(h2*std::max(1.0, max_abs_interior(target, opts.margin)));
      if (fit.kernel_residual > opts.kernel_cap_factor) {
          std::ostringstream msg;
          msg << "fit target is not in the kernel of " << (kind == BasisKind::KerH0 ? "H0" : "H2")
              << " (residual " << fit.kernel_residual << " h^2)";
          throw PreconditionError(msg.str());
      }

      int const m = opts.margin;
      int const rows = (g.nx() - 2*m)*(g.ny() - 2*m);
      if (rows <= 0) throw ShapeError("grid too small for the fit margin");
      int const slots = 2*(degree + 1);

      std::vector<RealField> columns;
      std::vector<double> norms;
      double max_norm = 0.0;
      for (int s = 0; s < slots; ++s) {
          columns.push_back(basis_column(table, kind, s));
          double const nrm = max_abs_interior(columns.back(), m);
          norms.push_back(nrm);
          max_norm = std::max(max_norm, nrm);
      }
      std::vector<int> kept;
      for (int s = 0; s < slots; ++s) {
          if (norms[s] <= 1e-14*max_norm) fit.dropped.push_back(s);
          else kept.push_back(s);
      }

      Eigen::MatrixXd A(rows, int(kept.size()));
      Eigen::VectorXd b(rows);
      int r = 0;
      for (int j = m; j < g.ny() - m; ++j) {
          for (int i = m; i < g.nx() - m; ++i, ++r) {
              for (std::size_t c = 0; c < kept.size(); ++c) A(r, int(c)) = columns[kept[c]](i, j)/norms[kept[c]];
              b(r) = target(i, j);
          }
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
      auto const &sv = svd.singularValues();
      fit.singular_values.assign(sv.data(), sv.data() + sv.size());
      if (sv.size() > 0 && !(sv(sv.size() - 1) > opts.rank_tol*sv(0))) {
          std::ostringstream msg;
          msg << "formal polynomial basis is rank deficient; singular values:";
          for (double s : fit.singular_values) msg << ' ' << s;
          throw RankDeficiencyError(msg.str());
      }
      Eigen::VectorXd x = svd.solve(b);

      fit.coefficients.assign(slots, 0.0);
      for (std::size_t c = 0; c < kept.size(); ++c) fit.coefficients[kept[c]] = x(int(c))/norms[kept[c]];

      Eigen::VectorXd const res = A*x - b;
      fit.residual_max = res.size() ? res.cwiseAbs().maxCoeff() : 0.0;
      fit.residual_rms = res.size() ? std::sqrt(res.squaredNorm()/double(res.size())) : 0.0;
      return fit;
  }

  RealField evaluate_fit(FitResult const &fit, FormalPowerTable const &table) {
      RealField out(table.grid());
      for (std::size_t s = 0; s < fit.coefficients.size(); ++s) {
          if (fit.coefficients[s] != 0.0) out += fit.coefficients[s]*basis_column(table, fit.kind, int(s));
      }
      return out;
  }

} // namespace vekua
