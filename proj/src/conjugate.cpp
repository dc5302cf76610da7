#include "vekua/conjugate.hpp"

#include <sstream>

#include "vekua/susy_operators.hpp"

namespace vekua {

  namespace {

    double scale_of(double norm) { return std::max(1.0, norm); }

    PotentialIntegral potential_integral(ComplexField const &Phi, NodeIndex z0, PathSign sign,
                                         ConjugateOptions const &opts, char const *name) {
        auto const &g = Phi.grid();
        auto const p1 = real_part(Phi), p2 = imag_part(Phi);
        double const s = (sign == PathSign::Plus) ? -1.0 : 1.0;
        auto const defect = d_y(p1) + s*d_x(p2);
        double const h2 = g.gx.spacing()*g.gy.spacing();
        double const scale = h2*scale_of(max_abs_interior(Phi, opts.margin));

        PotentialIntegral out;
        double worst = 0.0;
        for (int j = opts.margin; j < g.ny() - opts.margin; ++j) {
            for (int i = opts.margin; i < g.nx() - opts.margin; ++i) {
                if (std::abs(defect(i, j)) > worst) {
                    worst = std::abs(defect(i, j));
                    out.worst_node = {i, j};
                }
            }
        }
        out.compatibility_defect = worst/scale;
        if (out.compatibility_defect > opts.cap_factor) {
            std::ostringstream msg;
            msg << name << ": integrand is not a gradient (compatibility defect " << out.compatibility_defect
                << " h^2 at node (" << g.x(out.worst_node.i) << ", " << g.y(out.worst_node.j) << "))";
            throw PreconditionError(msg.str());
        }
        if (out.compatibility_defect > opts.warn_factor) {
            std::ostringstream msg;
            msg << name << ": compatibility defect " << out.compatibility_defect << " h^2 exceeds " << opts.warn_factor << " h^2";
            out.warnings.push_back(msg.str());
        }
        out.value = path_integral_L(p1, p2, z0, sign, opts.order);
        return out;
    }

    void check_input(Superpotential const &sp, RealField const &f, RealField const &residual,
                     ConjugateOptions const &opts, char const *what, ConjugateResult &res) {
        auto const &g = sp.grid();
        double const h2 = g.gx.spacing()*g.gy.spacing();
        res.input_residual = max_abs_interior(residual, opts.margin);
        double const scaled = res.input_residual/(h2*scale_of(max_abs_interior(f, opts.margin)));
        if (scaled > opts.cap_factor) {
            std::ostringstream msg;
            msg << "input is not in the kernel of " << what << " (residual " << scaled << " h^2)";
            throw PreconditionError(msg.str());
        }
        if (scaled > opts.warn_factor) {
            std::ostringstream msg;
            msg << "input kernel residual " << scaled << " h^2 exceeds " << opts.warn_factor << " h^2";
            res.warnings.push_back(msg.str());
        }
    }

  } // namespace

  PotentialIntegral abar_operator(ComplexField const &Phi, NodeIndex z0, ConjugateOptions const &opts) {
      return potential_integral(Phi, z0, PathSign::Plus, opts, "Abar");
  }

  PotentialIntegral a_operator(ComplexField const &Phi, NodeIndex z0, ConjugateOptions const &opts) {
      return potential_integral(Phi, z0, PathSign::Minus, opts, "A");
  }

  ConjugateResult conjugate_from_w1(Superpotential const &sp, RealField const &w1, NodeIndex z0,
                                    ConjugateOptions const &opts) {
      if (!(w1.grid() == sp.grid())) throw ShapeError("input field and superpotential use different grids");
      SusyAlgebra alg(sp);
      ConjugateResult res;
      check_input(sp, w1, alg.h2(w1), opts, "H2", res);

      auto const chi = sp.chi();
      auto const em = exp(-1.0*chi), e2 = exp(2.0*chi);
      auto const Phi = I*(e2*d_zbar(em*w1));
      auto integral = abar_operator(Phi, z0, opts);
      res.partner = em*integral.value;
      res.compatibility_defect = integral.compatibility_defect;
      for (auto &w : integral.warnings) res.warnings.push_back(std::move(w));

      res.vekua_residual = max_abs_interior(alg.vekua(VekuaKind::V, to_complex(w1, res.partner)), opts.margin);
      res.partner_residual = max_abs_interior(alg.h0(res.partner), opts.margin);
      return res;
  }

  ConjugateResult conjugate_from_w2(Superpotential const &sp, RealField const &w2, NodeIndex z0,
                                    ConjugateOptions const &opts) {
      if (!(w2.grid() == sp.grid())) throw ShapeError("input field and superpotential use different grids");
      SusyAlgebra alg(sp);
      ConjugateResult res;
      check_input(sp, w2, alg.h0(w2), opts, "H0", res);

      auto const chi = sp.chi();
      auto const ep = exp(chi), e2 = exp(-2.0*chi);
      auto const Phi = I*(e2*d_zbar(ep*w2));
      auto integral = abar_operator(Phi, z0, opts);
      res.partner = -1.0*(ep*integral.value);
      res.compatibility_defect = integral.compatibility_defect;
      for (auto &w : integral.warnings) res.warnings.push_back(std::move(w));

      res.vekua_residual = max_abs_interior(alg.vekua(VekuaKind::V, to_complex(res.partner, w2)), opts.margin);
      res.partner_residual = max_abs_interior(alg.h2(res.partner), opts.margin);
      return res;
  }

  GaugeFit fit_gauge(RealField const &partner, RealField const &reference, RealField const &zero_mode, int margin) {
      partner.check_same(reference);
      partner.check_same(zero_mode);
      auto const &g = partner.grid();
      double num = 0.0, den = 0.0;
      for (int j = margin; j < g.ny() - margin; ++j) {
          for (int i = margin; i < g.nx() - margin; ++i) {
              num += zero_mode(i, j)*(reference(i, j) - partner(i, j));
              den += zero_mode(i, j)*zero_mode(i, j);
          }
      }
      GaugeFit fit;
      if (den > 0.0) fit.c = num/den;
      double r = 0.0;
      for (int j = margin; j < g.ny() - margin; ++j) {
          for (int i = margin; i < g.nx() - margin; ++i) {
              r = std::max(r, std::abs(partner(i, j) + fit.c*zero_mode(i, j) - reference(i, j)));
          }
      }
      fit.residual = r;
      return fit;
  }

} // namespace vekua
