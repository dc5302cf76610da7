#include "vekua/susy_operators.hpp"

namespace vekua {

  VectorField2 project_P(ComplexField const &w) { return {imag_part(w), real_part(w)}; }

  ComplexField unproject_P(VectorField2 const &v) { return to_complex(v.c2, v.c1); }

  SusyAlgebra::SusyAlgebra(Superpotential sp, double u0_offset)
      : sp_(std::move(sp)), pot_(vekua::potentials(sp_)), cx_(sp_.chi_x()), cy_(sp_.chi_y()) {
      if (u0_offset != 0.0) {
          for (auto &v : pot_.u0.values()) v += u0_offset;
      }
      dz_chi_ = zip(cx_, cy_, [](double a, double b) { return 0.5*complex(a, -b); });
      dzbar_chi_ = zip(cx_, cy_, [](double a, double b) { return 0.5*complex(a, b); });
  }

  RealField SusyAlgebra::d(int i, RealField const &f) const {
      if (i == 1) return d_x(f);
      if (i == 2) return d_y(f);
      throw DomainError("operator index must be 1 or 2");
  }

  RealField SusyAlgebra::q(int i, Sign s, RealField const &f) const {
      double const sgn = (s == Sign::Plus) ? -1.0 : 1.0;
      auto out = d(i, f);
      auto const &c = grad(i);
      for (std::size_t k = 0; k < out.size(); ++k) out[k] = sgn*out[k] + c[k]*f[k];
      return out;
  }

  RealField SusyAlgebra::p(int i, Sign s, RealField const &f) const {
      Sign const flipped = (s == Sign::Plus) ? Sign::Minus : Sign::Plus;
      // only the k != i term survives the contraction
      int const k = (i == 1) ? 2 : 1;
      return double(epsilon(i, k))*q(k, flipped, f);
  }

  RealField SusyAlgebra::h0(RealField const &f) const { return -laplacian(f) + pot_.u0*f; }

  RealField SusyAlgebra::h2(RealField const &f) const { return -laplacian(f) + pot_.u2*f; }

  RealField SusyAlgebra::h1_entry(int i, int k, RealField const &f) const {
      if (i == 1 && k == 1) return -laplacian(f) + pot_.m11*f;
      if (i == 2 && k == 2) return -laplacian(f) + pot_.m22*f;
      if (i == 1 && k == 2) return pot_.m12*f;
      if (i == 2 && k == 1) return pot_.m21*f;
      throw DomainError("H1 entry indices must be 1 or 2");
  }

  VectorField2 SusyAlgebra::h1(VectorField2 const &v) const {
      return {h1_entry(1, 1, v.c1) + h1_entry(1, 2, v.c2), h1_entry(2, 1, v.c1) + h1_entry(2, 2, v.c2)};
  }

  VectorField2 SusyAlgebra::h1_tilde(VectorField2 const &v) const {
      return {h1_entry(1, 1, v.c1) - h1_entry(1, 2, v.c2), h1_entry(2, 2, v.c2) - h1_entry(2, 1, v.c1)};
  }

  ComplexField SusyAlgebra::vekua(VekuaKind kind, ComplexField const &w) const {
      auto const wx = d_x(w), wy = d_y(w);
      ComplexField out(w.grid());
      for (std::size_t k = 0; k < out.size(); ++k) {
          complex const dz = 0.5*(wx[k] - I*wy[k]);
          complex const dzb = 0.5*(wx[k] + I*wy[k]);
          complex const wc = std::conj(w[k]);
          switch (kind) {
              case VekuaKind::V:     out[k] = dzb - dzbar_chi_[k]*wc; break;
              case VekuaKind::Vbar:  out[k] = dz - dz_chi_[k]*wc; break;
              case VekuaKind::V1:    out[k] = dzb + dz_chi_[k]*wc; break;
              case VekuaKind::V1bar: out[k] = dz + dzbar_chi_[k]*wc; break;
          }
      }
      return out;
  }

  ComplexField SusyAlgebra::bers_derivative(ComplexField const &w, int m) const {
      return vekua((m % 2 == 0) ? VekuaKind::Vbar : VekuaKind::V1bar, w);
  }

  VectorField2 SusyAlgebra::darboux(DarbouxKind kind, VectorField2 const &v) const {
      auto const P = Sign::Plus, M = Sign::Minus;
      switch (kind) {
          case DarbouxKind::D:     return {q(1, M, v.c1) + p(1, M, v.c2), q(2, M, v.c1) + p(2, M, v.c2)};
          case DarbouxKind::Ddag:  return {q(1, P, v.c1) + q(2, P, v.c2), p(1, P, v.c1) + p(2, P, v.c2)};
          case DarbouxKind::D1:    return {p(2, M, v.c1) + p(1, M, v.c2), q(2, M, v.c1) + q(1, M, v.c2)};
          case DarbouxKind::D1dag: return {p(2, P, v.c1) + q(2, P, v.c2), p(1, P, v.c1) + q(1, P, v.c2)};
      }
      throw DomainError("unknown Darboux kind");
  }

} // namespace vekua
