#pragma once

#include "vekua/grid.hpp"
#include "vekua/superpotential.hpp"

namespace vekua {

  // Two real components on one grid: (psi0, psi2) or (psi1_1, psi1_2).
  struct VectorField2 {
      RealField c1;
      RealField c2;
  };

  inline VectorField2 operator+(VectorField2 const &a, VectorField2 const &b) { return {a.c1 + b.c1, a.c2 + b.c2}; }
  inline VectorField2 operator-(VectorField2 const &a, VectorField2 const &b) { return {a.c1 - b.c1, a.c2 - b.c2}; }
  inline VectorField2 operator*(double s, VectorField2 const &a) { return {s*a.c1, s*a.c2}; }
  inline double max_abs_interior(VectorField2 const &v, int margin) {
      return std::max(max_abs_interior(v.c1, margin), max_abs_interior(v.c2, margin));
  }

  // P w = (Im w, Re w); P+ = Re, P- = Im.
  VectorField2 project_P(ComplexField const &w);
  inline RealField project_plus(ComplexField const &w) { return real_part(w); }
  inline RealField project_minus(ComplexField const &w) { return imag_part(w); }
  // Inverse of project_P: c2 + i c1.
  ComplexField unproject_P(VectorField2 const &v);

  enum class Sign { Plus, Minus };
  enum class VekuaKind { V, Vbar, V1, V1bar };
  enum class DarbouxKind { D, Ddag, D1, D1dag };

  // Antisymmetric tensor with eps(1,2) = 1, indices 1-based.
  constexpr int epsilon(int i, int k) { return (i == k) ? 0 : (i == 1 ? 1 : -1); }

  // First- and second-order operators generated by a separable superpotential, acting
  // on sampled fields with the finite differences of grid.hpp. Indices i, k are 1 (x) or 2 (y).
  class SusyAlgebra {
    public:
      // `u0_offset` shifts U0 (and only U0); nonzero values exist to exercise failure paths.
      explicit SusyAlgebra(Superpotential sp, double u0_offset = 0.0);

      Superpotential const & superpotential() const { return sp_; }
      Potentials const & potentials() const { return pot_; }
      Grid2D const & grid() const { return sp_.grid(); }

      // q_i^+- = -+ d_i + d_i chi
      RealField q(int i, Sign s, RealField const &f) const;
      // p_i^+- = sum_k eps_ik q_k^-+
      RealField p(int i, Sign s, RealField const &f) const;

      RealField h0(RealField const &f) const;
      RealField h2(RealField const &f) const;
      // Entry (i, k) of the matrix operator H1 applied to a scalar field.
      RealField h1_entry(int i, int k, RealField const &f) const;
      VectorField2 h1(VectorField2 const &v) const;
      // H1 with the off-diagonal entries negated.
      VectorField2 h1_tilde(VectorField2 const &v) const;
      // H = diag(H0, H2)
      VectorField2 h(VectorField2 const &v) const { return {h0(v.c1), h2(v.c2)}; }

      ComplexField vekua(VekuaKind kind, ComplexField const &w) const;
      // Bers derivative for the pair (F_m, G_m): Vbar for even m, V1bar for odd m.
      ComplexField bers_derivative(ComplexField const &w, int m = 0) const;

      VectorField2 darboux(DarbouxKind kind, VectorField2 const &v) const;

    private:
      RealField d(int i, RealField const &f) const;
      RealField const & grad(int i) const { return i == 1 ? cx_ : cy_; }

      Superpotential sp_;
      Potentials pot_;
      RealField cx_, cy_;
      ComplexField dz_chi_, dzbar_chi_;
  };

} // namespace vekua
