#include "vekua/verification.hpp"

#include <cmath>
#include <sstream>

#include "vekua/conjugate.hpp"
#include "vekua/expansion.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/susy_operators.hpp"
#include "vekua/transmutation.hpp"

namespace vekua {

  std::vector<CorpusField> const & test_corpus() {
      static std::vector<CorpusField> const corpus = {
          {"gauss-a", [](double x, double y) {
               double const g = std::exp(-(x*x + y*y));
               return complex((1.0 + x - 2.0*y + x*y)*g, (0.5 - x*x + y)*g);
           }},
          {"gauss-b", [](double x, double y) {
               double const g = std::exp(-(x*x + y*y));
               return complex((x*x - 0.5*y*y + 0.3)*g, (x*y - 0.2*x)*g);
           }},
          {"gauss-c", [](double x, double y) {
               double const g = std::exp(-(x*x + y*y));
               return complex((0.8 - y + x*x*y)*g, (x + y*y - 0.4*x*y)*g);
           }},
      };
      return corpus;
  }

  double corpus_scale(ComplexField const &w, int margin) { return std::max(1.0, max_abs_interior(w, margin)); }

  namespace {

    constexpr int margin = 2;

    struct Profile1D {
        char const *name;
        double (*f)(double);
        double (*df)(double);
    };

    Profile1D const profiles_1d[] = {
        {"(1+s-s^2)exp(-s^2)",
         [](double s) { return (1.0 + s - s*s)*std::exp(-s*s); },
         [](double s) { return (1.0 - 2.0*s - 2.0*s*(1.0 + s - s*s))*std::exp(-s*s); }},
        {"s^3 exp(-s^2)",
         [](double s) { return s*s*s*std::exp(-s*s); },
         [](double s) { return (3.0*s*s - 2.0*s*s*s*s)*std::exp(-s*s); }},
    };

    double max_abs_1d(std::vector<double> const &v, int m) {
        double r = 0.0;
        for (int k = m; k < int(v.size()) - m; ++k) r = std::max(r, std::abs(v[k]));
        return r;
    }

    std::string unit_name(Unit u) { return u == Unit::One ? "1" : "i"; }

    class Collector {
      public:
        Collector(double h2, ToleranceFactors const &tol) : h2_(h2), tol_(tol) {}

        void converging(std::string identity, std::string const &tag, double residual, double factor, double scale = 1.0) {
            out.push_back({std::move(identity), tag, CheckKind::Converging, residual, factor*h2_*scale, scale});
        }
        void exact(std::string identity, std::string const &tag, double residual, double scale = 1.0) {
            out.push_back({std::move(identity), tag, CheckKind::Exact, residual, tol_.exact*scale, scale});
        }
        void bound(std::string identity, std::string const &tag, double residual, double cap) {
            out.push_back({std::move(identity), tag, CheckKind::Bound, residual, cap, 1.0});
        }

        std::vector<Measurement> out;

      private:
        double h2_;
        ToleranceFactors tol_;
    };

    void formal_power_checks(Collector &c, Superpotential const &sp, SusyAlgebra const &alg,
                             FormalPowerTable const &table, ToleranceFactors const &tol) {
        auto const &g = sp.grid();

        // analytic limit on the same grid
        auto const zero = catalog_superpotential("zero", {}, g);
        auto const flat = assemble_formal_powers(zero, 6);
        for (int n = 0; n <= 6; ++n) {
            for (auto u : {Unit::One, Unit::I}) {
                complex const a = (u == Unit::One) ? complex(1.0) : I;
                auto const exact = sample(g, [n, a](double x, double y) { return a*std::pow(complex(x, y), n); });
                double const r = max_abs_interior(flat.power(0, n, u) - exact, margin);
                c.converging("|Z^(" + std::to_string(n) + ")(" + unit_name(u) + ") - " + unit_name(u) + " z^" + std::to_string(n) + "|, chi = 0",
                             "analytic limit", r, tol.analytic_limit);
            }
        }

        for (int n = 0; n <= 5; ++n) {
            for (auto u : {Unit::One, Unit::I}) {
                std::string const s = "(" + std::to_string(n) + ")(" + unit_name(u) + ")";
                c.converging("V Z^" + s, "main Vekua equation",
                             max_abs_interior(alg.vekua(VekuaKind::V, table.power(0, n, u)), margin), tol.vekua);
                c.converging("V1 Z1^" + s, "successor Vekua equation",
                             max_abs_interior(alg.vekua(VekuaKind::V1, table.power(1, n, u)), margin), tol.vekua);
            }
        }

        auto const chi = sp.chi();
        c.converging("H0 exp(-chi)", "zero-energy states", max_abs_interior(alg.h0(exp(-1.0*chi)), margin), tol.zero_mode);
        c.converging("H2 exp(chi)", "zero-energy states", max_abs_interior(alg.h2(exp(chi)), margin), tol.zero_mode);

        for (int n = 0; n <= 4; ++n) {
            for (auto u : {Unit::One, Unit::I}) {
                std::string const s = "(" + std::to_string(n) + ")(" + unit_name(u) + ")";
                auto const &z = table.power(0, n, u);
                c.converging("H P Z^" + s, "ground states", max_abs_interior(alg.h(project_P(z)), margin), tol.ground_state);
                auto const zd = alg.bers_derivative(z, 0);
                c.converging("H1 P (Z^" + s + ")'", "ground states", max_abs_interior(alg.h1(project_P(zd)), margin), tol.ground_state);
            }
        }
    }

    void operator_checks(Collector &c, SusyAlgebra const &alg, Grid2D const &g, ToleranceFactors const &tol) {
        auto const P = Sign::Plus, M = Sign::Minus;
        for (auto const &cf : test_corpus()) {
            auto const w = sample(g, cf.fn);
            double const sc = corpus_scale(w);
            auto const Pw = project_P(w);
            std::string const on = " on " + cf.name;
            auto vek = [&](VekuaKind k, ComplexField const &f) { return alg.vekua(k, f); };

            auto conv = [&](std::string const &id, std::string const &tag, VectorField2 const &r) {
                c.converging(id + on, tag, max_abs_interior(r, margin), tol.operator_identity, sc);
            };
            auto conv_s = [&](std::string const &id, std::string const &tag, RealField const &r) {
                c.converging(id + on, tag, max_abs_interior(r, margin), tol.operator_identity, sc);
            };

            conv("D P - 2 P Vbar", "Vekua-Darboux relation",
                 alg.darboux(DarbouxKind::D, Pw) - 2.0*project_P(vek(VekuaKind::Vbar, w)));
            conv("D+ P + 2 P V1", "Vekua-Darboux relation",
                 alg.darboux(DarbouxKind::Ddag, Pw) + 2.0*project_P(vek(VekuaKind::V1, w)));
            conv("D1 P - 2 P V1bar", "Vekua-Darboux relation",
                 alg.darboux(DarbouxKind::D1, Pw) - 2.0*project_P(vek(VekuaKind::V1bar, w)));
            conv("D1+ P + 2 P V", "Vekua-Darboux relation",
                 alg.darboux(DarbouxKind::D1dag, Pw) + 2.0*project_P(vek(VekuaKind::V, w)));

            conv("H P + 4 P V1 Vbar", "factorization",
                 alg.h(Pw) + 4.0*project_P(vek(VekuaKind::V1, vek(VekuaKind::Vbar, w))));
            conv("H1 P + 4 P Vbar V1", "factorization",
                 alg.h1(Pw) + 4.0*project_P(vek(VekuaKind::Vbar, vek(VekuaKind::V1, w))));
            conv("H1~ P + 4 P V V1bar", "factorization",
                 alg.h1_tilde(Pw) + 4.0*project_P(vek(VekuaKind::V, vek(VekuaKind::V1bar, w))));

            conv("D+ D - H", "Darboux products", alg.darboux(DarbouxKind::Ddag, alg.darboux(DarbouxKind::D, Pw)) - alg.h(Pw));
            conv("D D+ - H1", "Darboux products", alg.darboux(DarbouxKind::D, alg.darboux(DarbouxKind::Ddag, Pw)) - alg.h1(Pw));
            conv("D1 D1+ - H", "Darboux products", alg.darboux(DarbouxKind::D1, alg.darboux(DarbouxKind::D1dag, Pw)) - alg.h(Pw));
            conv("D1+ D1 - H1~", "Darboux products", alg.darboux(DarbouxKind::D1dag, alg.darboux(DarbouxKind::D1, Pw)) - alg.h1_tilde(Pw));

            auto const f = real_part(w);
            conv_s("sum_k p_k+ q_k- f", "nilpotency", alg.p(1, P, alg.q(1, M, f)) + alg.p(2, P, alg.q(2, M, f)));
            conv_s("sum_k q_k+ p_k- f", "nilpotency", alg.q(1, P, alg.p(1, M, f)) + alg.q(2, P, alg.p(2, M, f)));

            for (int i = 1; i <= 2; ++i) {
                std::string const si = std::to_string(i);
                RealField a = alg.h0(alg.q(i, P, f)), b = alg.q(i, M, alg.h0(f));
                RealField cc = alg.h2(alg.p(i, P, f)), d = alg.p(i, M, alg.h2(f));
                for (int k = 1; k <= 2; ++k) {
                    a -= alg.q(k, P, alg.h1_entry(k, i, f));
                    b -= alg.h1_entry(i, k, alg.q(k, M, f));
                    cc -= alg.p(k, P, alg.h1_entry(k, i, f));
                    d -= alg.h1_entry(i, k, alg.p(k, M, f));
                }
                conv_s("H0 q" + si + "+ - sum_k q_k+ H1_k" + si, "intertwining", a);
                conv_s("q" + si + "- H0 - sum_k H1_" + si + "k q_k-", "intertwining", b);
                conv_s("H2 p" + si + "+ - sum_k p_k+ H1_k" + si, "intertwining", cc);
                conv_s("p" + si + "- H2 - sum_k H1_" + si + "k p_k-", "intertwining", d);
            }
        }
    }

    void transmutation_checks(Collector &c, Superpotential const &sp, Transmutation2D const &T,
                              FormalPowerTable const &table, SusyAlgebra const &alg, ToleranceFactors const &tol) {
        auto const &g = sp.grid();
        auto const aux = build_aux_system(sp, 5);

        for (auto axis : {Axis::X, Axis::Y}) {
            std::string const an = axis == Axis::X ? "T1" : "T2";
            std::string const var = axis == Axis::X ? "x" : "y";
            auto const &op = T.axis(axis);
            auto const &ag = op.grid();
            auto const &sys = axis == Axis::X ? aux.x : aux.y;
            for (int k = 0; k <= 5; ++k) {
                std::vector<double> f(ag.size());
                for (int i = 0; i < ag.size(); ++i) f[i] = std::pow(ag.node(i), k);
                auto const tf = op.apply(f, Variant::Plain), ttf = op.apply(f, Variant::Tilde);
                double e1 = 0.0, e2 = 0.0, s1 = 1.0, s2 = 1.0;
                for (int i = 0; i < ag.size(); ++i) {
                    e1 = std::max(e1, std::abs(tf[i] - sys.phi[k][i]));
                    e2 = std::max(e2, std::abs(ttf[i] - sys.phi_tilde[k][i]));
                    s1 = std::max(s1, std::abs(sys.phi[k][i]));
                    s2 = std::max(s2, std::abs(sys.phi_tilde[k][i]));
                }
                std::string const ks = std::to_string(k);
                c.converging(an + "[" + var + "^" + ks + "] - phi_" + ks + " (relative)", "transmutation of powers", e1/s1, tol.transmutation);
                c.converging(an + "~[" + var + "^" + ks + "] - phi~_" + ks + " (relative)", "transmutation of powers", e2/s2, tol.transmutation);
            }

            std::vector<double> chi(ag.size());
            for (int i = 0; i < ag.size(); ++i) chi[i] = sp.profile(axis).value(ag.node(i));
            double const h = ag.spacing();
            int const o = ag.origin_index();
            for (auto const &p : profiles_1d) {
                std::vector<double> f(ag.size()), df(ag.size());
                for (int i = 0; i < ag.size(); ++i) {
                    f[i] = p.f(ag.node(i));
                    df[i] = p.df(ag.node(i));
                }
                auto const tt = op.apply(f, Variant::Tilde), tp = op.apply(f, Variant::Plain);
                auto const tdf = op.apply(df, Variant::Plain), ttdf = op.apply(df, Variant::Tilde);
                std::vector<double> u(ag.size()), v(ag.size()), r1(ag.size()), r2(ag.size());
                for (int i = 0; i < ag.size(); ++i) {
                    u[i] = std::exp(chi[i])*tt[i];
                    v[i] = std::exp(-chi[i])*tp[i];
                }
                auto const du = derivative_1d(std::span<double const>(u), h);
                auto const dv = derivative_1d(std::span<double const>(v), h);
                for (int i = 0; i < ag.size(); ++i) {
                    r1[i] = du[i] - std::exp(chi[i])*tdf[i];
                    r2[i] = dv[i] - std::exp(-chi[i])*ttdf[i];
                }
                std::string const on = " on " + std::string(p.name);
                c.converging("d e^chi " + an + "~ - e^chi " + an + " d" + on, "transmutation intertwining", max_abs_1d(r1, margin), tol.operator_identity);
                c.converging("d e^-chi " + an + " - e^-chi " + an + "~ d" + on, "transmutation intertwining", max_abs_1d(r2, margin), tol.operator_identity);

                auto const F = cumulative_integral_1d(std::span<double const>(f), h, o);
                auto const tF = op.apply(F, Variant::Tilde), pF = op.apply(F, Variant::Plain);
                for (int i = 0; i < ag.size(); ++i) {
                    u[i] = std::exp(chi[i])*tp[i];
                    v[i] = std::exp(-chi[i])*tt[i];
                }
                auto const iu = cumulative_integral_1d(std::span<double const>(u), h, o);
                auto const iv = cumulative_integral_1d(std::span<double const>(v), h, o);
                for (int i = 0; i < ag.size(); ++i) {
                    r1[i] = std::exp(chi[i])*tF[i] - iu[i];
                    r2[i] = std::exp(-chi[i])*pF[i] - iv[i];
                }
                c.converging("e^chi " + an + "~ int f - int e^chi " + an + " f" + on, "transmutation integrals", max_abs_1d(r1, margin), tol.operator_identity);
                c.converging("e^-chi " + an + " int f - int e^-chi " + an + "~ f" + on, "transmutation integrals", max_abs_1d(r2, margin), tol.operator_identity);
            }
        }

        auto const w0 = sample(g, test_corpus().front().fn);
        auto const f0 = real_part(w0);
        for (auto v : {Variant::Plain, Variant::Tilde}) {
            auto const xy = T.apply_axis(Axis::X, v, T.apply_axis(Axis::Y, v, f0));
            auto const yx = T.apply_axis(Axis::Y, v, T.apply_axis(Axis::X, v, f0));
            c.exact(std::string(v == Variant::Plain ? "T1 T2 - T2 T1" : "T1~ T2~ - T2~ T1~") + " on " + test_corpus().front().name,
                    "transmutation commutation", max_abs_interior(xy - yx, 0), corpus_scale(w0, 0));
        }
        {
            Transmutation2D const flat(catalog_superpotential("zero", {}, g));
            c.exact("T0 - identity, chi = 0", "transmutation of z^n", max_abs_interior(flat.t0(w0) - w0, 0), corpus_scale(w0, 0));
        }

        for (int n = 0; n <= 4; ++n) {
            for (auto u : {Unit::One, Unit::I}) {
                complex const a = (u == Unit::One) ? complex(1.0) : I;
                auto const zn = sample(g, [n, a](double x, double y) { return a*std::pow(complex(x, y), n); });
                std::string const s = "(" + std::to_string(n) + ")(" + unit_name(u) + ")";
                c.converging("T0[" + unit_name(u) + " z^" + std::to_string(n) + "] - Z^" + s, "transmutation of z^n",
                             max_abs_interior(T.t0(zn) - table.power(0, n, u), margin), tol.mapping);
                c.converging("T1[" + unit_name(u) + " z^" + std::to_string(n) + "] - Z1^" + s, "transmutation of z^n",
                             max_abs_interior(T.t1(zn) - table.power(1, n, u), margin), tol.mapping);
            }
        }

        NodeIndex const z0 = origin_node(g);
        for (auto const &cf : test_corpus()) {
            auto const w = sample(g, cf.fn);
            double const sc = corpus_scale(w);
            std::string const on = " on " + cf.name;
            auto const t0w = T.t0(w), t1w = T.t1(w);
            auto const dzb = d_zbar(w), dz = d_z(w);
            auto conv = [&](std::string const &id, std::string const &tag, double r) {
                c.converging(id + on, tag, r, tol.commuting, sc);
            };
            conv("V T0 - T1 d_zbar", "commuting diagram", max_abs_interior(alg.vekua(VekuaKind::V, t0w) - T.t1(dzb), margin));
            conv("V1 T1 - T0 d_zbar", "commuting diagram", max_abs_interior(alg.vekua(VekuaKind::V1, t1w) - T.t0(dzb), margin));
            conv("d_(F,G) T0 - T1 d_z", "commuting diagram", max_abs_interior(alg.bers_derivative(t0w, 0) - T.t1(dz), margin));
            conv("d_(F1,G1) T1 - T0 d_z", "commuting diagram", max_abs_interior(alg.bers_derivative(t1w, 1) - T.t0(dz), margin));

            auto const iw = line_integral(w, z0);
            conv("int T0[w] d_(F1,G1) - T1[int w]", "integral diagram", max_abs_interior(fg_integral(1, sp, t0w, z0) - T.t1(iw), margin));
            conv("int T1[w] d_(F,G) - T0[int w]", "integral diagram", max_abs_interior(fg_integral(0, sp, t1w, z0) - T.t0(iw), margin));

            auto const lap = laplacian(w);
            conv("H P T0 + P T0 Laplacian", "Laplacian intertwining",
                 max_abs_interior(alg.h(project_P(t0w)) + project_P(T.t0(lap)), margin));
            conv("H1 P T1 + P T1 Laplacian", "Laplacian intertwining",
                 max_abs_interior(alg.h1(project_P(t1w)) + project_P(T.t1(lap)), margin));
        }
    }

    void conjugate_checks(Collector &c, Superpotential const &sp, FormalPowerTable const &table, ToleranceFactors const &tol) {
        auto const &g = sp.grid();
        NodeIndex const z0 = origin_node(g);
        auto const chi = sp.chi();
        auto const em = exp(-1.0*chi), ep = exp(chi);
        for (int n = 1; n <= 3; ++n) {
            std::string const ns = std::to_string(n);
            auto const &z1 = table.power(0, n, Unit::One);
            auto const r1 = conjugate_from_w1(sp, real_part(z1), z0);
            c.converging("W2[Re Z^(" + ns + ")(1)] - Im Z^(" + ns + ")(1), gauge fitted", "conjugate construction",
                         fit_gauge(r1.partner, imag_part(z1), em).residual, tol.conjugate);
            auto const &zi = table.power(0, n, Unit::I);
            auto const r2 = conjugate_from_w2(sp, imag_part(zi), z0);
            c.converging("W1[Im Z^(" + ns + ")(i)] - Re Z^(" + ns + ")(i), gauge fitted", "conjugate construction",
                         fit_gauge(r2.partner, real_part(zi), ep).residual, tol.conjugate);
        }
        auto const zero = catalog_superpotential("zero", {}, g);
        for (int n = 1; n <= 3; ++n) {
            auto const zn = sample(g, [n](double x, double y) { return std::pow(complex(x, y), n); });
            auto const r = conjugate_from_w1(zero, real_part(zn), z0);
            c.converging("harmonic conjugate of Re z^" + std::to_string(n) + ", chi = 0", "conjugate construction",
                         max_abs_interior(r.partner - imag_part(zn), margin), tol.conjugate);
        }
    }

    void expansion_checks(Collector &c, Superpotential const &sp, FormalPowerTable const &table, ToleranceFactors const &tol, double h2) {
        for (auto kind : {BasisKind::KerH0, BasisKind::KerH2}) {
            std::string const kn = kind == BasisKind::KerH0 ? "ker H0" : "ker H2";
            for (int s = 0; s < 10; ++s) {
                auto const &z = table.power(0, s/2, s % 2 == 0 ? Unit::One : Unit::I);
                auto const target = kind == BasisKind::KerH0 ? imag_part(z) : real_part(z);
                if (max_abs_interior(target) == 0.0) continue;
                auto const fit = fit_formal_polynomial(sp, target, kind, table, 4);
                double coef = std::abs(fit.coefficients[s] - 1.0);
                for (int k = 0; k < int(fit.coefficients.size()); ++k) if (k != s) coef = std::max(coef, std::abs(fit.coefficients[k]));
                std::string const id = "self-fit slot " + std::to_string(s) + " (" + kn + ")";
                c.bound(id + " coefficients", "formal polynomial fit", coef, tol.fit_coefficient);
                c.bound(id + " residual", "formal polynomial fit", fit.residual_max, tol.fit_residual*h2);
            }
        }
        for (int n = 0; n <= 4; ++n) {
            for (auto u : {Unit::One, Unit::I}) {
                auto const &w = table.power(0, n, u);
                auto const coeffs = taylor_coefficients(sp, w, table, 4);
                auto const chk = check_series(coeffs, table, w, 0.5);
                c.bound("Taylor round trip Z^(" + std::to_string(n) + ")(" + unit_name(u) + ")", "Taylor round trip",
                        chk.residual, chk.noise_bound);
            }
        }
    }

    std::string grid_label(Grid2D const &g) { return std::to_string(g.nx()) + "x" + std::to_string(g.ny()); }

  } // namespace

  std::vector<Measurement> measure_identities(Superpotential const &sp, VerifySettings const &settings) {
      auto const &g = sp.grid();
      double const h = std::max(g.gx.spacing(), g.gy.spacing());
      Collector c(h*h, settings.tol);
      SusyAlgebra const alg(sp, settings.u0_offset);
      auto const table = assemble_formal_powers(sp, 6);
      Transmutation2D const T(sp);

      formal_power_checks(c, sp, alg, table, settings.tol);
      operator_checks(c, alg, g, settings.tol);
      transmutation_checks(c, sp, T, table, alg, settings.tol);
      conjugate_checks(c, sp, table, settings.tol);
      expansion_checks(c, sp, table, settings.tol, h*h);
      return std::move(c.out);
  }

  CheckRow judge(Measurement const &coarse, Measurement const &fine, ToleranceFactors const &tol) {
      CheckRow row;
      row.identity = coarse.identity;
      row.tag = coarse.tag;
      row.residual = coarse.residual;
      row.residual_fine = fine.residual;
      row.cap = coarse.cap;
      row.ratio = fine.residual > 0.0 ? coarse.residual/fine.residual : 0.0;
      bool const finite = std::isfinite(coarse.residual) && std::isfinite(fine.residual);
      switch (coarse.kind) {
          case CheckKind::Converging:
              if (!finite || coarse.residual > coarse.cap) row.verdict = "fail: cap";
              else if (coarse.residual <= std::max(tol.exact*coarse.scale, tol.rounding*coarse.cap)) row.verdict = "pass (exact)";
              else if (row.ratio < tol.ratio_lo || row.ratio > tol.ratio_hi) row.verdict = "fail: ratio";
              else row.verdict = "pass";
              break;
          case CheckKind::Exact:
          case CheckKind::Bound:
              row.verdict = (finite && coarse.residual <= coarse.cap && fine.residual <= fine.cap) ? "pass" : "fail: cap";
              break;
      }
      row.passed = row.verdict.rfind("pass", 0) == 0;
      return row;
  }

  VerifyReport run_verification(SuperpotentialFactory const &factory, VerifySettings const &settings) {
      auto const coarse_grid = make_grid(settings.a1, settings.a2, settings.n1, settings.n2);
      auto const fine_grid = make_grid(settings.a1, settings.a2, 2*settings.n1 - 1, 2*settings.n2 - 1);
      auto const coarse = measure_identities(factory(coarse_grid), settings);
      auto const fine = measure_identities(factory(fine_grid), settings);
      if (coarse.size() != fine.size()) throw Error("verification battery differs between resolutions");

      VerifyReport report;
      report.passed = true;
      std::string const label = grid_label(coarse_grid) + "/" + grid_label(fine_grid);
      for (std::size_t k = 0; k < coarse.size(); ++k) {
          auto row = judge(coarse[k], fine[k], settings.tol);
          row.grid = label;
          if (!row.passed && report.passed) {
              report.passed = false;
              report.first_failure = row.identity + " [" + row.tag + "]: " + row.verdict;
          }
          report.rows.push_back(std::move(row));
      }
      return report;
  }

} // namespace vekua
