#include "vekua/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vekua/conjugate.hpp"
#include "vekua/expansion.hpp"
#include "vekua/field_io.hpp"
#include "vekua/formal_powers.hpp"
#include "vekua/transmutation.hpp"

namespace vekua::cli {

  namespace fs = std::filesystem;
  using json = nlohmann::ordered_json;

  namespace {

    void reject_unknown(json const &obj, std::initializer_list<char const *> keys, std::string const &where) {
        if (!obj.is_object()) throw ConfigError(where + " must be an object");
        for (auto const &[k, v] : obj.items()) {
            bool known = false;
            for (char const *key : keys) known = known || k == key;
            if (!known) throw ConfigError("unknown key '" + k + "' in " + where);
        }
    }

    template <typename T>
    void read(json const &obj, char const *key, T &dst, std::string const &where) {
        if (!obj.contains(key)) return;
        try {
            dst = obj.at(key).get<T>();
        } catch (json::exception const &) {
            throw ConfigError("invalid value for '" + std::string(key) + "' in " + where);
        }
    }

    struct TolKey { char const *name; double ToleranceFactors::*field; };
    constexpr TolKey tolerance_keys[] = {
        {"analytic_limit", &ToleranceFactors::analytic_limit},
        {"vekua", &ToleranceFactors::vekua},
        {"zero_mode", &ToleranceFactors::zero_mode},
        {"ground_state", &ToleranceFactors::ground_state},
        {"operator_identity", &ToleranceFactors::operator_identity},
        {"transmutation", &ToleranceFactors::transmutation},
        {"mapping", &ToleranceFactors::mapping},
        {"commuting", &ToleranceFactors::commuting},
        {"conjugate", &ToleranceFactors::conjugate},
        {"fit_residual", &ToleranceFactors::fit_residual},
        {"fit_coefficient", &ToleranceFactors::fit_coefficient},
        {"exact", &ToleranceFactors::exact},
        {"rounding", &ToleranceFactors::rounding},
        {"ratio_lo", &ToleranceFactors::ratio_lo},
        {"ratio_hi", &ToleranceFactors::ratio_hi},
    };

    fs::path output_dir(RunConfig const &cfg) {
        fs::path dir = "vekua_output";
        if (!cfg.output_dir.empty()) dir = cfg.output_dir;
        fs::create_directories(dir);
        return dir;
    }

    Grid2D config_grid(RunConfig const &cfg) {
        return make_grid(cfg.grid.a1, cfg.grid.a2, cfg.grid.n1, cfg.grid.n2);
    }

    ComplexField read_input(RunConfig const &cfg) {
        if (cfg.input.empty()) throw ConfigError("this subcommand needs an input field (--input)");
        auto w = io::read_field_csv(fs::path(cfg.input));
        if (cfg.grid_given && !(w.grid() == config_grid(cfg))) {
            throw ConfigError("input field grid does not match the configured grid");
        }
        return w;
    }

    std::string unit_label(Unit u) { return u == Unit::One ? "1" : "i"; }

    int cmd_formal_powers(RunConfig const &cfg, std::ostream &out) {
        auto const g = config_grid(cfg);
        auto const sp = build_superpotential(cfg.superpotential, g);
        auto const table = cfg.method == "recursive" ? recursive_formal_powers(sp, cfg.n_max)
                                                     : assemble_formal_powers(sp, cfg.n_max);
        auto const dir = output_dir(cfg);
        io::write_grid_metadata(dir/"grid.json", g);
        for (int m = 0; m < 2; ++m) {
            for (int n = 0; n <= cfg.n_max; ++n) {
                for (auto u : {Unit::One, Unit::I}) {
                    auto const name = "Z_m" + std::to_string(m) + "_n" + std::to_string(n) + "_" + unit_label(u) + ".csv";
                    io::write_field_csv(dir/name, table.power(m, n, u));
                }
            }
        }
        out << "formal-powers: wrote " << 4*(cfg.n_max + 1) << " fields (n <= " << cfg.n_max << ", "
            << cfg.method << ") to " << dir.string() << "\n";
        return Pass;
    }

    void dump_kernel(fs::path const &path, KernelTable const &K) {
        std::ofstream os(path);
        if (!os) throw ConfigError("cannot write " + path.string());
        auto const &g = K.grid();
        int const c = g.origin_index();
        double const h = g.spacing();
        os << "x,t,K\n";
        char buf[96];
        for (int m = -c; m <= c; ++m) {
            for (int l = -std::abs(m); l <= std::abs(m); ++l) {
                std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", m*h, l*h, K.at(m, l));
                os << buf;
            }
        }
    }

    int cmd_transmute(RunConfig const &cfg, std::ostream &out) {
        if (cfg.input.empty() && !cfg.dump_kernel) throw ConfigError("transmute needs --input or --dump-kernel");
        auto const g = cfg.input.empty() ? config_grid(cfg) : read_input(cfg).grid();
        auto const sp = build_superpotential(cfg.superpotential, g);
        Transmutation2D const T(sp);
        auto const dir = output_dir(cfg);
        if (cfg.dump_kernel) {
            dump_kernel(dir/"kernel_x.csv", T.axis(Axis::X).kernel());
            dump_kernel(dir/"kernel_y.csv", T.axis(Axis::Y).kernel());
            out << "transmute: kernels written to " << dir.string() << "\n";
        }
        if (cfg.input.empty()) return Pass;
        auto const w = read_input(cfg);
        Variant const v = cfg.variant == "Ttilde" ? Variant::Tilde : Variant::Plain;
        ComplexField r = cfg.op == "T0"  ? T.t0(w)
                       : cfg.op == "T1"  ? T.t1(w)
                       : cfg.op == "T1d" ? T.apply_axis(Axis::X, v, w)
                                         : T.apply_axis(Axis::Y, v, w);
        io::write_field_csv(dir/"transmuted.csv", r);
        out << "transmute: " << cfg.op << " applied, result in " << (dir/"transmuted.csv").string() << "\n";
        return Pass;
    }

    int cmd_conjugate(RunConfig const &cfg, std::ostream &out, std::ostream &err) {
        auto const w = read_input(cfg);
        auto const sp = build_superpotential(cfg.superpotential, w.grid());
        NodeIndex const z0 = origin_node(w.grid());
        bool const from_w1 = cfg.direction == "2to0";
        auto const res = from_w1 ? conjugate_from_w1(sp, real_part(w), z0) : conjugate_from_w2(sp, real_part(w), z0);
        auto const dir = output_dir(cfg);
        io::write_field_csv(dir/"partner.csv", res.partner);
        json rep;
        rep["direction"] = cfg.direction;
        rep["gauge_constant"] = res.gauge_constant;
        rep["vekua_residual"] = res.vekua_residual;
        rep["partner_residual"] = res.partner_residual;
        rep["input_residual"] = res.input_residual;
        rep["compatibility_defect_h2"] = res.compatibility_defect;
        rep["warnings"] = res.warnings;
        std::ofstream(dir/"conjugate_report.json") << rep.dump(2) << "\n";
        for (auto const &msg : res.warnings) err << "warning: " << msg << "\n";
        out << "conjugate: partner written to " << (dir/"partner.csv").string()
            << " (Vekua residual " << res.vekua_residual << ")\n";
        return Pass;
    }

    int cmd_expand(RunConfig const &cfg, std::ostream &out) {
        auto const w = read_input(cfg);
        auto const sp = build_superpotential(cfg.superpotential, w.grid());
        auto const table = assemble_formal_powers(sp, cfg.degree);
        auto const dir = output_dir(cfg);
        json rep;
        rep["mode"] = cfg.mode;
        if (cfg.mode == "taylor") {
            auto const coeffs = taylor_coefficients(sp, w, table, cfg.degree);
            auto const series = evaluate_series(coeffs, table);
            auto const chk = check_series(coeffs, table, w, 0.5);
            rep["z0"] = {0.0, 0.0};
            json arr = json::array();
            for (std::size_t n = 0; n < coeffs.a.size(); ++n) {
                arr.push_back({{"n", n}, {"re", coeffs.a[n].real()}, {"im", coeffs.a[n].imag()},
                               {"uncertainty", coeffs.uncertainty[n]}});
            }
            rep["coefficients"] = arr;
            rep["series_residual_half_radius"] = chk.residual;
            rep["noise_bound"] = chk.noise_bound;
            io::write_field_csv(dir/"expansion_residual.csv", w - series);
            out << "expand: " << coeffs.a.size() << " Taylor coefficients, series residual " << chk.residual
                << " (noise bound " << chk.noise_bound << ")\n";
        } else {
            auto const kind = cfg.basis == "H2" ? BasisKind::KerH2 : BasisKind::KerH0;
            auto const target = real_part(w);
            auto const fit = fit_formal_polynomial(sp, target, kind, table, cfg.degree);
            rep["basis"] = cfg.basis;
            rep["degree"] = cfg.degree;
            json arr = json::array();
            for (std::size_t s = 0; s < fit.coefficients.size(); ++s) {
                bool const dropped = std::find(fit.dropped.begin(), fit.dropped.end(), int(s)) != fit.dropped.end();
                arr.push_back({{"n", s/2}, {"unit", s % 2 == 0 ? "1" : "i"}, {"value", fit.coefficients[s]}, {"dropped", dropped}});
            }
            rep["coefficients"] = arr;
            rep["residual_max"] = fit.residual_max;
            rep["residual_rms"] = fit.residual_rms;
            rep["singular_values"] = fit.singular_values;
            rep["kernel_residual_h2"] = fit.kernel_residual;
            io::write_field_csv(dir/"expansion_residual.csv", target - evaluate_fit(fit, table));
            out << "expand: fitted " << fit.coefficients.size() << " coefficients, residual max " << fit.residual_max
                << " rms " << fit.residual_rms << "\n";
        }
        std::ofstream(dir/"expansion.json") << rep.dump(2) << "\n";
        return Pass;
    }

    int cmd_verify(RunConfig const &cfg, std::ostream &out) {
        if (cfg.superpotential.name == "tabulated") {
            throw ConfigError("verify needs a catalog superpotential (it resamples at two resolutions)");
        }
        build_superpotential(cfg.superpotential, config_grid(cfg));
        VerifySettings s;
        s.a1 = cfg.grid.a1;
        s.a2 = cfg.grid.a2;
        s.n1 = cfg.grid.n1;
        s.n2 = cfg.grid.n2;
        s.u0_offset = cfg.corrupt_u0;
        s.tol = cfg.tol;
        auto const spec = cfg.superpotential;
        auto const report = run_verification([&spec](Grid2D const &g) { return build_superpotential(spec, g); }, s);

        json rep;
        rep["superpotential"] = {{"name", spec.name}, {"params", spec.params}};
        rep["grid"] = {{"a1", cfg.grid.a1}, {"a2", cfg.grid.a2}, {"N1", cfg.grid.n1}, {"N2", cfg.grid.n2}};
        rep["corrupt_u0"] = cfg.corrupt_u0;
        rep["passed"] = report.passed;
        rep["first_failure"] = report.first_failure;
        json rows = json::array();
        std::size_t failed = 0;
        for (auto const &r : report.rows) {
            rows.push_back({{"identity", r.identity}, {"tag", r.tag}, {"grid", r.grid}, {"residual", r.residual},
                            {"residual_fine", r.residual_fine}, {"cap", r.cap}, {"ratio", r.ratio}, {"verdict", r.verdict}});
            if (!r.passed) {
                ++failed;
                out << "FAIL " << r.identity << " [" << r.tag << "] residual " << r.residual << " cap " << r.cap
                    << " ratio " << r.ratio << " (" << r.verdict << ")\n";
            }
        }
        rep["rows"] = rows;
        auto const dir = output_dir(cfg);
        auto const path = dir/cfg.report;
        std::ofstream os(path);
        if (!os) throw ConfigError("cannot write " + path.string());
        os << rep.dump(2) << "\n";
        out << "verify: " << report.rows.size() - failed << "/" << report.rows.size() << " checks passed; report "
            << path.string() << "\n";
        return report.passed ? Pass : VerificationFailure;
    }

  } // namespace

  RunConfig parse_config(std::string const &text) {
      json j;
      try {
          j = json::parse(text);
      } catch (json::exception const &e) {
          throw ConfigError(std::string("malformed configuration: ") + e.what());
      }
      RunConfig cfg;
      reject_unknown(j, {"grid", "superpotential", "output_dir", "z0", "input", "tolerances", "formal_powers",
                         "transmute", "conjugate", "expand", "verify"}, "configuration");
      if (j.contains("grid")) {
          auto const &g = j["grid"];
          reject_unknown(g, {"a1", "a2", "N1", "N2"}, "grid");
          read(g, "a1", cfg.grid.a1, "grid");
          read(g, "a2", cfg.grid.a2, "grid");
          read(g, "N1", cfg.grid.n1, "grid");
          read(g, "N2", cfg.grid.n2, "grid");
          cfg.grid_given = true;
      }
      if (j.contains("superpotential")) {
          auto const &s = j["superpotential"];
          reject_unknown(s, {"name", "params", "chi1_file", "chi2_file"}, "superpotential");
          read(s, "name", cfg.superpotential.name, "superpotential");
          read(s, "params", cfg.superpotential.params, "superpotential");
          read(s, "chi1_file", cfg.superpotential.chi1_file, "superpotential");
          read(s, "chi2_file", cfg.superpotential.chi2_file, "superpotential");
      }
      read(j, "output_dir", cfg.output_dir, "configuration");
      read(j, "z0", cfg.z0, "configuration");
      read(j, "input", cfg.input, "configuration");
      if (j.contains("tolerances")) {
          auto const &t = j["tolerances"];
          if (!t.is_object()) throw ConfigError("tolerances must be an object");
          for (auto const &[k, v] : t.items()) {
              bool found = false;
              for (auto const &tk : tolerance_keys) {
                  if (k == tk.name) {
                      read(t, tk.name, cfg.tol.*tk.field, "tolerances");
                      found = true;
                  }
              }
              if (!found) throw ConfigError("unknown key '" + k + "' in tolerances");
          }
      }
      if (j.contains("formal_powers")) {
          auto const &s = j["formal_powers"];
          reject_unknown(s, {"n_max", "method"}, "formal_powers");
          read(s, "n_max", cfg.n_max, "formal_powers");
          read(s, "method", cfg.method, "formal_powers");
      }
      if (j.contains("transmute")) {
          auto const &s = j["transmute"];
          reject_unknown(s, {"op", "variant", "dump_kernel"}, "transmute");
          read(s, "op", cfg.op, "transmute");
          read(s, "variant", cfg.variant, "transmute");
          read(s, "dump_kernel", cfg.dump_kernel, "transmute");
      }
      if (j.contains("conjugate")) {
          auto const &s = j["conjugate"];
          reject_unknown(s, {"direction"}, "conjugate");
          read(s, "direction", cfg.direction, "conjugate");
      }
      if (j.contains("expand")) {
          auto const &s = j["expand"];
          reject_unknown(s, {"mode", "basis", "degree"}, "expand");
          read(s, "mode", cfg.mode, "expand");
          read(s, "basis", cfg.basis, "expand");
          read(s, "degree", cfg.degree, "expand");
      }
      if (j.contains("verify")) {
          auto const &s = j["verify"];
          reject_unknown(s, {"corrupt_u0", "report"}, "verify");
          read(s, "corrupt_u0", cfg.corrupt_u0, "verify");
          read(s, "report", cfg.report, "verify");
      }
      return cfg;
  }

  RunConfig load_config(std::string const &path) {
      std::ifstream is(path);
      if (!is) throw ConfigError("cannot open configuration file " + path);
      std::stringstream ss;
      ss << is.rdbuf();
      return parse_config(ss.str());
  }

  void validate(RunConfig const &cfg) {
      auto const &g = cfg.grid;
      if (g.n1 < 3 || g.n2 < 3 || g.n1 % 2 == 0 || g.n2 % 2 == 0) throw ConfigError("N1 and N2 must be odd and at least 3");
      if (!(g.a1 > 0.0) || !(g.a2 > 0.0)) throw ConfigError("a1 and a2 must be positive");
      if (cfg.z0[0] != 0.0 || cfg.z0[1] != 0.0) throw ConfigError("only z0 = (0, 0) is supported");
      for (auto const &tk : tolerance_keys) {
          if (!(cfg.tol.*tk.field > 0.0)) throw ConfigError(std::string("tolerance '") + tk.name + "' must be positive");
      }
      if (cfg.tol.ratio_lo > cfg.tol.ratio_hi) throw ConfigError("ratio_lo exceeds ratio_hi");
      if (cfg.n_max < 0) throw ConfigError("n_max must be non-negative");
      if (cfg.method != "assembled" && cfg.method != "recursive") throw ConfigError("method must be 'assembled' or 'recursive'");
      if (cfg.op != "T0" && cfg.op != "T1" && cfg.op != "T1d" && cfg.op != "T2d") throw ConfigError("op must be T0, T1, T1d or T2d");
      if (cfg.variant != "T" && cfg.variant != "Ttilde") throw ConfigError("variant must be T or Ttilde");
      if (cfg.direction != "2to0" && cfg.direction != "0to2") throw ConfigError("direction must be 2to0 or 0to2");
      if (cfg.mode != "fit" && cfg.mode != "taylor") throw ConfigError("mode must be fit or taylor");
      if (cfg.basis != "H0" && cfg.basis != "H2") throw ConfigError("basis must be H0 or H2");
      if (cfg.degree < 0) throw ConfigError("degree must be non-negative");
      if (cfg.mode == "taylor" && cfg.degree > max_taylor_order) throw ConfigError("Taylor degree is capped at 6");
      if (cfg.report.empty()) throw ConfigError("report file name must not be empty");
  }

  Superpotential build_superpotential(SuperpotentialSpec const &spec, Grid2D const &grid) {
      if (spec.name != "tabulated") {
          try {
              return catalog_superpotential(spec.name, spec.params, grid);
          } catch (DomainError const &e) {
              throw ConfigError(e.what());
          }
      }
      if (spec.chi1_file.empty() || spec.chi2_file.empty()) throw ConfigError("tabulated superpotential needs chi1_file and chi2_file");
      auto load = [](std::string const &file, Grid1D const &axis) {
          auto col = io::read_column_csv(fs::path(file));
          if (int(col.value.size()) != axis.size()) throw ConfigError(file + ": sample count does not match the grid");
          for (int k = 0; k < axis.size(); ++k) {
              if (std::abs(col.coordinate[k] - axis.node(k)) > 1e-9*std::max(1.0, axis.half_width())) {
                  throw ConfigError(file + ": coordinates do not match the grid nodes");
              }
          }
          return col.value;
      };
      try {
          auto c1 = load(spec.chi1_file, grid.gx);
          auto c2 = load(spec.chi2_file, grid.gy);
          return tabulated_superpotential(grid, std::move(c1), std::move(c2));
      } catch (DomainError const &e) {
          throw ConfigError(e.what());
      }
  }

  int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err) {
      CLI::App app{"Formal powers, SUSY operators and transmutations on grids"};
      app.require_subcommand(1);
      app.fallthrough();

      std::string config_path;
      GridSpec grid;
      int n_both = 0;
      SuperpotentialSpec spf;
      std::string outdir;
      app.add_option("--config", config_path, "JSON configuration file");
      auto *o_a1 = app.add_option("--a1", grid.a1, "half width along x");
      auto *o_a2 = app.add_option("--a2", grid.a2, "half width along y");
      auto *o_n1 = app.add_option("--n1", grid.n1, "nodes along x (odd)");
      auto *o_n2 = app.add_option("--n2", grid.n2, "nodes along y (odd)");
      auto *o_n = app.add_option("-n,--nodes", n_both, "nodes along both axes (odd)");
      auto *o_chi = app.add_option("--chi", spf.name, "superpotential: zero, linear, quadratic or tabulated");
      auto *o_par = app.add_option("--params", spf.params, "family parameters, e.g. 1,1")->delimiter(',');
      auto *o_c1 = app.add_option("--chi1-file", spf.chi1_file, "tabulated chi1 column CSV");
      auto *o_c2 = app.add_option("--chi2-file", spf.chi2_file, "tabulated chi2 column CSV");
      auto *o_out = app.add_option("--output-dir", outdir, "output directory");

      RunConfig flags;
      auto *fp = app.add_subcommand("formal-powers", "write Z^(n)(1), Z^(n)(i) and the successor powers as CSV");
      auto *o_nmax = fp->add_option("--n-max", flags.n_max, "highest exponent");
      auto *o_meth = fp->add_option("--method", flags.method, "assembled or recursive");

      auto *tr = app.add_subcommand("transmute", "apply T0, T1 or an axis transmutation to a field");
      auto *o_tin = tr->add_option("--input", flags.input, "input field CSV");
      auto *o_op = tr->add_option("--op", flags.op, "T0, T1, T1d or T2d");
      auto *o_var = tr->add_option("--variant", flags.variant, "T or Ttilde (for T1d, T2d)");
      auto *o_dump = tr->add_flag("--dump-kernel", flags.dump_kernel, "write the kernel tables (x,t,K)");

      auto *cj = app.add_subcommand("conjugate", "construct the metaharmonic conjugate of a field");
      auto *o_cin = cj->add_option("--input", flags.input, "input field CSV (re column)");
      auto *o_dir = cj->add_option("--direction", flags.direction, "2to0 (W1 -> W2) or 0to2 (W2 -> W1)");

      auto *ex = app.add_subcommand("expand", "formal polynomial fit or Taylor coefficients");
      auto *o_ein = ex->add_option("--input", flags.input, "input field CSV");
      auto *o_mode = ex->add_option("--mode", flags.mode, "fit or taylor");
      auto *o_basis = ex->add_option("--basis", flags.basis, "H0 or H2 (fit)");
      auto *o_deg = ex->add_option("--degree", flags.degree, "highest formal power");

      auto *vf = app.add_subcommand("verify", "run the identity battery at N and 2N-1");
      auto *o_cor = vf->add_option("--corrupt-u0", flags.corrupt_u0, "shift U0 by this constant (harness check)");
      auto *o_rep = vf->add_option("--report", flags.report, "report file name inside the output directory");

      try {
          app.parse(argc, argv);
      } catch (CLI::ParseError const &e) {
          int const code = app.exit(e, out, err);
          return code == 0 ? Pass : UsageError;
      }

      try {
          RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
          if (o_a1->count()) cfg.grid.a1 = grid.a1;
          if (o_a2->count()) cfg.grid.a2 = grid.a2;
          if (o_n->count()) cfg.grid.n1 = cfg.grid.n2 = n_both;
          if (o_n1->count()) cfg.grid.n1 = grid.n1;
          if (o_n2->count()) cfg.grid.n2 = grid.n2;
          if (o_a1->count() || o_a2->count() || o_n->count() || o_n1->count() || o_n2->count()) cfg.grid_given = true;
          if (o_chi->count()) {
              cfg.superpotential.name = spf.name;
              if (!o_par->count()) cfg.superpotential.params.clear();
          }
          if (o_par->count()) cfg.superpotential.params = spf.params;
          if (o_c1->count()) cfg.superpotential.chi1_file = spf.chi1_file;
          if (o_c2->count()) cfg.superpotential.chi2_file = spf.chi2_file;
          if (char const *env = std::getenv(output_dir_env); env && *env) cfg.output_dir = env;
          if (o_out->count()) cfg.output_dir = outdir;
          if (o_nmax->count()) cfg.n_max = flags.n_max;
          if (o_meth->count()) cfg.method = flags.method;
          if (o_tin->count() || o_cin->count() || o_ein->count()) cfg.input = flags.input;
          if (o_op->count()) cfg.op = flags.op;
          if (o_var->count()) cfg.variant = flags.variant;
          if (o_dump->count()) cfg.dump_kernel = true;
          if (o_dir->count()) cfg.direction = flags.direction;
          if (o_mode->count()) cfg.mode = flags.mode;
          if (o_basis->count()) cfg.basis = flags.basis;
          if (o_deg->count()) cfg.degree = flags.degree;
          if (o_cor->count()) cfg.corrupt_u0 = flags.corrupt_u0;
          if (o_rep->count()) cfg.report = flags.report;
          validate(cfg);

          if (fp->parsed()) return cmd_formal_powers(cfg, out);
          if (tr->parsed()) return cmd_transmute(cfg, out);
          if (cj->parsed()) return cmd_conjugate(cfg, out, err);
          if (ex->parsed()) return cmd_expand(cfg, out);
          return cmd_verify(cfg, out);
      } catch (ConvergenceError const &e) {
          err << "error: " << e.what() << "\n";
          return NonConvergence;
      } catch (RankDeficiencyError const &e) {
          err << "error: " << e.what() << "\n";
          return NonConvergence;
      } catch (Error const &e) {
          err << "error: " << e.what() << "\n";
          return UsageError;
      } catch (fs::filesystem_error const &e) {
          err << "error: " << e.what() << "\n";
          return UsageError;
      } catch (json::exception const &e) {
          err << "error: " << e.what() << "\n";
          return UsageError;
      }
  }

} // namespace vekua::cli
