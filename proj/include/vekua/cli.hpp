#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vekua/superpotential.hpp"
#include "vekua/verification.hpp"

namespace vekua::cli {

  enum ExitCode : int {
      Pass = 0,
      VerificationFailure = 1,
      UsageError = 2,
      NonConvergence = 3,
  };

  inline constexpr char const *output_dir_env = "VEKUA_OUTPUT_DIR";

  struct GridSpec {
      double a1 = 1.0, a2 = 1.0;
      int n1 = 201, n2 = 201;
  };

  // Catalog family with parameters, or "tabulated" with two column files.
  struct SuperpotentialSpec {
      std::string name = "zero";
      std::vector<double> params;
      std::string chi1_file, chi2_file;
  };

  struct RunConfig {
      GridSpec grid;
      bool grid_given = false;
      SuperpotentialSpec superpotential;
      std::string output_dir;              // empty: environment, then "vekua_output"
      std::array<double, 2> z0{0.0, 0.0};
      ToleranceFactors tol;

      // formal-powers
      int n_max = 6;
      std::string method = "assembled";    // or "recursive"
      // transmute / conjugate / expand input field
      std::string input;
      std::string op = "T0";               // T0, T1, T1d, T2d
      std::string variant = "T";           // T or Ttilde (T1d, T2d)
      bool dump_kernel = false;
      // conjugate
      std::string direction = "2to0";      // W1 in ker H2 -> W2, or "0to2"
      // expand
      std::string mode = "fit";            // or "taylor"
      std::string basis = "H0";            // or "H2"
      int degree = 4;
      // verify
      double corrupt_u0 = 0.0;
      std::string report = "verify_report.json";
  };

  // Reads a JSON configuration; unknown keys and invalid values raise ConfigError.
  RunConfig load_config(std::string const &path);
  RunConfig parse_config(std::string const &json_text);
  void validate(RunConfig const &cfg);

  Superpotential build_superpotential(SuperpotentialSpec const &spec, Grid2D const &grid);

  // Full command line (argv[0] is the program name). Returns an ExitCode.
  int run(int argc, char const *const *argv, std::ostream &out, std::ostream &err);

} // namespace vekua::cli
