#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vekua/grid.hpp"

namespace vekua::io {

  // CSV with header `x,y,re,im`, one row per node in storage order, 17 significant digits.
  void write_field_csv(std::ostream &os, ComplexField const &w);
  void write_field_csv(std::filesystem::path const &path, ComplexField const &w);
  inline void write_field_csv(std::filesystem::path const &path, RealField const &f) {
      write_field_csv(path, to_complex(f));
  }

  // Reads a field CSV and reconstructs its symmetric uniform grid from the coordinates.
  ComplexField read_field_csv(std::istream &is);
  ComplexField read_field_csv(std::filesystem::path const &path);

  // Grid metadata record {"a1", "a2", "N1", "N2"}.
  std::string grid_metadata(Grid2D const &g);
  void write_grid_metadata(std::filesystem::path const &path, Grid2D const &g);

  // Two-column table `<axis>,<name>` (used for tabulated superpotentials).
  struct Column {
      std::vector<double> coordinate;
      std::vector<double> value;
  };
  Column read_column_csv(std::filesystem::path const &path);
  void write_column_csv(std::filesystem::path const &path, std::string const &axis_name,
                        std::string const &value_name, std::vector<double> const &coordinate,
                        std::vector<double> const &value);

} // namespace vekua::io
