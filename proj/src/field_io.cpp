#include "vekua/field_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace vekua::io {

  namespace {

    std::string format_double(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.17g", v);
        return buf;
    }

    std::vector<std::string> split_csv_line(std::string const &line) {
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            cell.erase(0, cell.find_first_not_of(" \t\r"));
            cell.erase(cell.find_last_not_of(" \t\r") + 1);
            cells.push_back(cell);
        }
        return cells;
    }

    double parse_double(std::string const &s, int line_no) {
        try {
            std::size_t used = 0;
            double const v = std::stod(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (std::exception const &) {
            throw ConfigError("line " + std::to_string(line_no) + ": cannot parse number '" + s + "'");
        }
    }

    // Rebuild a symmetric uniform axis from the distinct coordinates it carries.
    Grid1D infer_axis(std::vector<double> coords, char const *name) {
        std::sort(coords.begin(), coords.end());
        coords.erase(std::unique(coords.begin(), coords.end(),
                                 [](double a, double b) { return std::abs(a - b) <= 1e-12*std::max(1.0, std::abs(a)); }),
                     coords.end());
        int const n = int(coords.size());
        if (n < 3 || n % 2 == 0) {
            throw ConfigError(std::string("axis ") + name + " has " + std::to_string(n) + " distinct nodes; need an odd count >= 3");
        }
        double const a = coords.back();
        if (std::abs(coords.front() + a) > 1e-9*a) throw ConfigError(std::string("axis ") + name + " is not symmetric about 0");
        Grid1D g(a, n);
        for (int k = 0; k < n; ++k) {
            if (std::abs(coords[k] - g.node(k)) > 1e-9*a) throw ConfigError(std::string("axis ") + name + " is not uniform");
        }
        return g;
    }

  } // namespace

  void write_field_csv(std::ostream &os, ComplexField const &w) {
      auto const &g = w.grid();
      os << "x,y,re,im\n";
      for (int j = 0; j < g.ny(); ++j) {
          for (int i = 0; i < g.nx(); ++i) {
              auto const v = w(i, j);
              os << format_double(g.x(i)) << ',' << format_double(g.y(j)) << ','
                 << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
          }
      }
  }

  void write_field_csv(std::filesystem::path const &path, ComplexField const &w) {
      std::ofstream os(path);
      if (!os) throw ConfigError("cannot open " + path.string() + " for writing");
      write_field_csv(os, w);
      if (!os) throw ConfigError("write failed for " + path.string());
  }

  ComplexField read_field_csv(std::istream &is) {
      std::string line;
      if (!std::getline(is, line)) throw ConfigError("empty field file");
      auto const header = split_csv_line(line);
      if (header.size() < 3 || header[0] != "x" || header[1] != "y" || header[2] != "re") {
          throw ConfigError("field file must start with header x,y,re,im");
      }
      bool const has_im = header.size() >= 4 && header[3] == "im";
      struct Row { double x, y, re, im; };
      std::vector<Row> rows;
      int line_no = 1;
      while (std::getline(is, line)) {
          ++line_no;
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          auto const cells = split_csv_line(line);
          if (cells.size() < (has_im ? 4u : 3u)) throw ConfigError("line " + std::to_string(line_no) + ": too few columns");
          rows.push_back({parse_double(cells[0], line_no), parse_double(cells[1], line_no),
                          parse_double(cells[2], line_no), has_im ? parse_double(cells[3], line_no) : 0.0});
      }
      std::vector<double> xs, ys;
      for (auto const &r : rows) { xs.push_back(r.x); ys.push_back(r.y); }
      Grid2D const g{infer_axis(xs, "x"), infer_axis(ys, "y")};
      if (rows.size() != g.size()) throw ConfigError("field file does not cover the full rectangle exactly once");
      ComplexField w(g);
      std::vector<char> seen(g.size(), 0);
      for (auto const &r : rows) {
          int const i = g.gx.find_node(r.x), j = g.gy.find_node(r.y);
          if (i < 0 || j < 0) throw ConfigError("field row is not on the inferred grid");
          auto const k = g.index(i, j);
          if (seen[k]) throw ConfigError("duplicate node in field file");
          seen[k] = 1;
          w[k] = complex(r.re, r.im);
      }
      return w;
  }

  ComplexField read_field_csv(std::filesystem::path const &path) {
      std::ifstream is(path);
      if (!is) throw ConfigError("cannot open " + path.string());
      return read_field_csv(is);
  }

  std::string grid_metadata(Grid2D const &g) {
      nlohmann::ordered_json j;
      j["a1"] = g.gx.half_width();
      j["a2"] = g.gy.half_width();
      j["N1"] = g.nx();
      j["N2"] = g.ny();
      return j.dump(2);
  }

  void write_grid_metadata(std::filesystem::path const &path, Grid2D const &g) {
      std::ofstream os(path);
      if (!os) throw ConfigError("cannot open " + path.string() + " for writing");
      os << grid_metadata(g) << '\n';
  }

  Column read_column_csv(std::filesystem::path const &path) {
      std::ifstream is(path);
      if (!is) throw ConfigError("cannot open " + path.string());
      std::string line;
      if (!std::getline(is, line) || split_csv_line(line).size() < 2) throw ConfigError(path.string() + ": missing two-column header");
      Column c;
      int line_no = 1;
      while (std::getline(is, line)) {
          ++line_no;
          if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
          auto const cells = split_csv_line(line);
          if (cells.size() < 2) throw ConfigError(path.string() + ": line " + std::to_string(line_no) + " has fewer than 2 columns");
          c.coordinate.push_back(parse_double(cells[0], line_no));
          c.value.push_back(parse_double(cells[1], line_no));
      }
      return c;
  }

  void write_column_csv(std::filesystem::path const &path, std::string const &axis_name,
                        std::string const &value_name, std::vector<double> const &coordinate,
                        std::vector<double> const &value) {
      std::ofstream os(path);
      if (!os) throw ConfigError("cannot open " + path.string() + " for writing");
      os << axis_name << ',' << value_name << '\n';
      for (std::size_t k = 0; k < coordinate.size(); ++k) {
          os << format_double(coordinate[k]) << ',' << format_double(value[k]) << '\n';
      }
  }

} // namespace vekua::io
