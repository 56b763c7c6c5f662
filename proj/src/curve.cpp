#include "cmetas/curve.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cmetas {

void Curve::validate() const {
  if (grid.size() != values.size())
    throw std::invalid_argument("Curve: grid/values length mismatch");
  if (!se.empty() && se.size() != grid.size())
    throw std::invalid_argument("Curve: se length mismatch");
  for (std::size_t i = 1; i < grid.size(); ++i)
    if (!(grid[i] > grid[i - 1]))
      throw std::invalid_argument("Curve: grid must be strictly increasing");
}

void write_curve_csv(const Curve& c, const std::string& path,
                     const std::vector<std::string>& comments, const std::string& col_t,
                     const std::string& col_v) {
  c.validate();
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  for (const auto& line : comments) out << "# " << line << "\n";
  if (!c.label.empty()) out << "# label: " << c.label << "\n";
  if (!c.units.empty()) out << "# units: " << c.units << "\n";
  out << col_t << "," << col_v;
  if (!c.se.empty()) out << ",se";
  out << "\n";
  char buf[96];
  for (std::size_t i = 0; i < c.grid.size(); ++i) {
    if (c.se.empty())
      std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", c.grid[i], c.values[i]);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", c.grid[i], c.values[i], c.se[i]);
    out << buf;
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Curve read_curve_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open: " + path);
  Curve c;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {  // column-name row
      header_seen = true;
      continue;
    }
    std::istringstream ss(line);
    std::string cell;
    std::vector<double> row;
    while (std::getline(ss, cell, ',')) row.push_back(std::stod(cell));
    if (row.size() < 2) throw std::runtime_error("bad csv row in " + path + ": " + line);
    c.grid.push_back(row[0]);
    c.values.push_back(row[1]);
    if (row.size() >= 3) c.se.push_back(row[2]);
  }
  c.validate();
  return c;
}

}  // namespace cmetas
