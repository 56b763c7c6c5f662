#pragma once

#include <string>
#include <vector>

namespace cmetas {

// Sampled function on a strictly increasing grid; `se` is either empty
// or holds per-point standard errors for empirical estimates.
struct Curve {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<double> se;
  std::string label;
  std::string units;

  void validate() const;  // throws std::invalid_argument on violation
};

// CSV with '#' comment header lines, then a column-name row. A third
// `se` column is written when present and read back when found.
void write_curve_csv(const Curve& c, const std::string& path,
                     const std::vector<std::string>& comments, const std::string& col_t = "t",
                     const std::string& col_v = "value");
Curve read_curve_csv(const std::string& path);

}  // namespace cmetas
