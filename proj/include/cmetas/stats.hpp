#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "cmetas/curve.hpp"

namespace cmetas::stats {

struct KsResult {
  double statistic = 0.0;
  double crit_5pct = 0.0;  // 1.358/sqrt(n)
  double crit_1pct = 0.0;  // 1.628/sqrt(n)
  std::size_t n = 0;
  bool pass_5pct() const { return statistic < crit_5pct; }
  bool pass_1pct() const { return statistic < crit_1pct; }
};

// Two-sided KS statistic of a sorted sample against a fully specified CDF.
KsResult ks_statistic(const std::vector<double>& sorted_samples,
                      const std::function<double(double)>& cdf);

// Density-normalized histogram, value = count/(N*width) per bin with
// binomial standard errors; bin centers are geometric means for log
// bins, midpoints otherwise (controlled by `log_centers`).
Curve histogram_density(const std::vector<double>& samples, const std::vector<double>& bin_edges,
                        bool log_centers = false);

std::vector<double> log_bin_edges(double lo, double hi, int bins);

struct ComparisonReport {
  double sup_abs_err = 0.0;
  double l2_err = 0.0;  // root mean square over grid points
  std::size_t n_points = 0;
  std::size_t n_beyond_3se = 0;  // only counted when the empirical curve has SEs
};

// Requires identical grids (analytic curve evaluated at the empirical points).
ComparisonReport compare_curves(const Curve& empirical, const Curve& analytic);

std::string report_text(const ComparisonReport& r);

}  // namespace cmetas::stats
