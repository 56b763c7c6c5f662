#include "cmetas/stats.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cmetas::stats {

KsResult ks_statistic(const std::vector<double>& sorted_samples,
                      const std::function<double(double)>& cdf) {
  if (sorted_samples.empty()) throw std::invalid_argument("ks_statistic: empty sample");
  if (!std::is_sorted(sorted_samples.begin(), sorted_samples.end()))
    throw std::invalid_argument("ks_statistic: samples must be sorted");
  const std::size_t n = sorted_samples.size();
  double d = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf(sorted_samples[i]);
    d = std::max(d, std::abs(f - static_cast<double>(i) / n));
    d = std::max(d, std::abs(static_cast<double>(i + 1) / n - f));
  }
  KsResult r;
  r.statistic = d;
  r.n = n;
  r.crit_5pct = 1.358 / std::sqrt(static_cast<double>(n));
  r.crit_1pct = 1.628 / std::sqrt(static_cast<double>(n));
  return r;
}

Curve histogram_density(const std::vector<double>& samples, const std::vector<double>& bin_edges,
                        bool log_centers) {
  if (bin_edges.size() < 2) throw std::invalid_argument("histogram_density: need >= 2 edges");
  for (std::size_t i = 1; i < bin_edges.size(); ++i)
    if (!(bin_edges[i] > bin_edges[i - 1]))
      throw std::invalid_argument("histogram_density: edges must be strictly increasing");

  const std::size_t nbins = bin_edges.size() - 1;
  std::vector<double> counts(nbins, 0.0);
  for (double x : samples) {
    if (x < bin_edges.front() || x >= bin_edges.back()) continue;
    const auto it = std::upper_bound(bin_edges.begin(), bin_edges.end(), x);
    counts[static_cast<std::size_t>(it - bin_edges.begin()) - 1] += 1.0;
  }

  const double n = static_cast<double>(samples.size());
  Curve c;
  c.grid.resize(nbins);
  c.values.resize(nbins);
  c.se.resize(nbins);
  for (std::size_t i = 0; i < nbins; ++i) {
    const double width = bin_edges[i + 1] - bin_edges[i];
    c.grid[i] = log_centers ? std::sqrt(bin_edges[i] * bin_edges[i + 1])
                            : 0.5 * (bin_edges[i] + bin_edges[i + 1]);
    const double phat = n > 0 ? counts[i] / n : 0.0;
    c.values[i] = n > 0 ? phat / width : 0.0;
    c.se[i] = n > 0 ? std::sqrt(phat * (1.0 - phat) / n) / width : 0.0;
  }
  c.label = "histogram density";
  return c;
}

std::vector<double> log_bin_edges(double lo, double hi, int bins) {
  if (!(lo > 0.0 && hi > lo && bins >= 1)) throw std::invalid_argument("log_bin_edges: bad range");
  std::vector<double> edges(bins + 1);
  const double r = std::log(hi / lo) / bins;
  for (int i = 0; i <= bins; ++i) edges[i] = lo * std::exp(r * i);
  edges.back() = hi;
  return edges;
}

ComparisonReport compare_curves(const Curve& empirical, const Curve& analytic) {
  empirical.validate();
  analytic.validate();
  if (empirical.grid.size() != analytic.grid.size())
    throw std::invalid_argument("compare_curves: grid size mismatch");
  for (std::size_t i = 0; i < empirical.grid.size(); ++i)
    if (empirical.grid[i] != analytic.grid[i])
      throw std::invalid_argument("compare_curves: grids differ");

  ComparisonReport r;
  r.n_points = empirical.grid.size();
  double ss = 0.0;
  for (std::size_t i = 0; i < r.n_points; ++i) {
    const double d = std::abs(empirical.values[i] - analytic.values[i]);
    r.sup_abs_err = std::max(r.sup_abs_err, d);
    ss += d * d;
    if (!empirical.se.empty() && d > 3.0 * empirical.se[i]) ++r.n_beyond_3se;
  }
  r.l2_err = r.n_points ? std::sqrt(ss / static_cast<double>(r.n_points)) : 0.0;
  return r;
}

std::string report_text(const ComparisonReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "sup_abs_err: " << r.sup_abs_err << "\n"
      << "l2_err: " << r.l2_err << "\n"
      << "n_points: " << r.n_points << "\n"
      << "n_beyond_3se: " << r.n_beyond_3se << "\n";
  return out.str();
}

}  // namespace cmetas::stats
