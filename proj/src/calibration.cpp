#include "cmetas/calibration.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cmetas/laws.hpp"
#include "cmetas/quadrature.hpp"

namespace cmetas::calibration {

namespace {

double mag_upper(const ModelParams& p) { return p.m0 + 40.0 / p.beta; }

quad::Options tight_quad() {
  quad::Options o;
  o.abs_tol = 0.0;
  o.rel_tol = 1e-12;
  return o;
}

}  // namespace

double integral_IA(double mag_child, const ModelParams& p) {
  if (!(mag_child >= p.m0)) throw std::domain_error("integral_IA: magnitude below m0");
  const auto f = [&](double mp) {
    return laws::gr_pdf(mp, p) * laws::productivity(mp, p) * laws::cond_pdf(mag_child, mp, p);
  };
  return quad::integrate_or_throw(f, p.m0, mag_upper(p), tight_quad(),
                                  "integral_IA: quadrature did not converge");
}

double integral_IB(double mag_child, const ModelParams& p) {
  if (!(mag_child >= p.m0)) throw std::domain_error("integral_IB: magnitude below m0");
  const double n = p.branching_ratio();
  const double H = std::exp(-(p.beta - p.a) * (p.m - p.m0));
  const double g = 1.0 - 2.0 * std::exp(-p.beta * (mag_child - p.m0));
  return laws::gr_pdf(mag_child, p) * n * (H + p.c1 * g * (H - H * H));
}

CalibrationReport fit_L(const ModelParams& p) {
  p.validate();
  const double n = p.branching_ratio();
  const double hi = mag_upper(p);
  const double num = quad::integrate_or_throw(
      [&](double mc) { return integral_IB(mc, p) * laws::gr_pdf(mc, p); }, p.m0, hi, tight_quad());
  const double den = quad::integrate_or_throw(
      [&](double mc) {
        const double v = laws::gr_pdf(mc, p);
        return v * v;
      },
      p.m0, hi, tight_quad());

  CalibrationReport r;
  r.L_fit = num / (n * den);
  r.objective_value = quad::integrate_or_throw(
      [&](double mc) {
        const double d = integral_IB(mc, p) - n * r.L_fit * laws::gr_pdf(mc, p);
        return d * d;
      },
      p.m0, hi, {1e-14, 1e-10, 20000});
  const auto grid = default_magnitude_grid(p);
  r.max_rel_err_IA = check_invariance(p, grid);
  std::ostringstream spec;
  spec << grid.size() << " uniform points on [" << p.m0 << ", " << p.m0 + 6.0 << "]";
  r.grid_spec = spec.str();
  return r;
}

double check_invariance(const ModelParams& p, const std::vector<double>& grid) {
  p.validate();
  const double hi = mag_upper(p);
  const double n = p.branching_ratio();
  double worst = 0.0;
  for (double mc : grid) {
    if (!(mc >= p.m0 && mc <= hi))
      throw std::domain_error("check_invariance: grid point outside [m0, m0+40/beta]");
    const double rel = std::abs(integral_IA(mc, p) / (n * laws::gr_pdf(mc, p)) - 1.0);
    if (rel > worst) worst = rel;
  }
  return worst;
}

std::vector<double> default_magnitude_grid(const ModelParams& p) {
  const int n = 400;
  std::vector<double> grid(n);
  for (int i = 0; i < n; ++i) grid[i] = p.m0 + 6.0 * i / (n - 1);
  return grid;
}

std::string report_text(const CalibrationReport& r) {
  std::ostringstream out;
  out.precision(17);
  out << "L_fit: " << r.L_fit << "\n"
      << "objective_value: " << r.objective_value << "\n"
      << "max_rel_err_IA: " << r.max_rel_err_IA << "\n"
      << "grid_spec: " << r.grid_spec << "\n";
  return out.str();
}

}  // namespace cmetas::calibration
