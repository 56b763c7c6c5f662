#pragma once

#include <string>
#include <vector>

#include "cmetas/params.hpp"

namespace cmetas::calibration {

struct CalibrationReport {
  double L_fit = 0.0;
  double objective_value = 0.0;  // L2 residual of I_B - n L p at L_fit
  double max_rel_err_IA = 0.0;   // invariance residual on the report grid
  std::string grid_spec;
};

// Magnitude integrals of the productivity-weighted conditional law.
// I_A integrates parents from m0 (computed by adaptive quadrature and
// expected to equal n p(m'')); I_B integrates parents from m and has
// the closed form p(m'') n [H + c1 (1 - 2 e^(-beta(m''-m0)))(H - H^2)].
double integral_IA(double mag_child, const ModelParams& p);
double integral_IB(double mag_child, const ModelParams& p);

// Least-squares constant for I_B ~ n L p on [m0, inf), solved by
// quadrature of the closed-form minimizer L = int I_B p / (n int p^2).
CalibrationReport fit_L(const ModelParams& p);

// max over the grid of |I_A(m'') / (n p(m'')) - 1|
double check_invariance(const ModelParams& p, const std::vector<double>& grid);

// 400 uniform points on [m0, m0 + 6]
std::vector<double> default_magnitude_grid(const ModelParams& p);

std::string report_text(const CalibrationReport& r);

}  // namespace cmetas::calibration
