#pragma once

#include <map>
#include <string>

namespace cmetas {

// Full parameter vector of the correlated-magnitude ETAS model.
// beta > a > 0 and beta*kappa/(beta-a) < 1 keep the branching process
// subcritical; 0 <= c1 < 1 keeps the conditional magnitude density
// nonnegative.
struct ModelParams {
  double beta = 2.0;     // Gutenberg-Richter exponent (1/magnitude unit)
  double a = 1.0;        // productivity exponent (1/magnitude unit)
  double kappa = 0.25;   // productivity multiplier, mean offspring at m' = m0
  double c = 1.0;        // Omori time constant (time units)
  double theta = 1.0;    // Omori exponent
  double c1 = 0.0;       // magnitude-correlation strength C1
  double m0 = 0.0;       // reference magnitude (minimum triggering magnitude)
  double m = 0.0;        // completeness magnitude, m >= m0
  double omega = 1.0;    // rate of spontaneous events with magnitude >= m0

  double branching_ratio() const { return beta * kappa / (beta - a); }

  // Throws std::invalid_argument describing the first violated constraint.
  void validate() const;

  // FNV-1a hash of the canonical parameter text, as a hex string.
  std::string fingerprint() const;
};

// Scalar constants derived from ModelParams and a calibrated L.
struct DerivedConstants {
  double n;            // branching ratio beta*kappa/(beta-a)
  double H;            // exp(-(beta-a)(m-m0))
  double Q;            // exp(-beta(m-m0)), observable fraction
  double L;            // constant of the I_B ~ n L p approximation
  double delta;        // n(1-L)
  double Delta;        // n/(1-n) - delta/(1-delta)
  double omega_tilde;  // omega(Q - n(H-L))
  double m_bar;        // ln2/(beta-a) + m0, sign change of q
};

// Requires 0 < L <= 1 and a subcritical parameter set.
DerivedConstants derived_constants(const ModelParams& p, double L);

// Flat "key = value" config file ('#' comments, blank lines allowed).
// Keys: beta, a, kappa, c, theta, c1, m0, m, omega. The pair
// b_value/alpha may replace beta/a (converted by ln 10). Environment
// variables CMETAS_<KEY> override file values.
ModelParams load_params(const std::string& path);
ModelParams params_from_map(std::map<std::string, double> kv);
std::map<std::string, double> read_key_value_file(const std::string& path);

}  // namespace cmetas
