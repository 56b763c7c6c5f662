#pragma once

#include <complex>
#include <vector>

#include "cmetas/curve.hpp"
#include "cmetas/params.hpp"

namespace cmetas::analytics {

using Complex = std::complex<double>;

// ---- m = m0 closed forms (ignore p.m) ----

// P(tau) = exp(-omega tau - n omega A(tau)/(1-n))
double p_zero_m0(double tau, const ModelParams& p);
// Palm density, (1/lambda) d^2 P / d tau^2 in closed form.
double interevent_density_m0(double tau, const ModelParams& p, double lambda);

// ---- general case m >= m0, small-tau approximation ----

// omega L(0;tau); regular at delta = 0.
double l_zero_general(double tau, const ModelParams& p, const DerivedConstants& k);
double p_zero_general(double tau, const ModelParams& p, const DerivedConstants& k);
double interevent_density_general(double tau, const ModelParams& p, const DerivedConstants& k,
                                  double lambda);

// ---- Laplace-domain machinery ----

// Upper incomplete gamma for real order and Re(z) > 0, evaluated by a
// modified Lentz continued fraction with an adaptive-quadrature
// fallback along the horizontal ray from z.
Complex upper_gamma_complex(double order, Complex z);
// Same integral as upper_gamma_complex but computed by quadrature only;
// kept public as the independent cross-check route.
Complex upper_gamma_quadrature(double order, Complex z);

// Laplace transform of the Omori law: theta (sc)^theta e^(sc) Gamma(-theta, sc).
Complex laplace_phi(Complex s, const ModelParams& p);

// Transform of Nbar_-: [Q - n(H-L) phi^(s)] / (s [1 - delta phi^(s)]).
Complex laplace_nbar_minus(Complex s, const ModelParams& p, const DerivedConstants& k);

struct BromwichResult {
  Curve curve;
  double sigma = 0.0;
  double xi_max = 0.0;
  double tail_bound = 0.0;  // estimated discarded-tail contribution
};

// Cosine-form Bromwich inversion of laplace_nbar_minus on t_grid > 0.
// sigma <= 0 selects 1/max(t_grid); xi_max <= 0 extends the contour
// until the integrand envelope falls below 1e-10. Throws if the tail
// bound at a forced xi_max exceeds 1e-3.
BromwichResult invert_nbar_minus(const std::vector<double>& t_grid, const ModelParams& p,
                                 const DerivedConstants& k, double sigma = 0.0,
                                 double xi_max = 0.0);

struct VolterraResult {
  Curve curve;
  double refinement_delta = 0.0;  // max change under step halving
  bool refined_ok = true;         // refinement_delta < 1e-5
};

// Trapezoidal time-stepping solution of
//   Nbar_-(t) = Q - n b(t)(H-L) + delta (Phi ox Nbar_-)(t)
// on a uniform grid starting at 0; the independent oracle for the
// Bromwich route.
VolterraResult volterra_nbar_minus(const std::vector<double>& t_grid, const ModelParams& p,
                                   const DerivedConstants& k);

// Absolute residual of the convolution identity relating
// (a ox Nbar_-)(tau) to int_0^tau Nbar_-; requires delta > 0 and tau on
// the curve grid.
double check_integral_identity(double tau, const ModelParams& p, const DerivedConstants& k,
                               const Curve& nbar);

// Secondary density evaluator: Bromwich-inverted Nbar_-, cumulative
// integral, exact exponent identity, then numerical second differences.
// Requires delta > 0.
Curve interevent_density_bromwich(const std::vector<double>& tau_grid, const ModelParams& p,
                                  const DerivedConstants& k, double lambda);

}  // namespace cmetas::analytics
