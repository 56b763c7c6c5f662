#include "cmetas/laws.hpp"

#include <cmath>
#include <stdexcept>

namespace cmetas::laws {

namespace {

void require_mag(double mag, const ModelParams& p, const char* who) {
  if (!(mag >= p.m0)) throw std::domain_error(std::string(who) + ": magnitude below m0");
}

void require_time(double t, const char* who) {
  if (!(t >= 0.0)) throw std::domain_error(std::string(who) + ": negative time");
}

}  // namespace

double gr_pdf(double mag, const ModelParams& p) {
  require_mag(mag, p, "gr_pdf");
  return p.beta * std::exp(-p.beta * (mag - p.m0));
}

double gr_cdf(double mag, const ModelParams& p) {
  require_mag(mag, p, "gr_cdf");
  return -std::expm1(-p.beta * (mag - p.m0));
}

double gr_sample(const ModelParams& p, double u) {
  return p.m0 - std::log1p(-u) / p.beta;
}

double omori_pdf(double t, const ModelParams& p) {
  require_time(t, "omori_pdf");
  return p.theta * std::pow(p.c / (p.c + t), p.theta) / (p.c + t);
}

double omori_sample(const ModelParams& p, double u) {
  // inverts b(t) = 1 - (c/(c+t))^theta
  return p.c * (std::pow(1.0 - u, -1.0 / p.theta) - 1.0);
}

double productivity(double mag, const ModelParams& p) {
  require_mag(mag, p, "productivity");
  return p.kappa * std::exp(p.a * (mag - p.m0));
}

double kernel_a(double t, const ModelParams& p) {
  require_time(t, "kernel_a");
  return std::pow(p.c / (p.c + t), p.theta);
}

double kernel_b(double t, const ModelParams& p) {
  require_time(t, "kernel_b");
  return 1.0 - kernel_a(t, p);
}

double kernel_A(double tau, const ModelParams& p) {
  require_time(tau, "kernel_A");
  const double eps = 1.0 - p.theta;
  const double x = std::log1p(tau / p.c);
  if (std::abs(eps) < 1e-6) {
    // series of c(e^(eps x) - 1)/eps around theta = 1
    return p.c * x * (1.0 + 0.5 * eps * x * (1.0 + eps * x / 3.0));
  }
  return (std::pow(p.c, p.theta) * std::pow(tau + p.c, eps) - p.c) / eps;
}

double q_fun(double mag, const ModelParams& p) {
  require_mag(mag, p, "q_fun");
  return p.c1 * (1.0 - 2.0 * std::exp(-(p.beta - p.a) * (mag - p.m0)));
}

double f_fun(double mag_parent, double mag_child, const ModelParams& p) {
  require_mag(mag_child, p, "f_fun");
  return q_fun(mag_parent, p) * (1.0 - 2.0 * std::exp(-p.beta * (mag_child - p.m0)));
}

double cond_pdf(double mag_child, double mag_parent, const ModelParams& p) {
  return gr_pdf(mag_child, p) * (1.0 + f_fun(mag_parent, mag_child, p));
}

double cond_cdf(double M, double mag_parent, const ModelParams& p) {
  require_mag(M, p, "cond_cdf");
  const double q = q_fun(mag_parent, p);
  const double u = std::exp(-p.beta * (M - p.m0));
  return (1.0 - u) * (1.0 - q * u);
}

double cond_sample(double mag_parent, const ModelParams& p, double u) {
  const double q = q_fun(mag_parent, p);
  // smaller root of q v^2 - (1+q) v + (1-u) = 0 in the rationalized form,
  // which stays finite as q -> 0; discriminant >= (1-|q|)^2 > 0
  const double disc = (1.0 + q) * (1.0 + q) - 4.0 * q * (1.0 - u);
  const double v = 2.0 * (1.0 - u) / (1.0 + q + std::sqrt(disc));
  return p.m0 - std::log(v) / p.beta;
}

}  // namespace cmetas::laws
