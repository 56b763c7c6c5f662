#include "cmetas/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cmetas/laws.hpp"
#include "cmetas/quadrature.hpp"

namespace cmetas::analytics {

namespace {

constexpr double kEnvelopeTol = 1e-10;
constexpr double kTailTol = 1e-3;

void require_subcritical(double n) {
  if (!(n < 1.0)) throw std::domain_error("analytics: branching ratio must be < 1");
}

// Continued fraction h with Gamma(a,z) = e^(-z) z^a h (modified Lentz).
bool gamma_cf(double a, Complex z, Complex& h_out) {
  constexpr double tiny = 1e-300;
  Complex b = z + (1.0 - a);
  Complex c = 1.0 / tiny;
  Complex d = 1.0 / b;
  Complex h = d;
  for (int i = 1; i <= 200000; ++i) {
    const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const Complex del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) {
      h_out = h;
      return true;
    }
  }
  return false;
}

// J(a,z) = int_0^inf e^(-x) (z+x)^(a-1) dx along the horizontal ray,
// so that Gamma(a,z) = e^(-z) J(a,z). Non-oscillatory for Re(z) > 0.
Complex ray_integral(double a, Complex z) {
  quad::Options opt;
  opt.abs_tol = 0.0;
  opt.rel_tol = 1e-13;
  const auto f = [&](double x) { return std::exp(-x) * std::pow(z + x, a - 1.0); };
  // e^(-45) ~ 3e-20 bounds the discarded tail relative to J ~ |z|^(a-1)
  return quad::integrate_or_throw<Complex>(f, 0.0, 45.0, opt,
                                           "upper_gamma_complex: ray quadrature failed");
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& y, std::size_t upto) {
  double s = 0.0;
  for (std::size_t i = 1; i <= upto; ++i) s += 0.5 * (y[i] + y[i - 1]) * (x[i] - x[i - 1]);
  return s;
}

}  // namespace

double p_zero_m0(double tau, const ModelParams& p) {
  if (!(tau >= 0.0)) throw std::domain_error("p_zero_m0: negative tau");
  const double n = p.branching_ratio();
  require_subcritical(n);
  return std::exp(-p.omega * tau - n * p.omega / (1.0 - n) * laws::kernel_A(tau, p));
}

double interevent_density_m0(double tau, const ModelParams& p, double lambda) {
  if (!(lambda > 0.0)) throw std::domain_error("interevent_density_m0: lambda must be positive");
  const double n = p.branching_ratio();
  require_subcritical(n);
  const double rate = n * p.omega / (1.0 - n);
  const double drift = p.omega + rate * laws::kernel_a(tau, p);
  return p_zero_m0(tau, p) * (drift * drift + rate * laws::omori_pdf(tau, p)) / lambda;
}

double l_zero_general(double tau, const ModelParams& p, const DerivedConstants& k) {
  if (!(tau >= 0.0)) throw std::domain_error("l_zero_general: negative tau");
  require_subcritical(k.n);
  if (!(k.delta < 1.0)) throw std::domain_error("l_zero_general: delta must be < 1");
  const double a_t = laws::kernel_a(tau, p);
  const double linear = tau * k.omega_tilde + p.omega * k.n * (k.H - k.L) * laws::kernel_A(tau, p);
  const double ratio =
      (1.0 - k.n + k.n * a_t) / ((1.0 - k.n) * (1.0 - k.delta + k.delta * a_t));
  return linear * ratio;
}

double p_zero_general(double tau, const ModelParams& p, const DerivedConstants& k) {
  return std::exp(-l_zero_general(tau, p, k));
}

double interevent_density_general(double tau, const ModelParams& p, const DerivedConstants& k,
                                  double lambda) {
  if (!(tau >= 0.0)) throw std::domain_error("interevent_density_general: negative tau");
  if (!(lambda > 0.0))
    throw std::domain_error("interevent_density_general: lambda must be positive");
  require_subcritical(k.n);
  if (!(k.delta < 1.0)) throw std::domain_error("interevent_density_general: delta must be < 1");

  const double a_t = laws::kernel_a(tau, p);
  const double A_t = laws::kernel_A(tau, p);
  const double phi = laws::omori_pdf(tau, p);
  const double one_minus_n = 1.0 - k.n;
  const double D = 1.0 - k.delta + k.delta * a_t;

  // quotient (1-n+na)/((1-n)D) and its first two tau-derivatives
  const double R = (1.0 - k.n + k.n * a_t) / (one_minus_n * D);
  const double R1 = phi * (k.delta - k.n) / (one_minus_n * D * D);
  const double R2 = (k.delta - k.n) * phi *
                    ((p.theta + 1.0) * (k.delta - 1.0) + k.delta * a_t * (p.theta - 1.0)) /
                    (one_minus_n * (tau + p.c) * D * D * D);

  const double w = p.omega * k.n * (k.H - k.L);
  const double u = tau * k.omega_tilde + w * A_t;  // exponent numerator
  const double u1 = k.omega_tilde + w * a_t;
  const double u2 = -w * phi;

  const double first = u1 * R + u * R1;
  const double second = u2 * R + 2.0 * u1 * R1 + u * R2;
  return std::exp(-u * R) * (first * first - second) / lambda;
}

Complex upper_gamma_complex(double order, Complex z) {
  if (!(z.real() > 0.0)) throw std::domain_error("upper_gamma_complex: requires Re(z) > 0");
  Complex h;
  if (gamma_cf(order, z, h)) return std::exp(-z + order * std::log(z)) * h;
  return upper_gamma_quadrature(order, z);
}

Complex upper_gamma_quadrature(double order, Complex z) {
  if (!(z.real() > 0.0)) throw std::domain_error("upper_gamma_quadrature: requires Re(z) > 0");
  return std::exp(-z) * ray_integral(order, z);
}

Complex laplace_phi(Complex s, const ModelParams& p) {
  if (!(s.real() > 0.0)) throw std::domain_error("laplace_phi: requires Re(s) > 0");
  const Complex z = s * p.c;
  Complex h;
  if (gamma_cf(-p.theta, z, h)) return p.theta * h;
  // e^z Gamma(-theta, z) = J(-theta, z); the z^theta factor cancels
  return p.theta * std::pow(z, p.theta) * ray_integral(-p.theta, z);
}

Complex laplace_nbar_minus(Complex s, const ModelParams& p, const DerivedConstants& k) {
  const Complex phi_hat = laplace_phi(s, p);
  return (k.Q - k.n * (k.H - k.L) * phi_hat) / (s * (1.0 - k.delta * phi_hat));
}

BromwichResult invert_nbar_minus(const std::vector<double>& t_grid, const ModelParams& p,
                                 const DerivedConstants& k, double sigma, double xi_max) {
  if (t_grid.empty()) throw std::invalid_argument("invert_nbar_minus: empty grid");
  for (double t : t_grid)
    if (!(t > 0.0)) throw std::invalid_argument("invert_nbar_minus: grid must be positive");
  require_subcritical(k.n);

  const double t_max = *std::max_element(t_grid.begin(), t_grid.end());
  if (!(sigma > 0.0)) sigma = 1.0 / t_max;

  // graded panels: resolve the sigma-scale structure near xi = 0, then
  // widths capped so 15-node Gauss-Legendre keeps >= 10 nodes per cos period
  const double w_tail = 1.5 * 2.0 * M_PI / t_max;
  double width = std::min(sigma / 2.0, w_tail);

  // 15-point Gauss-Legendre nodes/weights on [-1,1] (symmetric halves)
  static constexpr double gl_x[8] = {0.000000000000000, 0.201194093997435, 0.394151347077563,
                                     0.570972172608539, 0.724417731360170, 0.848206583410427,
                                     0.937273392400706, 0.987992518020485};
  static constexpr double gl_w[8] = {0.202578241925561, 0.198431485327112, 0.186161000015562,
                                     0.166269205816994, 0.139570677926154, 0.107159220467172,
                                     0.070366047488108, 0.030753241996117};

  std::vector<double> acc(t_grid.size(), 0.0);
  double lo = 0.0;
  double envelope = 0.0;
  int below_count = 0;
  const int max_panels = 400000;
  int panel = 0;
  for (; panel < max_panels; ++panel) {
    const double hi = lo + width;
    const double center = 0.5 * (lo + hi);
    const double half = 0.5 * width;
    envelope = 0.0;
    const auto add_node = [&](double xi, double wq) {
      const double re = laplace_nbar_minus(Complex(sigma, xi), p, k).real();
      envelope = std::max(envelope, std::abs(re));
      for (std::size_t i = 0; i < t_grid.size(); ++i)
        acc[i] += wq * re * std::cos(xi * t_grid[i]);
    };
    add_node(center, gl_w[0] * half);
    for (int j = 1; j < 8; ++j) {
      add_node(center - half * gl_x[j], gl_w[j] * half);
      add_node(center + half * gl_x[j], gl_w[j] * half);
    }
    lo = hi;
    width = std::min(width * 1.15, w_tail);
    if (xi_max > 0.0 && lo >= xi_max) break;
    if (xi_max <= 0.0) {
      below_count = (envelope < kEnvelopeTol) ? below_count + 1 : 0;
      if (below_count >= 2) break;
    }
  }

  BromwichResult out;
  out.sigma = sigma;
  out.xi_max = lo;
  const double prefactor_max = 2.0 * std::exp(sigma * t_max) / M_PI;
  out.tail_bound = prefactor_max * envelope * lo;
  if (panel >= max_panels || out.tail_bound > kTailTol)
    throw std::runtime_error("invert_nbar_minus: contour truncated before tail bound met");

  out.curve.grid = t_grid;
  out.curve.values.resize(t_grid.size());
  for (std::size_t i = 0; i < t_grid.size(); ++i)
    out.curve.values[i] = 2.0 * std::exp(sigma * t_grid[i]) / M_PI * acc[i];
  out.curve.label = "nbar_minus (bromwich)";
  return out;
}

namespace {

std::vector<double> volterra_solve(const ModelParams& p, const DerivedConstants& k,
                                   double h, std::size_t npts) {
  std::vector<double> phi(npts), rhs(npts), nbar(npts);
  for (std::size_t i = 0; i < npts; ++i) {
    const double t = h * static_cast<double>(i);
    phi[i] = laws::omori_pdf(t, p);
    rhs[i] = k.Q - k.n * (k.H - k.L) * laws::kernel_b(t, p);
  }
  nbar[0] = rhs[0];
  const double pivot = 1.0 - 0.5 * k.delta * h * phi[0];
  for (std::size_t i = 1; i < npts; ++i) {
    double conv = 0.5 * phi[i] * nbar[0];
    for (std::size_t j = 1; j < i; ++j) conv += phi[i - j] * nbar[j];
    nbar[i] = (rhs[i] + k.delta * h * conv) / pivot;
  }
  return nbar;
}

}  // namespace

VolterraResult volterra_nbar_minus(const std::vector<double>& t_grid, const ModelParams& p,
                                   const DerivedConstants& k) {
  if (t_grid.size() < 2) throw std::invalid_argument("volterra_nbar_minus: need >= 2 points");
  if (t_grid.front() != 0.0)
    throw std::invalid_argument("volterra_nbar_minus: grid must start at 0");
  const double h = t_grid[1] - t_grid[0];
  for (std::size_t i = 1; i < t_grid.size(); ++i)
    if (std::abs(t_grid[i] - t_grid[i - 1] - h) > 1e-9 * h)
      throw std::invalid_argument("volterra_nbar_minus: grid must be uniform");
  require_subcritical(k.n);
  if (!(k.delta < 1.0)) throw std::domain_error("volterra_nbar_minus: delta must be < 1");

  const std::size_t n = t_grid.size();
  const auto coarse = volterra_solve(p, k, h, n);
  const auto fine = volterra_solve(p, k, 0.5 * h, 2 * n - 1);
  double delta_max = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    delta_max = std::max(delta_max, std::abs(coarse[i] - fine[2 * i]));

  VolterraResult out;
  out.curve.grid = t_grid;
  out.curve.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.curve.values[i] = fine[2 * i];
  out.curve.label = "nbar_minus (volterra)";
  out.refinement_delta = delta_max;
  out.refined_ok = delta_max < 1e-5;
  return out;
}

double check_integral_identity(double tau, const ModelParams& p, const DerivedConstants& k,
                               const Curve& nbar) {
  if (!(k.delta > 0.0))
    throw std::domain_error("check_integral_identity: identity degenerate at delta = 0");
  nbar.validate();
  if (nbar.grid.empty() || nbar.grid.front() != 0.0)
    throw std::invalid_argument("check_integral_identity: curve must start at 0");
  if (tau == 0.0) return 0.0;

  // tau must sit on the curve grid
  std::size_t idx = nbar.grid.size();
  for (std::size_t i = 0; i < nbar.grid.size(); ++i)
    if (std::abs(nbar.grid[i] - tau) <= 1e-12 * std::max(1.0, tau)) idx = i;
  if (idx == nbar.grid.size())
    throw std::invalid_argument("check_integral_identity: tau not on the curve grid");

  std::vector<double> conv_integrand(idx + 1);
  for (std::size_t i = 0; i <= idx; ++i)
    conv_integrand[i] = laws::kernel_a(tau - nbar.grid[i], p) * nbar.values[i];
  const double lhs = trapezoid(nbar.grid, conv_integrand, idx);
  const double integral = trapezoid(nbar.grid, nbar.values, idx);
  const double rhs = tau / k.delta * (k.Q - k.n * (k.H - k.L)) +
                     k.n * (k.H - k.L) / k.delta * laws::kernel_A(tau, p) +
                     (1.0 - 1.0 / k.delta) * integral;
  return std::abs(lhs - rhs);
}

Curve interevent_density_bromwich(const std::vector<double>& tau_grid, const ModelParams& p,
                                  const DerivedConstants& k, double lambda) {
  if (tau_grid.empty()) throw std::invalid_argument("interevent_density_bromwich: empty grid");
  if (!(lambda > 0.0))
    throw std::domain_error("interevent_density_bromwich: lambda must be positive");
  if (!(k.delta > 0.0))
    throw std::domain_error("interevent_density_bromwich: requires delta > 0 (use the m0 form)");
  for (double t : tau_grid)
    if (!(t > 0.0)) throw std::invalid_argument("interevent_density_bromwich: grid must be > 0");

  const double tau_max = *std::max_element(tau_grid.begin(), tau_grid.end());
  const std::size_t n_fine = 1200;
  const double h = tau_max * 1.02 / static_cast<double>(n_fine - 3);
  std::vector<double> fine(n_fine);
  for (std::size_t i = 0; i < n_fine; ++i) fine[i] = h * static_cast<double>(i + 1);

  const auto inv = invert_nbar_minus(fine, p, k);

  // cumulative trapezoid of Nbar_-, using the exact value Q at t = 0
  std::vector<double> cum(n_fine);
  cum[0] = 0.5 * (k.Q + inv.curve.values[0]) * fine[0];
  for (std::size_t i = 1; i < n_fine; ++i)
    cum[i] = cum[i - 1] + 0.5 * (inv.curve.values[i] + inv.curve.values[i - 1]) * h;

  // omega L(0;tau) from the cumulative integral (exact identity given Nbar_-)
  const double coef_int = (k.delta - 1.0) / k.delta * p.omega * k.Delta;
  const double coef_tau = k.n / (1.0 - k.n) * k.omega_tilde / k.delta;
  const double coef_A = p.omega * k.n * k.n * (k.H - k.L) / (k.delta * (1.0 - k.n));
  std::vector<double> pz(n_fine);
  for (std::size_t i = 0; i < n_fine; ++i) {
    const double wl =
        coef_int * cum[i] + coef_tau * fine[i] + coef_A * laws::kernel_A(fine[i], p);
    pz[i] = std::exp(-wl);
  }

  // central second differences, then linear interpolation onto tau_grid
  Curve out;
  out.grid = tau_grid;
  out.values.resize(tau_grid.size());
  out.label = "interevent density (bromwich route)";
  for (std::size_t j = 0; j < tau_grid.size(); ++j) {
    const double tau = tau_grid[j];
    const double pos = tau / h - 1.0;  // fine[i] = (i+1) h
    std::size_t i = static_cast<std::size_t>(std::max(1.0, std::min(pos, double(n_fine - 3))));
    const auto second = [&](std::size_t q) {
      return (pz[q + 1] - 2.0 * pz[q] + pz[q - 1]) / (h * h) / lambda;
    };
    const double x0 = fine[i], x1 = fine[i + 1];
    const double w = std::min(1.0, std::max(0.0, (tau - x0) / (x1 - x0)));
    out.values[j] = (1.0 - w) * second(i) + w * second(i + 1);
  }
  return out;
}

}  // namespace cmetas::analytics
