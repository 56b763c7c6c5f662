#pragma once

#include <cmath>
#include <complex>
#include <queue>
#include <stdexcept>
#include <vector>

namespace cmetas::quad {

struct Options {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  int max_intervals = 20000;
};

template <class T>
struct Result {
  T value{};
  double error = 0.0;
  bool converged = false;
  long evaluations = 0;
};

namespace detail {

// Gauss-Kronrod 7-15 abscissae/weights on [-1,1]; the odd-indexed
// Kronrod points carry the embedded 7-point Gauss rule.
inline constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F, class T>
void gk15(const F& f, double lo, double hi, T& kronrod, double& err) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const T fc = f(center);
  T resg = kWg[3] * fc;
  T resk = kWgk[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T fsum = f(center - dx) + f(center + dx);
    resk += kWgk[j] * fsum;
    if (j % 2 == 1) resg += kWg[j / 2] * fsum;
  }
  kronrod = resk * half;
  err = std::abs((resk - resg) * half);
}

template <class T>
struct Piece {
  double lo, hi, err;
  T val;
  bool operator<(const Piece& o) const { return err < o.err; }
};

}  // namespace detail

// Globally adaptive Gauss-Kronrod integration on a finite interval.
// T may be double or std::complex<double>.
template <class T = double, class F>
Result<T> integrate(const F& f, double lo, double hi, const Options& opt = {}) {
  Result<T> out;
  if (!(hi > lo)) {
    out.converged = true;
    return out;
  }

  std::priority_queue<detail::Piece<T>> queue;
  detail::Piece<T> first{lo, hi, 0.0, T{}};
  detail::gk15(f, lo, hi, first.val, first.err);
  out.evaluations = 15;
  T total = first.val;
  double total_err = first.err;
  queue.push(first);
  int n_pieces = 1;

  while (total_err > std::max(opt.abs_tol, opt.rel_tol * std::abs(total)) &&
         n_pieces < opt.max_intervals) {
    const detail::Piece<T> p = queue.top();
    const double mid = 0.5 * (p.lo + p.hi);
    if (!(p.lo < mid && mid < p.hi)) break;  // exhausted double precision
    queue.pop();

    detail::Piece<T> a{p.lo, mid, 0.0, T{}}, b{mid, p.hi, 0.0, T{}};
    detail::gk15(f, a.lo, a.hi, a.val, a.err);
    detail::gk15(f, b.lo, b.hi, b.val, b.err);
    out.evaluations += 30;

    total += a.val + b.val - p.val;
    total_err += a.err + b.err - p.err;
    queue.push(a);
    queue.push(b);
    ++n_pieces;
  }

  // recompute the totals once to undo incremental-update drift
  total = T{};
  total_err = 0.0;
  while (!queue.empty()) {
    total += queue.top().val;
    total_err += queue.top().err;
    queue.pop();
  }

  out.value = total;
  out.error = total_err;
  out.converged = total_err <= std::max(opt.abs_tol, opt.rel_tol * std::abs(total));
  return out;
}

// Wrapper that throws when the error estimate did not converge.
template <class T = double, class F>
T integrate_or_throw(const F& f, double lo, double hi, const Options& opt = {},
                     const char* what = "quadrature did not converge") {
  auto r = integrate<T>(f, lo, hi, opt);
  if (!r.converged) throw std::runtime_error(what);
  return r.value;
}

}  // namespace cmetas::quad
