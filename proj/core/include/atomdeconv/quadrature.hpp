#pragma once

#include <cmath>
#include <utility>

#include "atomdeconv/errors.hpp"

namespace atomdeconv {

namespace detail {

template <class F>
double adaptive_simpson_step(F& f, double a, double b, double fa, double fm, double fb,
                             double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  if (depth <= 0) {
    throw MaxDepthExceeded("adaptive Simpson did not converge on [" + std::to_string(a) +
                           ", " + std::to_string(b) + "] within the depth cap");
  }
  const double half_tol = 0.5 * tol;
  return adaptive_simpson_step(f, a, m, fa, flm, fm, left, half_tol, depth - 1) +
         adaptive_simpson_step(f, m, b, fm, frm, fb, right, half_tol, depth - 1);
}

}  // namespace detail

inline constexpr int kAdaptiveSimpsonMaxDepth = 40;
inline constexpr double kDefaultQuadratureTol = 1e-9;

// Adaptive Simpson integral of f over [a, b] with estimated absolute error <= tol.
// Throws MaxDepthExceeded if the recursion cap is reached before convergence.
template <class F>
double integrate(F&& f, double a, double b, double tol = kDefaultQuadratureTol) {
  if (!(a <= b)) {
    throw std::invalid_argument("integrate: requires a <= b");
  }
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::adaptive_simpson_step(f, a, b, fa, fm, fb, whole, tol,
                                       kAdaptiveSimpsonMaxDepth);
}

// Adaptive integral over [a, b] summed across equal segments. Forces probes
// into every segment, which keeps sharply localised integrands (densities over
// generous supports) from terminating the adaptive pass at zero.
template <class F>
double integrate_segmented(F&& f, double a, double b, double tol, int segments = 8) {
  if (segments < 1) throw std::invalid_argument("integrate_segmented: segments >= 1");
  double acc = 0.0;
  const double step = (b - a) / segments;
  for (int i = 0; i < segments; ++i) {
    const double lo = a + i * step;
    const double hi = i + 1 == segments ? b : lo + step;
    acc += integrate(f, lo, hi, tol / segments);
  }
  return acc;
}

// Composite Simpson rule with a fixed even number of intervals. Used on smooth
// integrands where the node count is chosen up front for throughput.
template <class F>
double integrate_fixed(F&& f, double a, double b, int intervals) {
  if (intervals < 2 || intervals % 2 != 0) {
    throw std::invalid_argument("integrate_fixed: intervals must be even and >= 2");
  }
  const double h = (b - a) / intervals;
  double odd = 0.0;
  double even = 0.0;
  for (int i = 1; i < intervals; i += 2) odd += f(a + i * h);
  for (int i = 2; i < intervals; i += 2) even += f(a + i * h);
  return (f(a) + f(b) + 4.0 * odd + 2.0 * even) * h / 3.0;
}

}  // namespace atomdeconv
