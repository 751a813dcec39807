#include "atomdeconv/asymptotics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "atomdeconv/errors.hpp"
#include "atomdeconv/quadrature.hpp"

namespace atomdeconv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMaxDampingExponent = 700.0;

double damping_exponent_or_throw(double sigma, double bandwidth) {
  const double exponent = 0.5 * sigma * sigma / (bandwidth * bandwidth);
  if (exponent > kMaxDampingExponent) throw ExponentOverflow(exponent);
  return exponent;
}

// int_0^1 phi(s) exp(E (s^2 - 1)) ds: the damped transform integral with the
// dominant factor e^E taken out, so the integrand stays within [0, max phi].
// For large E the mass sits in a boundary layer of width ~1/(2E) at s = 1;
// substituting s = 1 - tau/(2E) resolves it at any exponent, where a plain
// adaptive pass would probe only numerically-zero points and quit early.
double scaled_damped_integral(const Kernel& kernel, double exponent) {
  if (exponent <= 1.0) {
    return integrate(
        [&](double s) { return kernel.ft(s) * std::exp(exponent * (s * s - 1.0)); }, 0.0,
        1.0, 1e-13);
  }
  const double scale = 2.0 * exponent;
  const double tau_max = std::min(scale, 60.0);  // e^{-0.85 tau} tail below 1e-22
  auto integrand = [&](double tau) {
    const double s = 1.0 - tau / scale;
    return kernel.ft(s) * std::exp(-tau * (1.0 - tau / (2.0 * scale))) / scale;
  };
  return integrate_segmented(integrand, 0.0, tau_max, 1e-12 / scale, 8);
}

// Limit of that scaled integral: edge_const Gamma(1+a+d) sigma^(-2(1+a+d))
// h^(2(1+a+d)); multiplying by e^E restores the full limit.
double scaled_limit(const Kernel& kernel, double h, double sigma, double delta) {
  const double order = 1.0 + kernel.alpha() + delta;
  return kernel.edge_const() * std::tgamma(order) *
         std::pow(h * h / (sigma * sigma), order);
}

}  // namespace

BandwidthSchedule default_schedule(std::size_t n, double sigma) {
  if (n < 16) {
    throw std::domain_error("default_schedule: n must be >= 16 so logloglog(n) > 0");
  }
  if (!(sigma > 0.0)) {
    throw std::invalid_argument("default_schedule: sigma must be positive");
  }
  const double log_n = std::log(static_cast<double>(n));
  const double lll = std::log(std::log(log_n));
  BandwidthSchedule s;
  s.n = n;
  s.sigma = sigma;
  s.eta_n = 2.0 * lll / log_n;
  s.delta_n = lll / log_n;
  s.h = sigma / std::sqrt((1.0 + s.eta_n) * log_n);
  s.g = sigma / std::sqrt((1.0 + s.delta_n) * log_n);
  s.eps_n = std::min(1.0 / lll, 0.99);
  return s;
}

double damped_ft_integral(const Kernel& kernel, double h, double sigma) {
  const double exponent = damping_exponent_or_throw(sigma, h);
  return std::exp(exponent) * scaled_damped_integral(kernel, exponent);
}

double damped_ft_integral_limit(const Kernel& kernel, double h, double sigma,
                                double delta) {
  if (delta < 0.0) {
    throw std::invalid_argument("damped_ft_integral_limit: delta must be >= 0");
  }
  const double exponent = damping_exponent_or_throw(sigma, h);
  return std::exp(exponent) * scaled_limit(kernel, h, sigma, delta);
}

double damped_ft_integral_ratio(const Kernel& kernel, double h, double sigma) {
  const double exponent = 0.5 * sigma * sigma / (h * h);
  return scaled_damped_integral(kernel, exponent) / scaled_limit(kernel, h, sigma, 0.0);
}

double atom_sd_asymptotic(double g, std::size_t n, double sigma, const Kernel& kernel_k) {
  return damped_ft_integral_limit(kernel_k, g, sigma, 0.0) /
         std::sqrt(2.0 * static_cast<double>(n));
}

double atom_sd_corrected(double g, std::size_t n, double sigma, const Kernel& kernel_k) {
  return damped_ft_integral(kernel_k, g, sigma) / std::sqrt(2.0 * static_cast<double>(n));
}

double density_sd_asymptotic(double h, std::size_t n, double sigma, double p,
                             const Kernel& kernel_w) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("density_sd_asymptotic: p must lie in [0, 1)");
  }
  return damped_ft_integral_limit(kernel_w, h, sigma, 0.0) /
         (h * (1.0 - p) * kPi * std::sqrt(2.0 * static_cast<double>(n)));
}

double expected_classical(const ModelSpec& model, double x, double h,
                          const Kernel& kernel_w) {
  if (!(h > 0.0)) throw std::invalid_argument("expected_classical: h must be positive");
  const double w_at_x = kernel_w.closed_form(x / h) / h;
  const auto [lo, hi] = model.support_hint();
  const double convolution = integrate_segmented(
      [&](double v) { return model.density(v) * kernel_w.closed_form((x - v) / h) / h; },
      lo, hi, 1e-10, 16);
  return model.p() * w_at_x + (1.0 - model.p()) * convolution;
}

double density_bias(const ModelSpec& model, double x, double h, const Kernel& kernel_w) {
  if (!(h > 0.0)) throw std::invalid_argument("density_bias: h must be positive");
  // (1/pi) int_0^inf Re(e^{-itx} cf(t)) (phi_w(h t) - 1) dt; the weight factor
  // is exactly -1 beyond t = 1/h and |cf| is negligible beyond the cutoff.
  const double cutoff = model.cf_cutoff(1e-15);
  auto re_part = [&](double t) {
    return (model.cf(t) * std::exp(std::complex<double>(0.0, -t * x))).real();
  };
  const double inner = integrate(
      [&](double t) { return re_part(t) * (kernel_w.ft(h * t) - 1.0); }, 0.0,
      std::min(1.0 / h, cutoff), 1e-11);
  // beyond 1/h in doubling segments: heavy-tailed cf's (gamma) span decades
  double outer = 0.0;
  double lo = 1.0 / h;
  while (lo < cutoff) {
    const double hi = std::min(2.0 * lo, cutoff);
    outer += integrate([&](double t) { return -re_part(t); }, lo, hi, 1e-12);
    lo = hi;
  }
  return (inner + outer) / kPi;
}

}  // namespace atomdeconv
