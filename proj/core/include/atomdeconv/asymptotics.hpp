#pragma once

#include "atomdeconv/kernels.hpp"
#include "atomdeconv/models.hpp"

namespace atomdeconv {

// Logarithmic bandwidth schedule h = sigma ((1 + eta_n) log n)^(-1/2),
// g = sigma ((1 + delta_n) log n)^(-1/2) with eta_n > delta_n > 0, plus the
// truncation level eps_n for the atom estimate.
struct BandwidthSchedule {
  std::size_t n = 0;
  double sigma = 0.0;
  double eta_n = 0.0;
  double delta_n = 0.0;
  double h = 0.0;
  double g = 0.0;
  double eps_n = 0.0;
};

// The reference schedule eta_n = 2 logloglog(n)/log(n),
// delta_n = logloglog(n)/log(n), eps_n = 1/logloglog(n) clamped to (0, 0.99].
// Natural logarithms; requires n >= 16 so that logloglog(n) > 0.
BandwidthSchedule default_schedule(std::size_t n, double sigma);

// Exact damped transform integral I(h) = int_0^1 phi(s) exp(sigma^2 s^2 /
// (2 h^2)) ds. Throws ExponentOverflow when the damping exponent exceeds 700.
double damped_ft_integral(const Kernel& kernel, double h, double sigma);

// Small-bandwidth limit of int_0^1 (1-s)^delta phi(s) exp(sigma^2 s^2/(2h^2)) ds:
//   edge_const * Gamma(1 + alpha + delta) * sigma^(-2(1+alpha+delta))
//     * h^(2(1+alpha+delta)) * exp(sigma^2 / (2 h^2)).
double damped_ft_integral_limit(const Kernel& kernel, double h, double sigma,
                                double delta = 0.0);

// Ratio of the exact integral (delta = 0) to its limit. Evaluated with the
// exponential prefactor cancelled analytically, so it stays finite even where
// the two sides individually overflow.
double damped_ft_integral_ratio(const Kernel& kernel, double h, double sigma);

// Limit standard deviation of the atom-mass estimate:
//   g^(2+2alpha) e^(sigma^2/(2g^2)) / sqrt(n) * C Gamma(1+alpha)
//     sigma^(-2(1+alpha)) / sqrt(2),
// i.e. the limit integral divided by sqrt(2 n).
double atom_sd_asymptotic(double g, std::size_t n, double sigma, const Kernel& kernel_k);

// Finite-bandwidth correction: the exact integral in place of its limit,
// I(g) / sqrt(2 n). The usable predictor at practical bandwidths.
double atom_sd_corrected(double g, std::size_t n, double sigma, const Kernel& kernel_k);

// Limit standard deviation of the density estimate at a point (independent of
// the point and of the target density):
//   h^(1+2alpha) e^(sigma^2/(2h^2)) / sqrt(n) * A Gamma(1+alpha)
//     sigma^(-2(1+alpha)) / ((1-p) pi sqrt(2)).
double density_sd_asymptotic(double h, std::size_t n, double sigma, double p,
                             const Kernel& kernel_w);

// Exact mean of the classical (uncorrected) deconvolution estimate under the
// model: p w_h(x) + (1 - p) (f * w_h)(x), by quadrature over the model's
// effective support.
double expected_classical(const ModelSpec& model, double x, double h,
                          const Kernel& kernel_w);

// Bias of the atom-corrected density estimate,
// (1/2pi) int e^{-itx} cf_f(t) (phi_w(h t) - 1) dt, by Fourier quadrature.
double density_bias(const ModelSpec& model, double x, double h, const Kernel& kernel_w);

}  // namespace atomdeconv
