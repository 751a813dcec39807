#include "atomdeconv/estimators.hpp"

#include <cmath>
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

// Mean cosine term (1/n) sum_j cos(s (X_j - x) / b).
double mean_cosine(const Sample& sample, double x, double b, double s) {
  double acc = 0.0;
  const double scale = s / b;
  for (double v : sample.values) acc += std::cos(scale * (v - x));
  return acc / static_cast<double>(sample.size());
}

}  // namespace

EstimatorConfig::EstimatorConfig(double h_in, double g_in, double eps_in, Kernel kw,
                                 Kernel kk, std::size_t grid_points, double grid_coverage)
    : h(h_in),
      g(g_in),
      eps_n(eps_in),
      kernel_w(std::move(kw)),
      kernel_k(std::move(kk)),
      grid(GridConfig::for_bandwidth(h_in, grid_points, grid_coverage)) {
  if (!(h > 0.0) || !(g > 0.0)) {
    throw std::invalid_argument("EstimatorConfig: bandwidths must be positive");
  }
  if (!(eps_n > 0.0 && eps_n < 1.0)) {
    throw std::invalid_argument("EstimatorConfig: eps_n must lie in (0, 1)");
  }
  // structural checks on the atom kernel: symmetric transform integrating to 2
  if (std::abs(kernel_k.ft_integral() - 2.0) > 1e-6) {
    throw std::invalid_argument("EstimatorConfig: kernel_k transform must integrate to 2");
  }
  if (std::abs(kernel_k.ft(0.3) - kernel_k.ft(-0.3)) > 1e-12) {
    throw std::invalid_argument("EstimatorConfig: kernel_k transform must be symmetric");
  }
}

double deconv_density(const Sample& sample, double x, double h, const Kernel& kernel_w,
                      double tol) {
  if (!(h > 0.0)) throw std::invalid_argument("deconv_density: h must be positive");
  const double exponent = damping_exponent_or_throw(sample.sigma, h);
  const double integral = integrate(
      [&](double s) {
        return mean_cosine(sample, x, h, s) * kernel_w.ft(s) * std::exp(exponent * s * s);
      },
      0.0, 1.0, tol * std::max(1.0, std::exp(exponent)));
  return integral / (kPi * h);
}

double deconv_density_fixed(const Sample& sample, double x, double h,
                            const Kernel& kernel_w, int intervals) {
  if (!(h > 0.0)) throw std::invalid_argument("deconv_density_fixed: h must be positive");
  if (intervals < 2 || intervals % 2 != 0) {
    throw std::invalid_argument("deconv_density_fixed: intervals must be even and >= 2");
  }
  const double exponent = damping_exponent_or_throw(sample.sigma, h);

  // Composite Simpson over s = k/intervals. The cosine sums are accumulated
  // per observation with the Chebyshev-style recurrence
  // cos((k+1)d) = 2 cos(d) cos(kd) - cos((k-1)d), one multiply-add per node.
  const int nodes = intervals + 1;
  std::vector<double> cos_sum(nodes, 0.0);
  const double ds = 1.0 / intervals;
  for (double v : sample.values) {
    const double d = ds * (v - x) / h;
    const double c1 = std::cos(d);
    double prev = 1.0;
    double cur = c1;
    cos_sum[0] += 1.0;
    for (int k = 1; k < nodes; ++k) {
      cos_sum[k] += cur;
      const double next = 2.0 * c1 * cur - prev;
      prev = cur;
      cur = next;
    }
  }

  const double inv_n = 1.0 / static_cast<double>(sample.size());
  auto integrand_at = [&](int k) {
    const double s = ds * k;
    return cos_sum[k] * inv_n * kernel_w.ft(s) * std::exp(exponent * s * s);
  };
  double odd = 0.0;
  double even = 0.0;
  for (int k = 1; k < intervals; k += 2) odd += integrand_at(k);
  for (int k = 2; k < intervals; k += 2) even += integrand_at(k);
  const double integral =
      (integrand_at(0) + integrand_at(intervals) + 4.0 * odd + 2.0 * even) * ds / 3.0;
  return integral / (kPi * h);
}

double density_known_atom(const Sample& sample, double x, double h, double p,
                          const Kernel& kernel_w) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("density_known_atom: p must lie in [0, 1)");
  }
  const double classical = deconv_density(sample, x, h, kernel_w);
  const double w_h = kernel_w.closed_form(x / h) / h;
  return classical / (1.0 - p) - p / (1.0 - p) * w_h;
}

double atom_raw(const Sample& sample, double g, const Kernel& kernel_k, double tol) {
  if (!(g > 0.0)) throw std::invalid_argument("atom_raw: g must be positive");
  return g * kPi * deconv_density(sample, 0.0, g, kernel_k, tol);
}

AtomEstimate estimate_atom(const Sample& sample, double g, double eps_n,
                           const Kernel& kernel_k) {
  if (!(eps_n > 0.0 && eps_n < 1.0)) {
    throw std::invalid_argument("estimate_atom: eps_n must lie in (0, 1)");
  }
  AtomEstimate est;
  est.raw = atom_raw(sample, g, kernel_k);
  est.bandwidth = g;
  est.eps = eps_n;
  est.truncated = est.raw > 1.0 - eps_n;
  est.value = est.truncated ? 1.0 - eps_n : est.raw;
  return est;
}

double density_plugin(const Sample& sample, double x, const EstimatorConfig& config) {
  const AtomEstimate atom = estimate_atom(sample, config.g, config.eps_n, config.kernel_k);
  const double classical = deconv_density(sample, x, config.h, config.kernel_w);
  const double w_h = config.kernel_w.closed_form(x / config.h) / config.h;
  return classical / (1.0 - atom.value) - atom.value / (1.0 - atom.value) * w_h;
}

DensityGrid deconv_density_grid(const Sample& sample, double h, const Kernel& kernel_w,
                                const GridConfig& grid) {
  return fft_grid_eval(sample, [&](double t) { return kernel_w.ft(t); }, h, grid,
                       "classical");
}

DensityGrid density_known_atom_grid(const Sample& sample, double h, double p,
                                    const Kernel& kernel_w, const GridConfig& grid) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("density_known_atom_grid: p must lie in [0, 1)");
  }
  DensityGrid classical = deconv_density_grid(sample, h, kernel_w, grid);
  const DensityGrid scaled = kernel_scaled_grid(kernel_w, h, grid);
  for (std::size_t i = 0; i < classical.values.size(); ++i) {
    classical.values[i] =
        classical.values[i] / (1.0 - p) - p / (1.0 - p) * scaled.values[i];
  }
  classical.estimator_tag = "known_atom";
  return classical;
}

PluginGridResult density_plugin_grid(const Sample& sample, const EstimatorConfig& config) {
  const AtomEstimate atom = estimate_atom(sample, config.g, config.eps_n, config.kernel_k);
  DensityGrid grid =
      density_known_atom_grid(sample, config.h, atom.value, config.kernel_w, config.grid);
  grid.estimator_tag = "plugin";
  return PluginGridResult{std::move(grid), atom};
}

DensityGrid clip_and_renormalize(DensityGrid grid) {
  double mass = 0.0;
  const double step = grid.config.delta();
  for (auto& v : grid.values) {
    if (v < 0.0) v = 0.0;
    mass += v * step;
  }
  if (mass <= 0.0) {
    throw NumericError("clip_and_renormalize: estimate has no positive mass");
  }
  for (auto& v : grid.values) v /= mass;
  grid.estimator_tag += "_clipped";
  return grid;
}

}  // namespace atomdeconv
