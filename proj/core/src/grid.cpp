#include "atomdeconv/grid.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "atomdeconv/errors.hpp"
#include "atomdeconv/fft.hpp"

namespace atomdeconv {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMaxDampingExponent = 700.0;
}  // namespace

GridConfig::GridConfig(std::size_t n, double eta_in) : n_points(n), eta(eta_in) {
  if (!is_power_of_two(n_points)) {
    throw std::invalid_argument("GridConfig: n_points must be a power of two");
  }
  if (!(eta > 0.0) || !std::isfinite(eta)) {
    throw std::invalid_argument("GridConfig: eta must be positive and finite");
  }
}

GridConfig GridConfig::for_bandwidth(double h, std::size_t n_points, double coverage) {
  if (!(h > 0.0)) throw std::invalid_argument("GridConfig: bandwidth must be positive");
  if (!(coverage >= 1.0)) {
    throw std::invalid_argument("GridConfig: coverage must be >= 1 to span [0, 1/h]");
  }
  return GridConfig(n_points, coverage / (h * static_cast<double>(n_points)));
}

double GridConfig::delta() const {
  return (2.0 * kPi / static_cast<double>(n_points)) / eta;
}

double GridConfig::x_at(std::size_t u) const {
  const auto half = static_cast<std::ptrdiff_t>(n_points / 2);
  return delta() * static_cast<double>(static_cast<std::ptrdiff_t>(u) - half);
}

double GridConfig::frequency_span() const {
  return eta * static_cast<double>(n_points);
}

std::vector<double> simpson_weights(std::size_t n, double eta) {
  std::vector<double> w(n);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const std::size_t j = idx + 1;                    // 1-based index of the scheme
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;    // (-1)^j
    const double kron = (j == 1) ? 1.0 : 0.0;
    w[idx] = eta / 3.0 * (3.0 + sign - kron);
  }
  return w;
}

double DensityGrid::value_at(double x) const {
  if (xs.empty()) throw std::logic_error("DensityGrid: empty");
  if (x < xs.front() || x > xs.back()) {
    throw std::out_of_range("DensityGrid: query outside the grid range");
  }
  const double step = config.delta();
  const double pos = (x - xs.front()) / step;
  auto lo = static_cast<std::size_t>(pos);
  if (lo + 1 >= xs.size()) lo = xs.size() - 2;
  const double frac = (x - xs[lo]) / step;
  return values[lo] * (1.0 - frac) + values[lo + 1] * frac;
}

DensityGrid grid_inverse_transform(const std::function<std::complex<double>(double)>& cf,
                                   const std::function<double(double)>& ft_weight,
                                   double h, double sigma, const GridConfig& config,
                                   std::string estimator_tag) {
  if (!(h > 0.0)) throw std::invalid_argument("grid_inverse_transform: h must be positive");
  const std::size_t n = config.n_points;

  // psi(v_j) = cf(v_j) * ft_weight(h v_j) * exp(sigma^2 v_j^2 / 2); zero once
  // h v_j leaves the weight's support, which also keeps the damping factor
  // finite. The remaining per-node factors are the Simpson weight and the
  // phase e^{i v_j N delta / 2} = (-1)^(j-1), exact by delta * eta = 2 pi / N.
  const std::vector<double> weights = simpson_weights(n, config.eta);
  std::vector<std::complex<double>> a(n, {0.0, 0.0});
  for (std::size_t idx = 0; idx < n; ++idx) {
    const double v = config.eta * static_cast<double>(idx);
    const double u = h * v;
    if (u > 1.0) break;  // integrand vanishes from here on
    const double damping = std::exp(0.5 * sigma * sigma * v * v);
    const double sign = (idx % 2 == 0) ? 1.0 : -1.0;  // (-1)^(j-1), j = idx + 1
    a[idx] = cf(v) * (ft_weight(u) * damping * weights[idx] * sign);
  }
  fft(a);

  // The mirrored half-line transform is the complex conjugate of the first,
  // so their sum is real; verify the contract and drop the imaginary parts.
  std::vector<double> values(n);
  double max_re = 0.0;
  double max_im = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    const std::complex<double> total = a[u] + std::conj(a[u]);
    values[u] = total.real() / (2.0 * kPi);
    max_re = std::max(max_re, std::abs(total.real()));
    max_im = std::max(max_im, std::abs(total.imag()));
  }
  if (max_im > 1e-8 * max_re) {
    throw NumericError("grid_inverse_transform: non-negligible imaginary part");
  }

  std::vector<double> xs(n);
  for (std::size_t u = 0; u < n; ++u) xs[u] = config.x_at(u);
  return DensityGrid{std::move(xs), std::move(values), config, std::move(estimator_tag)};
}

DensityGrid fft_grid_eval(const Sample& sample,
                          const std::function<double(double)>& ft_weight, double h,
                          const GridConfig& config, std::string estimator_tag) {
  if (!(h > 0.0)) throw std::invalid_argument("fft_grid_eval: h must be positive");
  const double exponent = 0.5 * sample.sigma * sample.sigma / (h * h);
  if (exponent > kMaxDampingExponent) throw ExponentOverflow(exponent);
  if (config.frequency_span() < 1.0 / h) {
    throw CoverageError(config.frequency_span(), 1.0 / h);
  }

  // Empirical cf at the frequency nodes, evaluated once per node by the power
  // recurrence z^j = e^{i eta X j}, re-anchored periodically to stop drift.
  const std::size_t n = config.n_points;
  std::size_t nodes = static_cast<std::size_t>(std::floor(1.0 / (h * config.eta))) + 2;
  nodes = std::min(nodes, n);
  std::vector<std::complex<double>> ecf(nodes, {0.0, 0.0});
  for (double x : sample.values) {
    const std::complex<double> step(std::cos(config.eta * x), std::sin(config.eta * x));
    std::complex<double> z(1.0, 0.0);
    for (std::size_t j = 0; j < nodes; ++j) {
      if (j % 256 == 0) {
        const double phase = config.eta * static_cast<double>(j) * x;
        z = {std::cos(phase), std::sin(phase)};
      }
      ecf[j] += z;
      z *= step;
    }
  }
  const double inv_n = 1.0 / static_cast<double>(sample.size());
  for (auto& c : ecf) c *= inv_n;

  auto cf = [&](double v) {
    const double pos = v / config.eta;
    const auto j = static_cast<std::size_t>(std::llround(pos));
    return ecf.at(j);
  };
  return grid_inverse_transform(cf, ft_weight, h, sample.sigma, config,
                                std::move(estimator_tag));
}

DensityGrid kernel_scaled_grid(const Kernel& kernel, double h, const GridConfig& config) {
  if (!(h > 0.0)) throw std::invalid_argument("kernel_scaled_grid: h must be positive");
  if (config.frequency_span() < 1.0 / h) {
    throw CoverageError(config.frequency_span(), 1.0 / h);
  }
  auto unit_cf = [](double) { return std::complex<double>(1.0, 0.0); };
  return grid_inverse_transform(unit_cf, [&](double t) { return kernel.ft(t); }, h,
                                /*sigma=*/0.0, config, "kernel");
}

}  // namespace atomdeconv
