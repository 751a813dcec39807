#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "atomdeconv/errors.hpp"
#include "atomdeconv/fft.hpp"
#include "atomdeconv/grid.hpp"
#include "atomdeconv/models.hpp"
#include "atomdeconv/quadrature.hpp"
#include "atomdeconv/rng.hpp"
#include "atomdeconv/sample.hpp"
#include "atomdeconv/simulation.hpp"

using namespace atomdeconv;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("sample validation") {
  CHECK_THROWS_AS(Sample({}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Sample({1.0, std::nan("")}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Sample({1.0}, -0.5), std::invalid_argument);
  CHECK_NOTHROW(Sample({1.0}, 0.0));  // noise-free samples are allowed
}

TEST_CASE("empirical characteristic function") {
  const Sample s({0.7, -1.3, 2.2}, 1.0);
  CHECK(empirical_cf(s, 0.0) == std::complex<double>(1.0, 0.0));

  const Sample zero({0.0}, 1.0);
  for (double t : {-3.0, 0.1, 11.0}) {
    CHECK(empirical_cf(zero, t) == std::complex<double>(1.0, 0.0));
  }

  const Sample pm({1.0, -1.0}, 1.0);
  for (double t : {0.3, 1.0, 2.5}) {
    CHECK(empirical_cf(pm, t).real() == doctest::Approx(std::cos(t)).epsilon(1e-15));
    CHECK(empirical_cf(pm, t).imag() == doctest::Approx(0.0).scale(1.0).epsilon(1e-15));
  }
}

TEST_CASE("empirical cf: conjugate symmetry and modulus bound") {
  const ModelSpec model = ModelSpec::normal(0.1, 3.0, 9.0, 1.0);
  const Sample s = draw_sample(model, 64, 99);
  for (double t : {0.1, 0.9, 2.3, 5.7, 13.1}) {
    const auto plus = empirical_cf(s, t);
    const auto minus = empirical_cf(s, -t);
    CHECK(minus.real() == doctest::Approx(plus.real()).epsilon(1e-14));
    CHECK(minus.imag() == doctest::Approx(-plus.imag()).epsilon(1e-14));
    CHECK(std::abs(plus) <= 1.0 + 1e-12);
  }
}

TEST_CASE("simpson weight sequence for N = 8") {
  const double eta = 0.3;
  const auto w = simpson_weights(8, eta);
  const double expected[] = {1, 4, 2, 4, 2, 4, 2, 4};
  for (std::size_t i = 0; i < 8; ++i) {
    CHECK(w[i] == doctest::Approx(eta / 3.0 * expected[i]).epsilon(1e-15));
  }
}

TEST_CASE("grid configuration") {
  CHECK_THROWS_AS(GridConfig(100, 0.1), std::invalid_argument);  // not a power of two
  CHECK_THROWS_AS(GridConfig(64, -1.0), std::invalid_argument);

  const GridConfig c(1 << 10, 0.05);
  CHECK(c.delta() * c.eta ==
        doctest::Approx(2.0 * kPi / static_cast<double>(c.n_points)).epsilon(1e-15));

  const GridConfig fb = GridConfig::for_bandwidth(0.5, 1 << 12, 64.0);
  CHECK(fb.frequency_span() == doctest::Approx(64.0 / 0.5).epsilon(1e-15));
  CHECK(fb.x_at(fb.n_points / 2) == 0.0);
  CHECK(fb.x_at(1) - fb.x_at(0) == doctest::Approx(fb.delta()).epsilon(1e-12));
}

TEST_CASE("fft agrees with the direct transform") {
  SplitMix64 rng(7);
  const std::size_t n = 16;
  std::vector<std::complex<double>> a(n);
  for (auto& c : a) c = {rng.uniform01() - 0.5, rng.uniform01() - 0.5};
  auto b = a;
  fft(b);
  for (std::size_t k = 0; k < n; ++k) {
    std::complex<double> direct(0.0, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double phase = -2.0 * kPi * static_cast<double>(j * k) / n;
      direct += a[j] * std::complex<double>(std::cos(phase), std::sin(phase));
    }
    CHECK(std::abs(b[k] - direct) < 1e-12);
  }

  std::vector<std::complex<double>> bad(12);
  CHECK_THROWS_AS(fft(bad), std::invalid_argument);
}

TEST_CASE("fft grid for a single observation at zero is symmetric") {
  const Sample s({0.0}, 1.0);
  const double h = 0.6;
  const auto& w = Kernel::deconv_w();
  const GridConfig config = GridConfig::for_bandwidth(h, 1 << 12, 8.0);
  const DensityGrid grid =
      fft_grid_eval(s, [&](double t) { return w.ft(t); }, h, config);

  const std::size_t mid = config.n_points / 2;
  for (std::size_t off : {1u, 7u, 100u, 500u}) {
    CHECK(grid.values[mid + off] == doctest::Approx(grid.values[mid - off]).epsilon(1e-9));
  }
  // centre value equals (1/pi) int_0^1 phi_w(s) e^{s^2/(2h^2)} ds / h
  const double expected =
      integrate([&](double t) { return w.ft(t) * std::exp(0.5 * t * t / (h * h)); }, 0.0,
                1.0, 1e-12) /
      (kPi * h);
  CHECK(grid.values[mid] == doctest::Approx(expected).epsilon(1e-6));
}

TEST_CASE("fft grid preconditions") {
  const Sample s({0.5, 1.0}, 1.0);
  const auto& w = Kernel::deconv_w();
  auto ft = [&](double t) { return w.ft(t); };
  // sigma^2/(2 h^2) = 1250 > 700
  CHECK_THROWS_AS(fft_grid_eval(s, ft, 0.02, GridConfig::for_bandwidth(0.02)),
                  ExponentOverflow);
  // N eta = 1 < 1/h = 2
  CHECK_THROWS_AS(fft_grid_eval(s, ft, 0.5, GridConfig(1 << 10, 1.0 / 1024.0)),
                  CoverageError);
}

TEST_CASE("fft grid is linear in the sample mixture") {
  const ModelSpec model = ModelSpec::normal(0.1, 3.0, 9.0, 1.0);
  const Sample a = draw_sample(model, 60, 11);
  const Sample b = draw_sample(model, 40, 12);
  std::vector<double> merged = a.values;
  merged.insert(merged.end(), b.values.begin(), b.values.end());
  const Sample ab(merged, 1.0);

  const double h = 0.55;
  const GridConfig config = GridConfig::for_bandwidth(h, 1 << 12, 16.0);
  const auto& w = Kernel::deconv_w();
  auto ft = [&](double t) { return w.ft(t); };
  const auto grid_a = fft_grid_eval(a, ft, h, config);
  const auto grid_b = fft_grid_eval(b, ft, h, config);
  const auto grid_ab = fft_grid_eval(ab, ft, h, config);

  double scale = 0.0;
  for (double v : grid_ab.values) scale = std::max(scale, std::abs(v));
  for (std::size_t i = 0; i < grid_ab.values.size(); ++i) {
    const double mixed = (60.0 * grid_a.values[i] + 40.0 * grid_b.values[i]) / 100.0;
    CHECK(std::abs(grid_ab.values[i] - mixed) <= 1e-10 * scale);
  }
}

TEST_CASE("kernel grid path matches the scaled closed form") {
  const double h = 0.58;
  const auto& w = Kernel::deconv_w();
  const GridConfig config = GridConfig::for_bandwidth(h, 1 << 14, 32.0);
  const DensityGrid grid = kernel_scaled_grid(w, h, config);
  const std::size_t mid = config.n_points / 2;
  for (std::size_t off : {0u, 3u, 50u, 400u, 2000u}) {
    const double x = grid.xs[mid + off];
    CHECK(std::abs(grid.values[mid + off] - w.closed_form(x / h) / h) < 1e-6);
  }
}

TEST_CASE("density grid interpolation") {
  const Sample s({0.0, 1.0}, 0.5);
  const double h = 0.7;
  const auto& w = Kernel::deconv_w();
  const GridConfig config = GridConfig::for_bandwidth(h, 1 << 10, 4.0);
  const DensityGrid grid = fft_grid_eval(s, [&](double t) { return w.ft(t); }, h, config);

  CHECK(grid.value_at(grid.xs[17]) == doctest::Approx(grid.values[17]).epsilon(1e-14));
  const double mid_x = 0.5 * (grid.xs[17] + grid.xs[18]);
  CHECK(grid.value_at(mid_x) ==
        doctest::Approx(0.5 * (grid.values[17] + grid.values[18])).epsilon(1e-12));
  CHECK_THROWS_AS(grid.value_at(grid.xs.back() + 1.0), std::out_of_range);
}
