#include <doctest.h>

#include <cmath>

#include "atomdeconv/errors.hpp"
#include "atomdeconv/kernels.hpp"
#include "atomdeconv/quadrature.hpp"
#include "atomdeconv/rng.hpp"

using namespace atomdeconv;

TEST_CASE("integrate: constant function") {
  CHECK(integrate([](double) { return 1.0; }, 0.0, 1.0, 1e-10) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
}

TEST_CASE("integrate: atom kernel transform has mass 2") {
  const auto& k = Kernel::atom_k();
  const double mass = integrate([&](double t) { return k.ft(t); }, -1.0, 1.0, 1e-10);
  // exact value: (693/4) (1/7 - 2/9 + 1/11) = 2
  CHECK(mass == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("integrate: damped sextic transform vs dense fixed-step oracle") {
  auto f = [](double s) {
    const double u = 1.0 - s * s;
    return u * u * u * std::exp(2.0 * s * s);
  };
  const double oracle = integrate_fixed(f, 0.0, 1.0, 200000);
  const double adaptive = integrate(f, 0.0, 1.0, 1e-10);
  CHECK(adaptive == doctest::Approx(oracle).epsilon(1e-10));
  CHECK(adaptive == doctest::Approx(0.595630435586071).epsilon(1e-10));
}

TEST_CASE("integrate: exact on cubics") {
  SplitMix64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const double c0 = 4.0 * rng.uniform01() - 2.0;
    const double c1 = 4.0 * rng.uniform01() - 2.0;
    const double c2 = 4.0 * rng.uniform01() - 2.0;
    const double c3 = 4.0 * rng.uniform01() - 2.0;
    const double a = -1.0 - rng.uniform01();
    const double b = 1.0 + rng.uniform01();
    auto poly = [&](double x) { return c0 + x * (c1 + x * (c2 + x * c3)); };
    auto anti = [&](double x) {
      return x * (c0 + x * (c1 / 2 + x * (c2 / 3 + x * c3 / 4)));
    };
    CHECK(integrate(poly, a, b, 1e-12) == doctest::Approx(anti(b) - anti(a)).epsilon(1e-12));
  }
}

TEST_CASE("integrate: depth cap raises on a discontinuity at tight tolerance") {
  auto step = [](double x) { return x < 1.0 / 3.0 ? 0.0 : 1.0; };
  CHECK_THROWS_AS(integrate(step, 0.0, 1.0, 1e-13), MaxDepthExceeded);
}

TEST_CASE("integrate: rejects reversed interval") {
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("integrate_fixed: agrees with adaptive on a smooth integrand") {
  auto f = [](double x) { return std::exp(-x * x) * std::cos(3.0 * x); };
  CHECK(integrate_fixed(f, -2.0, 2.0, 2000) ==
        doctest::Approx(integrate(f, -2.0, 2.0, 1e-12)).epsilon(1e-10));
  CHECK_THROWS_AS(integrate_fixed(f, 0.0, 1.0, 3), std::invalid_argument);
}
