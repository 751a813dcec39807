#include <doctest.h>

#include <cmath>
#include <numbers>

#include "atomdeconv/errors.hpp"
#include "atomdeconv/kernels.hpp"
#include "atomdeconv/quadrature.hpp"

using namespace atomdeconv;

namespace {
constexpr double kPi = std::numbers::pi;

// independent route: (1/pi) int_0^1 cos(t x) phi(t) dt
double inverse_ft_oracle(const Kernel& k, double x) {
  return integrate([&](double t) { return std::cos(t * x) * k.ft(t); }, 0.0, 1.0, 1e-12) /
         kPi;
}
}  // namespace

TEST_CASE("transform values of the built-ins") {
  const auto& w = Kernel::deconv_w();
  CHECK(w.ft(0.0) == 1.0);
  CHECK(w.ft(0.5) == doctest::Approx(0.5625).epsilon(1e-15));
  CHECK(w.ft(-0.5) == w.ft(0.5));

  const auto& k = Kernel::atom_k();
  CHECK(k.ft(1.5) == 0.0);
  CHECK(k.ft(-1.0000001) == 0.0);
  CHECK(k.ft(0.0) == 0.0);

  const auto& s = Kernel::sextic_w();
  CHECK(s.ft(0.0) == 1.0);
  CHECK(s.ft(2.0) == 0.0);
}

TEST_CASE("atom kernel transform peaks near 3, above the bound-by-one condition") {
  // grid-search oracle for the maximum of (693/8) t^6 (1 - t^2)^2
  const auto& k = Kernel::atom_k();
  double best_t = 0.0;
  double best = 0.0;
  for (int i = 0; i <= 200000; ++i) {
    const double t = i * 0.5e-5;
    const double v = k.ft(t);
    if (v > best) {
      best = v;
      best_t = t;
    }
  }
  CHECK(best == doctest::Approx(2.99376).epsilon(1e-4));
  CHECK(best_t == doctest::Approx(std::sqrt(0.6)).epsilon(1e-4));
  // the example atom kernel does not satisfy |phi| <= 1; recorded, not enforced
  CHECK(best > 1.0);
  CHECK(k.ft_integral() == 2.0);
}

TEST_CASE("closed forms at the origin") {
  CHECK(Kernel::deconv_w().closed_form(0.0) ==
        doctest::Approx(8.0 / (15.0 * kPi)).epsilon(1e-11));
  CHECK(Kernel::atom_k().closed_form(0.0) == doctest::Approx(1.0 / kPi).epsilon(1e-11));
  CHECK(Kernel::sextic_w().closed_form(0.0) ==
        doctest::Approx(16.0 / (35.0 * kPi)).epsilon(1e-11));
}

TEST_CASE("closed form matches inverse-transform quadrature at x = 10") {
  const auto& w = Kernel::deconv_w();
  CHECK(std::abs(w.closed_form(10.0) - inverse_ft_oracle(w, 10.0)) < 1e-8);
}

TEST_CASE("fourier pair property on [-20, 20] for every built-in") {
  for (const Kernel* k :
       {&Kernel::deconv_w(), &Kernel::atom_k(), &Kernel::sextic_w()}) {
    double worst = 0.0;
    for (int i = 0; i <= 100; ++i) {
      const double x = -20.0 + 0.4 * i;
      worst = std::max(worst, std::abs(k->closed_form(x) - inverse_ft_oracle(*k, x)));
    }
    INFO(k->name());
    CHECK(worst < 1e-7);
  }
}

TEST_CASE("edge expansion constants") {
  const double t = 1e-4;
  for (const Kernel* k :
       {&Kernel::deconv_w(), &Kernel::atom_k(), &Kernel::sextic_w()}) {
    const double limit = k->ft(1.0 - t) / std::pow(t, k->alpha());
    INFO(k->name());
    CHECK(std::abs(limit - k->edge_const()) < 1e-2 * k->edge_const());
  }
  CHECK(Kernel::deconv_w().alpha() == 2.0);
  CHECK(Kernel::deconv_w().edge_const() == 4.0);
  CHECK(Kernel::atom_k().alpha() == 2.0);
  CHECK(Kernel::atom_k().edge_const() == 693.0 / 2.0);
  REQUIRE(Kernel::atom_k().origin_order().has_value());
  CHECK(Kernel::atom_k().origin_order()->order == 6.0);
  CHECK(Kernel::atom_k().origin_order()->constant == 693.0 / 8.0);
  CHECK(Kernel::sextic_w().alpha() == 3.0);
  CHECK(Kernel::sextic_w().edge_const() == 8.0);
  CHECK_FALSE(Kernel::deconv_w().origin_order().has_value());
}

TEST_CASE("moments") {
  const auto& w = Kernel::deconv_w();
  CHECK(kernel_moment(w, 0, 1e-6) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(kernel_moment(w, 1, 1e-6) == 0.0);
  // second moment equals -phi''(0) with phi = 1 - 2 t^2 + t^4
  CHECK(kernel_moment(w, 2, 1e-6) == doctest::Approx(4.0).epsilon(1e-6));

  // sextic: -phi''(0) with phi = 1 - 3 t^2 + ...
  CHECK(kernel_moment(Kernel::sextic_w(), 2, 1e-6) == doctest::Approx(6.0).epsilon(1e-6));

  // atom kernel: transform vanishes to order 6 at zero, so low moments are 0
  CHECK(std::abs(kernel_moment(Kernel::atom_k(), 0, 1e-6)) < 1e-6);
  CHECK(std::abs(kernel_moment(Kernel::atom_k(), 2, 1e-6)) < 1e-6);

  CHECK_THROWS_AS(kernel_moment(w, 4, 1e-6), NonIntegrableMoment);
  CHECK_THROWS_AS(kernel_moment(Kernel::atom_k(), 4, 1e-6), NonIntegrableMoment);
  CHECK_THROWS_AS(kernel_moment(Kernel::sextic_w(), 4, 1e-6), NonIntegrableMoment);
  CHECK_THROWS_AS(kernel_moment(w, 13, 1e-6), std::invalid_argument);
  CHECK_THROWS_AS(kernel_moment(w, -1, 1e-6), std::invalid_argument);
}

TEST_CASE("user-supplied kernel from its transform") {
  const Kernel user = Kernel::from_transform(
      "user_quartic", [](double t) { double u = 1.0 - t * t; return u * u; }, 4.0, 2.0);
  const auto& ref = Kernel::deconv_w();
  // synthesised closed form agrees with the analytic one
  for (double x : {0.0, 0.3, 2.0, 7.0}) {
    CHECK(user.closed_form(x) == doctest::Approx(ref.closed_form(x)).epsilon(1e-9));
  }
  CHECK(user.ft_integral() == doctest::Approx(16.0 / 15.0).epsilon(1e-10));
  CHECK(user.ft(1.7) == 0.0);
  CHECK_THROWS_AS(Kernel::from_transform("bad", nullptr, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("kernel lookup by name") {
  CHECK(Kernel::by_name("deconv_w").name() == "deconv_w");
  CHECK(Kernel::by_name("atom_k").name() == "atom_k");
  CHECK(Kernel::by_name("sextic_w").name() == "sextic_w");
  CHECK_THROWS_AS(Kernel::by_name("nope"), std::invalid_argument);
}
