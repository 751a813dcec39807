#include "atomdeconv/kernels.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "atomdeconv/errors.hpp"
#include "atomdeconv/quadrature.hpp"

namespace atomdeconv {

namespace {

constexpr double kPi = std::numbers::pi;

// (1/pi) int_0^1 cos(t x) phi(t) dt -- the symmetric inverse transform.
double inverse_ft_quadrature(const std::function<double(double)>& phi, double x) {
  return integrate([&](double t) { return std::cos(t * x) * phi(t); }, 0.0, 1.0, 1e-13) / kPi;
}

double deconv_w_closed(double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double x2 = x * x;
  return 8.0 * (3.0 * s - 3.0 * x * c - x2 * s) / (kPi * x2 * x2 * x);
}

double atom_k_closed(double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double x2 = x * x;
  const double x3 = x2 * x;
  const double x4 = x2 * x2;
  const double x5 = x4 * x;
  const double x6 = x4 * x2;
  const double x7 = x6 * x;
  const double x8 = x4 * x4;
  const double num = -x8 * s - 21.0 * x7 * c + 255.0 * x6 * s + 2190.0 * x5 * c -
                     13950.0 * x4 * s - 65520.0 * x3 * c + 216720.0 * x2 * s +
                     453600.0 * x * c - 453600.0 * s;
  return 693.0 * num / (kPi * x8 * x3);
}

double sextic_w_closed(double x) {
  const double s = std::sin(x);
  const double c = std::cos(x);
  const double x2 = x * x;
  const double x3 = x2 * x;
  return 48.0 * (x3 * c - 6.0 * x2 * s - 15.0 * x * c + 15.0 * s) / (kPi * x3 * x3 * x);
}

}  // namespace

double Kernel::ft(double t) const {
  if (std::abs(t) > 1.0) return 0.0;
  return ft_(t);
}

double Kernel::closed_form(double x) const {
  const double ax = std::abs(x);
  if (!closed_ || ax < closed_form_cutoff_) {
    return inverse_ft_quadrature(ft_, ax);
  }
  return closed_(ax);  // even in x
}

const Kernel& Kernel::deconv_w() {
  static const Kernel k = [] {
    Kernel k;
    k.name_ = "deconv_w";
    k.ft_ = [](double t) { double u = 1.0 - t * t; return u * u; };
    k.closed_ = deconv_w_closed;
    k.closed_form_cutoff_ = 0.5;
    k.alpha_ = 2.0;
    k.edge_const_ = 4.0;
    k.ft_integral_ = 16.0 / 15.0;
    k.tail_order_ = 3.0;
    return k;
  }();
  return k;
}

const Kernel& Kernel::atom_k() {
  static const Kernel k = [] {
    Kernel k;
    k.name_ = "atom_k";
    k.ft_ = [](double t) {
      const double t2 = t * t;
      const double u = 1.0 - t2;
      return 693.0 / 8.0 * t2 * t2 * t2 * u * u;
    };
    k.closed_ = atom_k_closed;
    // The rational-trigonometric form loses ~12 digits to cancellation near the
    // origin; below this cutoff quadrature is the accurate branch.
    k.closed_form_cutoff_ = 1.5;
    k.alpha_ = 2.0;
    k.edge_const_ = 693.0 / 2.0;
    k.origin_ = OriginExpansion{693.0 / 8.0, 6.0};
    k.ft_integral_ = 2.0;
    k.tail_order_ = 3.0;
    return k;
  }();
  return k;
}

const Kernel& Kernel::sextic_w() {
  static const Kernel k = [] {
    Kernel k;
    k.name_ = "sextic_w";
    k.ft_ = [](double t) { double u = 1.0 - t * t; return u * u * u; };
    k.closed_ = sextic_w_closed;
    k.closed_form_cutoff_ = 0.5;
    k.alpha_ = 3.0;
    k.edge_const_ = 8.0;
    k.ft_integral_ = 32.0 / 35.0;
    k.tail_order_ = 4.0;
    return k;
  }();
  return k;
}

const Kernel& Kernel::by_name(std::string_view name) {
  if (name == "deconv_w") return deconv_w();
  if (name == "atom_k") return atom_k();
  if (name == "sextic_w") return sextic_w();
  throw std::invalid_argument("unknown kernel '" + std::string(name) +
                              "' (built-ins: deconv_w, atom_k, sextic_w)");
}

Kernel Kernel::from_transform(std::string name, std::function<double(double)> ft,
                              double edge_const, double alpha,
                              std::optional<OriginExpansion> origin,
                              std::optional<double> ft_integral) {
  if (!ft) throw std::invalid_argument("from_transform: missing transform");
  if (alpha < 0.0) throw std::invalid_argument("from_transform: alpha must be >= 0");
  Kernel k;
  k.name_ = std::move(name);
  k.ft_ = std::move(ft);
  k.alpha_ = alpha;
  k.edge_const_ = edge_const;
  k.origin_ = origin;
  k.ft_integral_ = ft_integral ? *ft_integral
                               : 2.0 * integrate(k.ft_, 0.0, 1.0, 1e-12);
  k.tail_order_ = std::floor(alpha) + 1.0;
  return k;
}

namespace {

// Sum of integrals over consecutive pi-length windows, contracted by iterated
// averaging of the partial sums. For an integrand that is eventually an
// alternating sequence of window integrals with slowly varying envelope this
// converges far below the raw truncation error. Returns {value, residual}.
std::pair<double, double> oscillatory_tail(const std::function<double(double)>& f,
                                           double from, int windows, double window_tol) {
  std::vector<double> partial;
  partial.reserve(windows);
  double acc = 0.0;
  double a = from;
  for (int m = 0; m < windows; ++m) {
    acc += integrate(f, a, a + kPi, window_tol);
    partial.push_back(acc);
    a += kPi;
  }
  double last = partial.back();
  double prev = last;
  while (partial.size() > 1) {
    for (std::size_t i = 0; i + 1 < partial.size(); ++i) {
      partial[i] = 0.5 * (partial[i] + partial[i + 1]);
    }
    partial.pop_back();
    prev = last;
    last = partial.back();
  }
  return {last, std::abs(last - prev)};
}

}  // namespace

double kernel_moment(const Kernel& kernel, int j, double tol) {
  if (j < 0 || j > 12) {
    throw std::invalid_argument("kernel_moment: j must lie in [0, 12]");
  }
  if (tol <= 0.0) {
    throw std::invalid_argument("kernel_moment: tol must be positive");
  }
  // The transform is real and symmetric, so the kernel is even and every odd
  // moment vanishes identically.
  if (j % 2 == 1) return 0.0;
  if (static_cast<double>(j) >= kernel.tail_order()) {
    throw NonIntegrableMoment("moment j = " + std::to_string(j) + " of kernel '" +
                              kernel.name() + "' diverges (tail order " +
                              std::to_string(kernel.tail_order()) + ")");
  }

  const auto integrand = [&](double x) { return std::pow(x, j) * kernel.closed_form(x); };
  const double head_end = 12.0 * kPi;
  const double head = integrate(integrand, 0.0, head_end, 0.125 * tol);

  int windows = 48;
  for (;;) {
    const auto [tail, residual] =
        oscillatory_tail(integrand, head_end, windows, 0.125 * tol / windows);
    if (residual <= 0.25 * tol || windows >= 192) {
      return 2.0 * (head + tail);
    }
    windows *= 2;
  }
}

}  // namespace atomdeconv
