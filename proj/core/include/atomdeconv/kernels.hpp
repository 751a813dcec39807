#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace atomdeconv {

// Leading behaviour of a transform near the origin, phi(t) ~ constant * t^order.
// Only the atom-weighting kernels carry this expansion.
struct OriginExpansion {
  double constant = 0.0;
  double order = 0.0;
};

// A smoothing kernel given by its Fourier transform phi, which is real,
// symmetric and supported on [-1, 1]. The kernel itself (the inverse
// transform) may be supplied in closed form; otherwise it is synthesised by
// quadrature, which is also used near the origin where the closed forms are
// removable-singularity expressions.
//
// Two families are distinguished by normalisation:
//   - density-smoothing kernels ("w" type) have phi(0) = 1,
//   - atom-weighting kernels ("k" type) have integral of phi over [-1,1]
//     equal to 2 and phi(0) = 0.
//
// Near the support edge, phi(1 - t) ~ edge_const * t^alpha as t -> 0; the pair
// (edge_const, alpha) drives every variance asymptote in this library.
//
// Instances are immutable; all member calls are pure and thread safe.
class Kernel {
public:
  const std::string& name() const { return name_; }

  // phi(t); exactly zero for |t| > 1.
  double ft(double t) const;

  // Kernel value at x, i.e. (1/2pi) * int_{-1}^{1} exp(-i t x) phi(t) dt.
  // For |x| below a per-kernel cutoff the value comes from cosine quadrature
  // instead of the closed form, whose terms cancel catastrophically there.
  double closed_form(double x) const;

  double alpha() const { return alpha_; }
  double edge_const() const { return edge_const_; }
  const std::optional<OriginExpansion>& origin_order() const { return origin_; }

  // int_{-1}^{1} phi(t) dt, stored exactly for the built-ins.
  double ft_integral() const { return ft_integral_; }

  // Decay exponent d with closed_form(x) = O(|x|^-d); controls which moments
  // are integrable. alpha + 1 for the built-ins.
  double tail_order() const { return tail_order_; }

  // Built-in kernels. Names follow the CLI identifiers.
  static const Kernel& deconv_w();   // transform (1 - t^2)^2
  static const Kernel& atom_k();     // transform (693/8) t^6 (1 - t^2)^2
  static const Kernel& sextic_w();   // transform (1 - t^2)^3
  static const Kernel& by_name(std::string_view name);

  // User-supplied kernel from its transform. The closed form is synthesised by
  // quadrature. ft_integral is computed numerically when not given.
  static Kernel from_transform(std::string name, std::function<double(double)> ft,
                               double edge_const, double alpha,
                               std::optional<OriginExpansion> origin = std::nullopt,
                               std::optional<double> ft_integral = std::nullopt);

private:
  Kernel() = default;

  std::string name_;
  std::function<double(double)> ft_;                      // on [-1, 1]
  std::function<double(double)> closed_;                  // optional analytic form
  double closed_form_cutoff_ = 0.5;                       // |x| below -> quadrature
  double alpha_ = 0.0;
  double edge_const_ = 0.0;
  std::optional<OriginExpansion> origin_;
  double ft_integral_ = 0.0;
  double tail_order_ = 0.0;
};

// j-th moment int x^j k(x) dx, computed over a truncated range with the
// oscillatory tail summed by alternating-window averaging; the combined
// quadrature and tail estimate is kept below tol. Odd moments vanish exactly
// by symmetry of the transform. Throws NonIntegrableMoment when the defining
// integral diverges for the kernel's tail order, std::invalid_argument for
// j < 0 or j > 12.
double kernel_moment(const Kernel& kernel, int j, double tol);

}  // namespace atomdeconv
