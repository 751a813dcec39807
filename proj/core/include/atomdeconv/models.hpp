#pragma once

#include <complex>
#include <string>
#include <utility>
#include <variant>

namespace atomdeconv {

// Ground-truth generative model: X = B V + sigma Z with P(B = 0) = p,
// V drawn from one of the families below and Z standard normal. Each family
// provides the density of V, its characteristic function in closed form and
// its first two moments.
class ModelSpec {
public:
  struct Normal {
    double mean;
    double variance;
  };
  struct Gamma {  // rate fixed at 1
    double shape;
  };
  struct NormalMixture {
    double weight1;
    Normal component1;
    Normal component2;
  };
  using Family = std::variant<Normal, Gamma, NormalMixture>;

  ModelSpec(double p, Family family, double sigma);

  static ModelSpec normal(double p, double mean, double variance, double sigma);
  static ModelSpec gamma(double p, double shape, double sigma);
  static ModelSpec normal_mixture(double p, double weight1, Normal c1, Normal c2,
                                  double sigma);

  double p() const { return p_; }
  double sigma() const { return sigma_; }
  const Family& family() const { return family_; }
  std::string family_name() const;

  double density(double v) const;             // density of V
  std::complex<double> cf(double t) const;    // characteristic function of V
  double mean_v() const;
  double var_v() const;
  double var_y() const;                       // (1 - p)(Var V + p (E V)^2)

  // Interval outside which the density is negligible (< ~1e-30); used to
  // truncate convolution quadrature.
  std::pair<double, double> support_hint() const;

  // Frequency beyond which |cf| < eps; used to truncate Fourier quadrature.
  double cf_cutoff(double eps) const;

private:
  double p_;
  Family family_;
  double sigma_;
};

// Noise-to-signal ratio 100 * sigma^2 / Var[Y], in percent. Throws
// DegenerateModel when Var[Y] = 0.
double nsr(const ModelSpec& model);

}  // namespace atomdeconv
