#include "atomdeconv/sample.hpp"

#include <cmath>
#include <stdexcept>

namespace atomdeconv {

Sample::Sample(std::vector<double> v, double sigma_in)
    : values(std::move(v)), sigma(sigma_in) {
  if (values.empty()) {
    throw std::invalid_argument("Sample: needs at least one observation");
  }
  if (!(sigma >= 0.0) || !std::isfinite(sigma)) {
    throw std::invalid_argument("Sample: sigma must be finite and >= 0");
  }
  for (double x : values) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument("Sample: observations must be finite");
    }
  }
}

std::complex<double> empirical_cf(const Sample& sample, double t) {
  double re = 0.0;
  double im = 0.0;
  for (double x : sample.values) {
    re += std::cos(t * x);
    im += std::sin(t * x);
  }
  const double inv_n = 1.0 / static_cast<double>(sample.size());
  return {re * inv_n, im * inv_n};
}

}  // namespace atomdeconv
