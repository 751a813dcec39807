#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace atomdeconv {

// Observed values X_1..X_n together with the known noise level sigma of the
// additive Gaussian component.
struct Sample {
  Sample(std::vector<double> values, double sigma);

  std::size_t size() const { return values.size(); }

  std::vector<double> values;
  double sigma = 1.0;
};

// Empirical characteristic function (1/n) sum_j exp(i t X_j). Modulus <= 1,
// conjugate-symmetric in t.
std::complex<double> empirical_cf(const Sample& sample, double t);

}  // namespace atomdeconv
