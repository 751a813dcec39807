#pragma once

#include <complex>
#include <vector>

namespace atomdeconv {

// In-place forward DFT, a[k] <- sum_j a[j] exp(-2 pi i j k / N), radix-2.
// N must be a power of two.
void fft(std::vector<std::complex<double>>& a);

bool is_power_of_two(std::size_t n);

}  // namespace atomdeconv
