#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "atomdeconv/kernels.hpp"
#include "atomdeconv/sample.hpp"

namespace atomdeconv {

// Regular evaluation grid for the FFT inversion scheme. The frequency nodes
// are v_j = eta * (j - 1), j = 1..N, and the spatial nodes
// x_u = -N delta / 2 + delta (u - 1) with delta * eta = 2 pi / N, which is the
// spacing relation the FFT requires.
struct GridConfig {
  GridConfig(std::size_t n_points, double eta);

  // eta = coverage / (h * n_points), so the frequency range is coverage / h
  // and the spatial step is 2 pi h / coverage.
  static GridConfig for_bandwidth(double h, std::size_t n_points = 1 << 16,
                                  double coverage = 64.0);

  double delta() const;                 // spatial step (2 pi / N) / eta
  double x_at(std::size_t u) const;     // u = 0..N-1
  double frequency_span() const;        // N * eta

  std::size_t n_points;
  double eta;
};

// Simpson weights (eta/3) * {1, 4, 2, 4, ..., 2, 4} for j = 1..n.
std::vector<double> simpson_weights(std::size_t n, double eta);

struct DensityGrid {
  double value_at(double x) const;  // linear interpolation between grid nodes

  std::vector<double> xs;
  std::vector<double> values;
  GridConfig config;
  std::string estimator_tag;
};

// Evaluates (1/2pi) int e^{-itx} cf(t) ft_weight(h t) exp(sigma^2 t^2/2) dt on
// the grid, as the sum of the two half-line transforms, each discretised by
// Simpson's rule and computed with a radix-2 FFT. cf values are taken at the
// frequency nodes; the weight's support [-1/h, 1/h] must be covered.
DensityGrid grid_inverse_transform(const std::function<std::complex<double>(double)>& cf,
                                   const std::function<double(double)>& ft_weight,
                                   double h, double sigma, const GridConfig& config,
                                   std::string estimator_tag);

// Same transform with cf = empirical characteristic function of the sample and
// sigma from the sample: the FFT path of the deconvolution estimator.
// Throws ExponentOverflow when sigma^2/(2h^2) > 700 and CoverageError when
// N * eta < 1/h.
DensityGrid fft_grid_eval(const Sample& sample,
                          const std::function<double(double)>& ft_weight, double h,
                          const GridConfig& config,
                          std::string estimator_tag = "density");

// Grid evaluation of the rescaled kernel w_h(x) = (1/h) w(x/h) by inverse FFT
// of its transform (unit characteristic function, no damping).
DensityGrid kernel_scaled_grid(const Kernel& kernel, double h, const GridConfig& config);

}  // namespace atomdeconv
