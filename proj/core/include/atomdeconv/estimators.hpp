#pragma once

#include "atomdeconv/grid.hpp"
#include "atomdeconv/kernels.hpp"
#include "atomdeconv/sample.hpp"

namespace atomdeconv {

// Bandwidths, truncation level, kernels and grid shared by the plug-in
// estimator. h smooths the density, g the atom-mass estimate.
struct EstimatorConfig {
  EstimatorConfig(double h, double g, double eps_n,
                  Kernel kernel_w = Kernel::deconv_w(),
                  Kernel kernel_k = Kernel::atom_k(),
                  std::size_t grid_points = 1 << 16, double grid_coverage = 64.0);

  double h;
  double g;
  double eps_n;  // truncation level in (0, 1)
  Kernel kernel_w;
  Kernel kernel_k;
  GridConfig grid;
};

// Atom-mass estimate: the raw integral value and its truncation at 1 - eps_n.
// raw may be negative for small samples; only the upper tail is truncated.
struct AtomEstimate {
  double raw = 0.0;        // untruncated estimate
  double value = 0.0;      // min(raw, 1 - eps)
  double bandwidth = 0.0;  // g used
  double eps = 0.0;        // eps_n used
  bool truncated = false;
};

// Classical deconvolution density estimate at a point, via the cosine-sum
// representation (1/(pi n h)) sum_j int_0^1 cos(s (X_j - x)/h) phi_w(s)
// exp(sigma^2 s^2 / (2 h^2)) ds with adaptive quadrature; the oracle path the
// FFT grid is checked against. Throws ExponentOverflow when
// sigma^2/(2h^2) > 700.
double deconv_density(const Sample& sample, double x, double h, const Kernel& kernel_w,
                      double tol = 1e-10);

// Same value on a fixed composite-Simpson grid with the per-observation cosine
// recurrence; the throughput path for Monte Carlo sweeps.
double deconv_density_fixed(const Sample& sample, double x, double h,
                            const Kernel& kernel_w, int intervals = 1024);

// Density estimate when the atom mass p is known:
// f_est(x) = deconv(x)/(1-p) - p/(1-p) * w_h(x). May be negative; no clipping.
double density_known_atom(const Sample& sample, double x, double h, double p,
                          const Kernel& kernel_w);

// Raw atom-mass estimate (g/2) int_{-1/g}^{1/g} ecf(t) phi_k(g t)
// exp(sigma^2 t^2/2) dt. Computed, after substituting t = s/g and folding by
// symmetry, as g * pi times the deconvolution estimate at zero with kernel_k,
// which makes the rescaling identity exact.
double atom_raw(const Sample& sample, double g, const Kernel& kernel_k,
                double tol = 1e-10);

// Truncated atom-mass estimate min(raw, 1 - eps_n).
AtomEstimate estimate_atom(const Sample& sample, double g, double eps_n,
                           const Kernel& kernel_k);

// Plug-in density estimate with estimated atom mass, evaluated at a point.
double density_plugin(const Sample& sample, double x, const EstimatorConfig& config);

// Grid versions. The plug-in grid combines the FFT deconvolution grid and the
// FFT kernel grid pointwise by the same linear relation as density_plugin.
DensityGrid deconv_density_grid(const Sample& sample, double h, const Kernel& kernel_w,
                                const GridConfig& grid);
DensityGrid density_known_atom_grid(const Sample& sample, double h, double p,
                                    const Kernel& kernel_w, const GridConfig& grid);
struct PluginGridResult {
  DensityGrid grid;
  AtomEstimate atom;
};
PluginGridResult density_plugin_grid(const Sample& sample, const EstimatorConfig& config);

// Optional post-processing: clip negative values at zero and renormalise so
// the grid integrates to one. The raw estimators are intentionally unclipped.
DensityGrid clip_and_renormalize(DensityGrid grid);

}  // namespace atomdeconv
