#pragma once

#include <cstdint>
#include <vector>

#include "atomdeconv/kernels.hpp"
#include "atomdeconv/models.hpp"
#include "atomdeconv/sample.hpp"

namespace atomdeconv {

// Draws X_j = B_j V_j + sigma Z_j, j = 0..n-1, fully deterministic given
// (seed, j): observation j uses its own counter-based stream, so the result is
// independent of evaluation order.
Sample draw_sample(const ModelSpec& model, std::size_t n, std::uint64_t seed);

// Per-bandwidth Monte Carlo report for the atom-mass estimate.
struct MCSummary {
  double g = 0.0;
  int replications = 0;
  std::size_t n = 0;
  std::vector<double> estimates;  // raw atom estimates, one per replication
  double sample_mean = 0.0;
  double sample_sd = 0.0;         // with R - 1 denominator
  double asymptotic_sd = 0.0;
  double corrected_sd = 0.0;
  std::uint64_t seed = 0;
};

// For each bandwidth: R replications, each drawing a fresh sample (replication
// r of bandwidth index gi reseeded from (seed, gi, r)) and computing the raw
// atom estimate. Replications run in parallel; the seeding contract makes the
// summaries identical to serial execution.
std::vector<MCSummary> mc_study(const ModelSpec& model, std::size_t n,
                                const std::vector<double>& bandwidths, int replications,
                                std::uint64_t seed, const Kernel& kernel_k);

struct Histogram {
  std::vector<double> edges;        // bin_count + 1 edges
  std::vector<std::size_t> counts;  // bin_count counts, summing to the input size
};

// Equal-width bins spanning [min, max]; final bin right-closed, the others
// right-open. Throws EmptyInput for an empty value list.
Histogram histogram(const std::vector<double>& values, std::size_t bin_count);

}  // namespace atomdeconv
