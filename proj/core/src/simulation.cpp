#include "atomdeconv/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <variant>

#include "atomdeconv/asymptotics.hpp"
#include "atomdeconv/errors.hpp"
#include "atomdeconv/estimators.hpp"
#include "atomdeconv/rng.hpp"

namespace atomdeconv {

namespace {

// Fixed stream discriminators: per-observation draws and per-replication
// reseeds must never share a stream.
constexpr std::uint64_t kObservationStream = 0x0b5e7a11u;
constexpr std::uint64_t kReplicationSeed = 0x5eed5eedu;

double draw_v(const ModelSpec& model, SplitMix64& rng) {
  if (const auto* n = std::get_if<ModelSpec::Normal>(&model.family())) {
    return n->mean + std::sqrt(n->variance) * rng.normal();
  }
  if (const auto* g = std::get_if<ModelSpec::Gamma>(&model.family())) {
    return rng.gamma(g->shape);  // rate 1
  }
  const auto& m = std::get<ModelSpec::NormalMixture>(model.family());
  const auto& comp = rng.uniform01() < m.weight1 ? m.component1 : m.component2;
  return comp.mean + std::sqrt(comp.variance) * rng.normal();
}

}  // namespace

Sample draw_sample(const ModelSpec& model, std::size_t n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("draw_sample: n must be >= 1");
  std::vector<double> xs(n);
  for (std::size_t j = 0; j < n; ++j) {
    SplitMix64 rng(derive_stream_key(seed, j, kObservationStream));
    const bool zero = rng.uniform01() < model.p();  // P(B = 0) = p
    const double y = zero ? 0.0 : draw_v(model, rng);
    xs[j] = y + model.sigma() * rng.normal();
  }
  return Sample(std::move(xs), model.sigma());
}

std::vector<MCSummary> mc_study(const ModelSpec& model, std::size_t n,
                                const std::vector<double>& bandwidths, int replications,
                                std::uint64_t seed, const Kernel& kernel_k) {
  if (replications < 2) {
    throw std::invalid_argument("mc_study: needs at least 2 replications");
  }
  if (bandwidths.empty()) throw EmptyInput("mc_study: no bandwidths given");

  std::vector<MCSummary> summaries;
  summaries.reserve(bandwidths.size());
  for (std::size_t gi = 0; gi < bandwidths.size(); ++gi) {
    const double g = bandwidths[gi];
    std::vector<double> estimates(static_cast<std::size_t>(replications));

    std::atomic<int> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
      for (int r = cursor.fetch_add(1); r < replications; r = cursor.fetch_add(1)) {
        try {
          const std::uint64_t rep_seed =
              derive_stream_key(seed, gi, static_cast<std::uint64_t>(r), kReplicationSeed);
          const Sample sample = draw_sample(model, n, rep_seed);
          estimates[static_cast<std::size_t>(r)] = atom_raw(sample, g, kernel_k);
        } catch (...) {
          std::lock_guard<std::mutex> lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          return;
        }
      }
    };
    unsigned workers = std::min<unsigned>(std::thread::hardware_concurrency(),
                                          static_cast<unsigned>(replications));
    if (workers == 0) workers = 1;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    MCSummary s;
    s.g = g;
    s.replications = replications;
    s.n = n;
    s.seed = seed;
    double mean = 0.0;
    for (double e : estimates) mean += e;
    mean /= replications;
    double ss = 0.0;
    for (double e : estimates) ss += (e - mean) * (e - mean);
    s.sample_mean = mean;
    s.sample_sd = std::sqrt(ss / (replications - 1));
    s.asymptotic_sd = atom_sd_asymptotic(g, n, model.sigma(), kernel_k);
    s.corrected_sd = atom_sd_corrected(g, n, model.sigma(), kernel_k);
    s.estimates = std::move(estimates);
    summaries.push_back(std::move(s));
  }
  return summaries;
}

Histogram histogram(const std::vector<double>& values, std::size_t bin_count) {
  if (values.empty()) throw EmptyInput("histogram: no values");
  if (bin_count < 1) throw std::invalid_argument("histogram: bin_count must be >= 1");

  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const double width = (hi - lo) / static_cast<double>(bin_count);

  Histogram h;
  h.edges.resize(bin_count + 1);
  for (std::size_t i = 0; i <= bin_count; ++i) {
    h.edges[i] = lo + width * static_cast<double>(i);
  }
  h.edges.back() = hi;
  h.counts.assign(bin_count, 0);
  for (double v : values) {
    std::size_t idx;
    if (width > 0.0) {
      idx = static_cast<std::size_t>((v - lo) / width);
      if (idx >= bin_count) idx = bin_count - 1;  // right-closed final bin
    } else {
      idx = bin_count - 1;  // all values identical
    }
    ++h.counts[idx];
  }
  return h;
}

}  // namespace atomdeconv
