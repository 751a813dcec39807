// Command line front end: simulation, estimation, Monte Carlo tables, kernel
// diagnostics and standard-deviation predictors, emitting CSV/JSON for
// external plotting.
//
// Exit codes: 0 success, 2 usage or validation error, 3 numerical domain
// error (e.g. the damping factor would overflow).

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "atomdeconv/asymptotics.hpp"
#include "atomdeconv/errors.hpp"
#include "atomdeconv/estimators.hpp"
#include "atomdeconv/io.hpp"
#include "atomdeconv/kernels.hpp"
#include "atomdeconv/models.hpp"
#include "atomdeconv/quadrature.hpp"
#include "atomdeconv/simulation.hpp"

namespace {

using namespace atomdeconv;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

double require_probability(double p, const std::string& flag) {
  if (!(p >= 0.0 && p < 1.0)) {
    throw std::invalid_argument("invalid " + flag + ": must lie in [0, 1), got " +
                                std::to_string(p));
  }
  return p;
}

std::vector<double> parse_number_list(const std::string& text, const std::string& flag) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != item.size()) {
      throw std::invalid_argument("invalid " + flag + ": cannot parse '" + item + "'");
    }
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("invalid " + flag + ": empty list");
  return out;
}

// --model normal:<mean>,<variance> | gamma:<shape> | mixture:<w1>,<m1>,<v1>,<w2>,<m2>,<v2>
ModelSpec parse_model(const std::string& text, double p, double sigma) {
  const auto colon = text.find(':');
  const std::string family = text.substr(0, colon);
  const std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (family == "normal") {
    const auto v = parse_number_list(args, "--model");
    if (v.size() != 2) {
      throw std::invalid_argument("invalid --model: normal takes mean,variance");
    }
    return ModelSpec::normal(p, v[0], v[1], sigma);
  }
  if (family == "gamma") {
    const auto v = parse_number_list(args, "--model");
    if (v.size() != 1) throw std::invalid_argument("invalid --model: gamma takes shape");
    return ModelSpec::gamma(p, v[0], sigma);
  }
  if (family == "mixture") {
    const auto v = parse_number_list(args, "--model");
    if (v.size() != 6) {
      throw std::invalid_argument(
          "invalid --model: mixture takes w1,mean1,var1,w2,mean2,var2");
    }
    if (std::abs(v[0] + v[3] - 1.0) > 1e-12) {
      throw std::invalid_argument("invalid --model: mixture weights must sum to 1");
    }
    return ModelSpec::normal_mixture(p, v[0], {v[1], v[2]}, {v[4], v[5]}, sigma);
  }
  throw std::invalid_argument("invalid --model: unknown family '" + family + "'");
}

std::string sidecar_path(const std::string& out) {
  const auto dot = out.find_last_of('.');
  const auto slash = out.find_last_of("/\\");
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) {
    return out + ".json";
  }
  return out.substr(0, dot) + ".json";
}

struct SimulateOptions {
  std::string model_text = "normal:3,9";
  double p = 0.1;
  double sigma = 1.0;
  std::size_t n = 1000;
  std::uint64_t seed = 1;
  std::string out = "sample.csv";
};

int run_simulate(const SimulateOptions& opt) {
  require_probability(opt.p, "--p");
  const ModelSpec model = parse_model(opt.model_text, opt.p, opt.sigma);
  const Sample sample = draw_sample(model, opt.n, opt.seed);
  write_text_file(opt.out, values_to_csv(sample.values));
  std::cout << "wrote " << sample.size() << " observations to " << opt.out << "\n";
  return kExitOk;
}

struct EstimateOptions {
  std::string in;
  std::string preset;
  std::uint64_t seed = 1;
  double sigma = 1.0;
  double h = 0.0;
  double g = 0.0;
  double eps = 0.05;
  double p = 0.0;  // known-p mode
  std::string mode = "plugin";
  std::string kernel_w = "deconv_w";
  std::string kernel_k = "atom_k";
  std::size_t grid_n = 1 << 16;
  double coverage = 64.0;
  bool clip = false;
  std::string out = "estimate.csv";
  std::string format = "csv";
};

int run_estimate(EstimateOptions opt) {
  std::vector<double> values;
  if (!opt.preset.empty()) {
    ModelSpec model = ModelSpec::normal(0.1, 3.0, 9.0, 1.0);
    if (opt.preset == "fig5") {
      opt.h = 0.58;
      opt.g = 0.5;
    } else if (opt.preset == "fig7") {
      model = ModelSpec::gamma(0.25, 8.0, 1.0);
      opt.h = 0.6;
      opt.g = 0.6;
    } else {
      throw std::invalid_argument("invalid --preset: '" + opt.preset +
                                  "' (estimate presets: fig5, fig7)");
    }
    opt.sigma = model.sigma();
    values = draw_sample(model, 1000, opt.seed).values;
  } else {
    if (opt.in.empty()) {
      throw std::invalid_argument("estimate: either --in or --preset is required");
    }
    std::ifstream in(opt.in);
    if (!in) throw std::invalid_argument("estimate: cannot open input file " + opt.in);
    values = read_values_csv(in);
  }
  if (!(opt.h > 0.0)) throw std::invalid_argument("invalid --h: must be positive");

  const Sample sample(std::move(values), opt.sigma);
  const Kernel& kw = Kernel::by_name(opt.kernel_w);
  const Kernel& kk = Kernel::by_name(opt.kernel_k);

  nlohmann::json meta;
  meta["mode"] = opt.mode;
  meta["h"] = opt.h;
  meta["n"] = sample.size();
  meta["sigma"] = opt.sigma;

  DensityGrid grid{{}, {}, GridConfig::for_bandwidth(opt.h, opt.grid_n, opt.coverage), ""};
  if (opt.mode == "plugin") {
    if (!(opt.g > 0.0)) throw std::invalid_argument("invalid --g: must be positive");
    EstimatorConfig config(opt.h, opt.g, opt.eps, kw, kk, opt.grid_n, opt.coverage);
    PluginGridResult result = density_plugin_grid(sample, config);
    grid = std::move(result.grid);
    meta["atom"] = {{"p_raw", result.atom.raw},
                    {"p_hat", result.atom.value},
                    {"g", result.atom.bandwidth},
                    {"eps_n", result.atom.eps},
                    {"truncated", result.atom.truncated}};
    std::cout << "p_raw = " << result.atom.raw << ", p_hat = " << result.atom.value
              << "\n";
  } else if (opt.mode == "known-p") {
    require_probability(opt.p, "--p");
    grid = density_known_atom_grid(sample, opt.h, opt.p, kw, grid.config);
    meta["p"] = opt.p;
  } else if (opt.mode == "classical") {
    grid = deconv_density_grid(sample, opt.h, kw, grid.config);
  } else {
    throw std::invalid_argument("invalid --mode: '" + opt.mode +
                                "' (plugin, known-p, classical)");
  }
  if (opt.clip) grid = clip_and_renormalize(std::move(grid));
  meta["grid"] = {{"n_points", grid.config.n_points},
                  {"eta", grid.config.eta},
                  {"delta", grid.config.delta()}};
  meta["estimator_tag"] = grid.estimator_tag;

  if (opt.format == "csv") {
    write_text_file(opt.out, to_csv(grid));
    write_text_file(sidecar_path(opt.out), meta.dump());
    std::cout << "wrote grid to " << opt.out << " and metadata to "
              << sidecar_path(opt.out) << "\n";
  } else if (opt.format == "json") {
    nlohmann::json doc = nlohmann::json::parse(to_json(grid));
    doc["meta"] = meta;
    write_text_file(opt.out, doc.dump());
    std::cout << "wrote grid and metadata to " << opt.out << "\n";
  } else {
    throw std::invalid_argument("invalid --format: '" + opt.format + "' (csv, json)");
  }
  return kExitOk;
}

struct McTableOptions {
  std::string preset;
  std::string model_text = "normal:3,9";
  double p = 0.1;
  double sigma = 1.0;
  std::size_t n = 1000;
  std::string g_list;
  int reps = 200;
  bool full = false;
  std::uint64_t seed = 1;
  std::string kernel_k = "atom_k";
  std::string out = "mc_table.csv";
  std::string format = "csv";
};

int run_mc_table(McTableOptions opt) {
  std::vector<double> bandwidths;
  ModelSpec model = ModelSpec::normal(0.1, 3.0, 9.0, 1.0);
  if (opt.preset == "table1") {
    bandwidths = {0.5, 0.55, 0.6, 0.65};
    opt.n = 1000;
  } else if (opt.preset == "table2") {
    model = ModelSpec::normal(0.1, 3.0, 9.0, 0.3);
    bandwidths = {0.45, 0.5, 0.6, 0.65};
    opt.n = 500;
  } else if (opt.preset.empty()) {
    require_probability(opt.p, "--p");
    model = parse_model(opt.model_text, opt.p, opt.sigma);
    if (opt.g_list.empty()) {
      throw std::invalid_argument("mc-table: --g is required without a preset");
    }
  } else {
    throw std::invalid_argument("invalid --preset: '" + opt.preset +
                                "' (mc-table presets: table1, table2)");
  }
  if (!opt.g_list.empty()) bandwidths = parse_number_list(opt.g_list, "--g");
  const int reps = opt.full ? 1000 : opt.reps;

  const auto summaries =
      mc_study(model, opt.n, bandwidths, reps, opt.seed, Kernel::by_name(opt.kernel_k));

  const std::string content =
      opt.format == "json" ? to_json(summaries) : to_csv(summaries);
  if (opt.format != "csv" && opt.format != "json") {
    throw std::invalid_argument("invalid --format: '" + opt.format + "' (csv, json)");
  }
  write_text_file(opt.out, content);
  std::cout << "wrote " << summaries.size() << " rows to " << opt.out << "\n";
  return kExitOk;
}

struct KernelInfoOptions {
  std::string kernel = "deconv_w";
  double h = 0.5;
  double sigma = 1.0;
};

int run_kernel_info(const KernelInfoOptions& opt) {
  const Kernel& k = Kernel::by_name(opt.kernel);
  std::printf("kernel:            %s\n", k.name().c_str());
  std::printf("alpha:             %g\n", k.alpha());
  std::printf("edge constant:     %g\n", k.edge_const());
  if (k.origin_order()) {
    std::printf("origin order:      %g (constant %g)\n", k.origin_order()->order,
                k.origin_order()->constant);
  }
  std::printf("ft integral:       %.6f\n", k.ft_integral());

  std::printf("moments (tol 1e-6):\n");
  for (int j = 0; j <= 4; ++j) {
    try {
      std::printf("  j=%d:             %.8f\n", j, kernel_moment(k, j, 1e-6));
    } catch (const NonIntegrableMoment&) {
      std::printf("  j=%d:             diverges\n", j);
    }
  }

  double residual = 0.0;
  for (int i = 0; i <= 100; ++i) {
    const double x = -20.0 + 0.4 * i;
    const double direct =
        integrate([&](double t) { return std::cos(t * x) * k.ft(t); }, 0.0, 1.0, 1e-12) /
        std::numbers::pi;
    residual = std::max(residual, std::abs(k.closed_form(x) - direct));
  }
  std::printf("fourier residual:  %.3e  (101 points on [-20, 20])\n", residual);
  std::printf("damped-integral ratio at h=%g, sigma=%g: %.6f\n", opt.h, opt.sigma,
              damped_ft_integral_ratio(k, opt.h, opt.sigma));
  return kExitOk;
}

struct AsymptoticsOptions {
  std::size_t n = 1000;
  double sigma = 1.0;
  std::string g_list;
  double h = 0.0;
  double p = 0.0;
  std::string kernel_w = "deconv_w";
  std::string kernel_k = "atom_k";
  std::string format = "text";
};

int run_asymptotics(const AsymptoticsOptions& opt) {
  const Kernel& kw = Kernel::by_name(opt.kernel_w);
  const Kernel& kk = Kernel::by_name(opt.kernel_k);
  const BandwidthSchedule schedule = default_schedule(opt.n, opt.sigma);

  nlohmann::json doc;
  doc["schedule"] = {{"n", schedule.n},         {"sigma", schedule.sigma},
                     {"eta_n", schedule.eta_n}, {"delta_n", schedule.delta_n},
                     {"h", schedule.h},         {"g", schedule.g},
                     {"eps_n", schedule.eps_n}};
  if (!opt.g_list.empty()) {
    doc["atom_sd"] = nlohmann::json::array();
    for (double g : parse_number_list(opt.g_list, "--g")) {
      doc["atom_sd"].push_back({{"g", g},
                                {"asymptotic", atom_sd_asymptotic(g, opt.n, opt.sigma, kk)},
                                {"corrected", atom_sd_corrected(g, opt.n, opt.sigma, kk)},
                                {"ratio", damped_ft_integral_ratio(kk, g, opt.sigma)}});
    }
  }
  if (opt.h > 0.0) {
    require_probability(opt.p, "--p");
    doc["density_sd"] = {
        {"h", opt.h},
        {"p", opt.p},
        {"asymptotic", density_sd_asymptotic(opt.h, opt.n, opt.sigma, opt.p, kw)},
        {"ratio", damped_ft_integral_ratio(kw, opt.h, opt.sigma)}};
  }

  if (opt.format == "json") {
    std::cout << doc.dump() << "\n";
    return kExitOk;
  }
  std::printf("schedule for n=%zu, sigma=%g:\n", opt.n, opt.sigma);
  std::printf("  eta_n=%.6f delta_n=%.6f h=%.6f g=%.6f eps_n=%.6f\n", schedule.eta_n,
              schedule.delta_n, schedule.h, schedule.g, schedule.eps_n);
  if (doc.contains("atom_sd")) {
    std::printf("atom-mass SD predictors (kernel %s):\n", kk.name().c_str());
    for (const auto& row : doc["atom_sd"]) {
      std::printf("  g=%-6g asymptotic=%-12.6g corrected=%-12.6g ratio=%.6f\n",
                  row["g"].get<double>(), row["asymptotic"].get<double>(),
                  row["corrected"].get<double>(), row["ratio"].get<double>());
    }
  }
  if (doc.contains("density_sd")) {
    std::printf("density SD predictor (kernel %s):\n", kw.name().c_str());
    std::printf("  h=%-6g p=%-6g asymptotic=%-12.6g ratio=%.6f\n", opt.h, opt.p,
                doc["density_sd"]["asymptotic"].get<double>(),
                doc["density_sd"]["ratio"].get<double>());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deconvolution estimation for distributions with an atom at zero"};
  app.require_subcommand(1);
  // --h is a bandwidth here, so help is long-form only
  app.set_help_flag("--help", "print help and exit");

  SimulateOptions sim;
  auto* simulate = app.add_subcommand("simulate", "draw a sample X = B V + sigma Z");
  simulate->set_help_flag("--help", "print help and exit");
  simulate->add_option("--model", sim.model_text,
                       "normal:<mean>,<var> | gamma:<shape> | mixture:<w1>,<m1>,<v1>,<w2>,<m2>,<v2>");
  simulate->add_option("--p", sim.p, "atom mass P(Y = 0)");
  simulate->add_option("--sigma", sim.sigma, "noise standard deviation");
  simulate->add_option("--n", sim.n, "sample size")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "RNG seed");
  simulate->add_option("--out", sim.out, "output CSV path");

  EstimateOptions est;
  auto* estimate = app.add_subcommand("estimate", "density and atom-mass estimation");
  estimate->set_help_flag("--help", "print help and exit");
  estimate->add_option("--in", est.in, "sample CSV (header 'x', one value per line)");
  estimate->add_option("--preset", est.preset, "fig5 | fig7 (simulate + estimate)");
  estimate->add_option("--seed", est.seed, "seed for --preset");
  estimate->add_option("--sigma", est.sigma, "noise standard deviation");
  estimate->add_option("--h", est.h, "density bandwidth");
  estimate->add_option("--g", est.g, "atom bandwidth (plugin mode)");
  estimate->add_option("--eps", est.eps, "truncation level eps_n in (0,1)");
  estimate->add_option("--mode", est.mode, "plugin | known-p | classical");
  estimate->add_option("--p", est.p, "atom mass for --mode known-p");
  estimate->add_option("--kernel-w", est.kernel_w, "density kernel name");
  estimate->add_option("--kernel-k", est.kernel_k, "atom kernel name");
  estimate->add_option("--grid-n", est.grid_n, "grid size (power of two)");
  estimate->add_option("--coverage", est.coverage, "frequency coverage factor");
  estimate->add_flag("--clip", est.clip, "clip negatives and renormalise");
  estimate->add_option("--out", est.out, "output path");
  estimate->add_option("--format", est.format, "csv | json");

  McTableOptions mc;
  auto* mc_table = app.add_subcommand("mc-table", "Monte Carlo study of the atom estimate");
  mc_table->set_help_flag("--help", "print help and exit");
  mc_table->add_option("--preset", mc.preset, "table1 | table2");
  mc_table->add_option("--model", mc.model_text, "model (see simulate)");
  mc_table->add_option("--p", mc.p, "atom mass");
  mc_table->add_option("--sigma", mc.sigma, "noise standard deviation");
  mc_table->add_option("--n", mc.n, "sample size")->check(CLI::PositiveNumber);
  mc_table->add_option("--g", mc.g_list, "comma-separated bandwidth list");
  mc_table->add_option("--reps", mc.reps, "replications")->check(CLI::Range(2, 1000000));
  mc_table->add_flag("--full", mc.full, "run the full 1000 replications");
  mc_table->add_option("--seed", mc.seed, "study seed");
  mc_table->add_option("--kernel-k", mc.kernel_k, "atom kernel name");
  mc_table->add_option("--out", mc.out, "output path");
  mc_table->add_option("--format", mc.format, "csv | json");

  KernelInfoOptions ki;
  auto* kernel_info = app.add_subcommand("kernel-info", "kernel constants and diagnostics");
  kernel_info->set_help_flag("--help", "print help and exit");
  kernel_info->add_option("--kernel", ki.kernel, "deconv_w | atom_k | sextic_w");
  kernel_info->add_option("--h", ki.h, "bandwidth for the damped-integral ratio");
  kernel_info->add_option("--sigma", ki.sigma, "noise standard deviation");

  AsymptoticsOptions asy;
  auto* asymptotics =
      app.add_subcommand("asymptotics", "bandwidth schedule and SD predictors");
  asymptotics->set_help_flag("--help", "print help and exit");
  asymptotics->add_option("--n", asy.n, "sample size")->check(CLI::PositiveNumber);
  asymptotics->add_option("--sigma", asy.sigma, "noise standard deviation");
  asymptotics->add_option("--g", asy.g_list, "comma-separated atom bandwidths");
  asymptotics->add_option("--h", asy.h, "density bandwidth");
  asymptotics->add_option("--p", asy.p, "atom mass for the density SD");
  asymptotics->add_option("--kernel-w", asy.kernel_w, "density kernel name");
  asymptotics->add_option("--kernel-k", asy.kernel_k, "atom kernel name");
  asymptotics->add_option("--format", asy.format, "text | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (estimate->parsed()) return run_estimate(est);
    if (mc_table->parsed()) return run_mc_table(mc);
    if (kernel_info->parsed()) return run_kernel_info(ki);
    if (asymptotics->parsed()) return run_asymptotics(asy);
  } catch (const NumericError& e) {
    std::cerr << "numerical domain error: " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
