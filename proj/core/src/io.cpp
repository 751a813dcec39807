#include "atomdeconv/io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <stdexcept>

#include <json.hpp>

namespace atomdeconv {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

nlohmann::json config_json(const GridConfig& config) {
  return {{"n_points", config.n_points}, {"eta", config.eta}, {"delta", config.delta()}};
}

nlohmann::json grid_json(const DensityGrid& grid) {
  return {{"xs", grid.xs},
          {"values", grid.values},
          {"config", config_json(grid.config)},
          {"estimator_tag", grid.estimator_tag}};
}

nlohmann::json atom_json(const AtomEstimate& atom) {
  return {{"p_raw", atom.raw},
          {"p_hat", atom.value},
          {"g", atom.bandwidth},
          {"eps_n", atom.eps},
          {"truncated", atom.truncated}};
}

nlohmann::json summary_json(const MCSummary& s) {
  return {{"g", s.g},
          {"R", s.replications},
          {"n", s.n},
          {"mean", s.sample_mean},
          {"sd", s.sample_sd},
          {"asymptotic_sd", s.asymptotic_sd},
          {"corrected_sd", s.corrected_sd},
          {"seed", s.seed},
          {"estimates", s.estimates}};
}

}  // namespace

std::string to_csv(const DensityGrid& grid) {
  std::string out = "x,value\n";
  for (std::size_t i = 0; i < grid.xs.size(); ++i) {
    out += fmt(grid.xs[i]);
    out += ',';
    out += fmt(grid.values[i]);
    out += '\n';
  }
  return out;
}

std::string to_json(const DensityGrid& grid) { return grid_json(grid).dump(); }

std::string to_csv(const std::vector<MCSummary>& summaries) {
  std::string out = "g,R,n,mean,sd,asymptotic_sd,corrected_sd,seed\n";
  for (const auto& s : summaries) {
    out += fmt(s.g);
    out += ',' + std::to_string(s.replications);
    out += ',' + std::to_string(s.n);
    out += ',' + fmt(s.sample_mean);
    out += ',' + fmt(s.sample_sd);
    out += ',' + fmt(s.asymptotic_sd);
    out += ',' + fmt(s.corrected_sd);
    out += ',' + std::to_string(s.seed);
    out += '\n';
  }
  return out;
}

std::string to_json(const std::vector<MCSummary>& summaries) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : summaries) arr.push_back(summary_json(s));
  return arr.dump();
}

std::string values_to_csv(const std::vector<double>& values) {
  std::string out = "x\n";
  for (double v : values) {
    out += fmt(v);
    out += '\n';
  }
  return out;
}

std::vector<double> read_values_csv(std::istream& in) {
  std::vector<double> values;
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (line == "x") continue;  // header
    }
    std::size_t pos = 0;
    double v;
    try {
      v = std::stod(line, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("read_values_csv: cannot parse line '" + line + "'");
    }
    if (pos != line.size()) {
      throw std::invalid_argument("read_values_csv: trailing characters in '" + line + "'");
    }
    values.push_back(v);
  }
  return values;
}

std::string estimate_meta_json(const AtomEstimate& atom, double h,
                               const GridConfig& grid) {
  nlohmann::json j = {{"atom", atom_json(atom)}, {"h", h}, {"grid", config_json(grid)}};
  return j.dump();
}

std::string estimate_json(const DensityGrid& grid, const AtomEstimate& atom, double h) {
  nlohmann::json j = grid_json(grid);
  j["atom"] = atom_json(atom);
  j["h"] = h;
  return j.dump();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace atomdeconv
