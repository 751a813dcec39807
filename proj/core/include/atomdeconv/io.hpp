#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "atomdeconv/estimators.hpp"
#include "atomdeconv/grid.hpp"
#include "atomdeconv/simulation.hpp"

namespace atomdeconv {

// All emitters use '.' decimals, LF line endings and 17 significant digits, so
// CSV and JSON round-trip to identical doubles.

std::string to_csv(const DensityGrid& grid);                     // header "x,value"
std::string to_json(const DensityGrid& grid);

std::string to_csv(const std::vector<MCSummary>& summaries);
// header "g,R,n,mean,sd,asymptotic_sd,corrected_sd,seed"
std::string to_json(const std::vector<MCSummary>& summaries);    // adds raw estimates

std::string values_to_csv(const std::vector<double>& values);    // header "x"
std::vector<double> read_values_csv(std::istream& in);           // inverse of the above

// Metadata sidecar for a plug-in estimate: atom estimate, bandwidths, grid.
std::string estimate_meta_json(const AtomEstimate& atom, double h,
                               const GridConfig& grid);
// Full JSON document: grid plus the same metadata.
std::string estimate_json(const DensityGrid& grid, const AtomEstimate& atom, double h);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace atomdeconv
