#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "heavytail/app/report.hpp"
#include "heavytail/norms.hpp"

namespace heavytail {

enum class Subcommand { Simulate, Estimate, Hrv, Pot, Evt, Condlimit };

Subcommand subcommand_from_string(const std::string& s);
const char* to_string(Subcommand s);

// Batch run configuration. Exactly one of input_path / generator must be
// set. All validation problems are collected and reported together before
// any work starts; no output file is written on a failed run.
struct RunConfig {
  Subcommand subcommand = Subcommand::Simulate;

  std::string input_path;  // CSV of observations
  std::string generator;   // preset, e.g. "iid-pareto-pair", "gaussian-copula:rho=0.5"

  Eigen::Index n = 10000;  // draws when generating
  std::uint64_t seed = 1;
  Norm norm = Norm::L1;

  Eigen::Index k = 0;          // order statistics; 0 = ceil(n^(2/3))
  double top_fraction = 0.01;  // angular / POT threshold as a top fraction
  double u = 0.99;             // tail-dependence level
  double pot_threshold = 0.0;  // absolute POT radius threshold; 0 = use top_fraction

  Eigen::Index block = 1000;  // evt block size (>= 2)
  std::vector<double> grid_levels = {0.5, 1.0, 2.0};  // evt comparison grid per axis

  std::vector<double> thresholds = {0.90, 0.925, 0.95, 0.975, 0.99};  // condlimit Y*-levels
  std::vector<double> c_grid = {0.5, 2.0, 4.0};
  double product_tol = 0.1;
  std::string y_map = "identity";  // identity | log | gaussian
  double oracle_rho = std::numeric_limits<double>::quiet_NaN();  // gaussian cond-cdf oracle

  std::string out_dir;  // empty = report returned but not written
  std::vector<std::string> plots;
};

// Dispatches to the named module and returns the report; when out_dir is
// set, writes report.json plus the subcommand's data files. Identical
// config + seed produce byte-identical outputs.
Report run(const RunConfig& config);

}  // namespace heavytail
