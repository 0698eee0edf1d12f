#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "gzk/field.hpp"
#include "gzk/solver.hpp"
#include "gzk/weight_params.hpp"

namespace gzk {

inline const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"commutator", "commutator-beta", "phi-growth", "persistence",
                                              "picard-contraction", "convergence", "stein-calibration"};
  return names;
}

struct DataSpec {
  std::string kind = "gaussian";  // gaussian | mode | file | zero | random
  double sigma = 1.0;
  double amplitude = 1.0;
  double center_x = 0.0, center_y = 0.0;
  int mode_a = 1, mode_b = 1;
  std::string path;
};

/// Flat "section.key" -> value view of an INI file.
using ConfigMap = std::map<std::string, std::string>;

struct ExperimentConfig {
  std::string experiment = "commutator";
  std::size_t nx = 256, ny = 256;
  double lx = 40.0, ly = 40.0;
  WeightParams weights;
  SolverConfig solver;
  bool use_local_time = true;  // replace solver.horizon by local_time(u0)
  DataSpec data;
  std::uint64_t seed = 0;

  // experiment parameters
  std::vector<double> times{1.0};
  std::vector<std::size_t> resolutions;  // empty: just nx
  std::vector<double> alphas{0.25, 0.5, 0.75};
  std::vector<double> amplitudes;        // picard-contraction small-data scan
  std::vector<int> powers;               // picard-contraction k list (empty: weights.k)
  int cusp_order = 6;
  double tolerance = 0.0;                // 0: experiment default
  double slope_limit = 1.05;
  double order_horizon = 0.0;            // convergence: horizon of the order study (0: run horizon)
  std::size_t order_steps = 0;           // convergence: intervals of the order study (0: solver.steps)

  std::filesystem::path out_dir = "gzk-out";
  bool checkpoint = false;  // write solver trajectories as field files + manifest

  ConfigMap raw;  // every key that was read, canonical form

  GridSpec grid() const;
  GridSpec grid(std::size_t n) const;
  /// Admissibility checks run before any computation.
  void validate() const;
  /// Short SHA-256 of the canonical "section.key=value" lines.
  std::string hash() const;
};

ConfigMap parse_ini(std::istream& in);
ConfigMap read_ini(const std::filesystem::path& path);
ExperimentConfig config_from_map(const ConfigMap& map);
ExperimentConfig load_config(const std::filesystem::path& path);

/// Initial data described by cfg.data on `grid`.
Field make_initial_data(const ExperimentConfig& cfg, const GridSpec& grid);

std::vector<double> parse_doubles(const std::string& text);
std::string sha256_hex(const std::string& text);

}  // namespace gzk
