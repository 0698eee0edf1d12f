#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "gzk/config.hpp"

namespace gzk {

/// One swept key ("section.key", or the shorthands t, r1, r2, k, resolution)
/// with its list of values.
struct SweepAxis {
  std::string key;
  std::vector<std::string> values;
};

/// Reads "key = v1, v2, ..." lines (INI sections allowed: [weights] r1 = ...).
std::vector<SweepAxis> read_sweep_grid(const std::filesystem::path& path);

struct SweepResult {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;  // data rows then summary rows
  int status = 0;
  std::string to_csv() const;
};

/// Cartesian product of the axes over the template; rows run on
/// GZK_THREADS worker threads (default 1), results are collected in order.
SweepResult sweep(const ConfigMap& base, const std::vector<SweepAxis>& axes, std::ostream& log);

/// Thread count from GZK_THREADS (>= 1).
std::size_t thread_count();

}  // namespace gzk
