#pragma once

#include <filesystem>
#include <string>

#include "gzk/trajectory.hpp"

namespace gzk {

/// Writes one binary field file per sample (step_NNNNN.gzkf) and
/// manifest.json holding the times, file names, grid and config hash.
void write_checkpoint(const std::filesystem::path& dir, const Trajectory& traj, const std::string& config_hash);

struct Checkpoint {
  Trajectory trajectory;
  std::string config_hash;
};

Checkpoint read_checkpoint(const std::filesystem::path& dir);

}  // namespace gzk
