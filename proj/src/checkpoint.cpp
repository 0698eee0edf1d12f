#include "gzk/checkpoint.hpp"

#include <cstdio>
#include <fstream>

#include <nlohmann/json.hpp>

#include "gzk/errors.hpp"
#include "gzk/field_io.hpp"

namespace gzk {

void write_checkpoint(const std::filesystem::path& dir, const Trajectory& traj, const std::string& config_hash) {
  std::filesystem::create_directories(dir);
  nlohmann::ordered_json manifest;
  manifest["format"] = "gzk-trajectory";
  manifest["version"] = 1;
  manifest["config_hash"] = config_hash;
  if (!traj.empty()) {
    const auto& g = traj.grid();
    manifest["grid"] = {{"nx", g.nx()}, {"ny", g.ny()}, {"lx", g.lx()}, {"ly", g.ly()}};
  }
  manifest["times"] = traj.times();
  auto files = nlohmann::ordered_json::array();
  for (std::size_t m = 0; m < traj.size(); ++m) {
    char name[32];
    std::snprintf(name, sizeof name, "step_%05zu.gzkf", m);
    save_field(dir / name, traj[m]);
    files.push_back(name);
  }
  manifest["files"] = files;
  std::ofstream out(dir / "manifest.json");
  if (!out) throw ValidationError("cannot write checkpoint manifest in " + dir.string());
  out << manifest.dump(2) << '\n';
}

Checkpoint read_checkpoint(const std::filesystem::path& dir) {
  std::ifstream in(dir / "manifest.json");
  if (!in) throw ValidationError("no manifest.json in " + dir.string());
  nlohmann::json manifest;
  try {
    in >> manifest;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError("malformed checkpoint manifest: " + std::string(e.what()));
  }
  if (manifest.value("format", "") != "gzk-trajectory") throw ValidationError("not a gzk trajectory manifest");
  std::vector<double> times = manifest.at("times").get<std::vector<double>>();
  std::vector<Field> fields;
  for (const auto& name : manifest.at("files")) fields.push_back(load_field(dir / name.get<std::string>()));
  return {Trajectory(std::move(times), std::move(fields)), manifest.value("config_hash", "")};
}

}  // namespace gzk
