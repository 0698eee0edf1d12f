#include "gzk/config.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "gzk/errors.hpp"
#include "gzk/field_io.hpp"
#include "gzk/report.hpp"
#include "gzk/transform.hpp"

namespace gzk {

namespace {

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

class Reader {
 public:
  explicit Reader(const ConfigMap& m) : m_(m) {}

  template <class T>
  T get(const std::string& key, T fallback) {
    auto it = m_.find(key);
    if (it == m_.end()) return fallback;
    used_[key] = it->second;
    return convert<T>(key, it->second);
  }

  ConfigMap used() const { return used_; }

  void reject_unknown() const {
    for (const auto& [k, v] : m_) {
      if (!used_.count(k)) throw ValidationError("unknown configuration key '" + k + "'");
    }
  }

 private:
  template <class T>
  static T convert(const std::string& key, const std::string& v) {
    try {
      if constexpr (std::is_same_v<T, std::string>) {
        return v;
      } else if constexpr (std::is_same_v<T, bool>) {
        if (v == "true" || v == "1" || v == "yes") return true;
        if (v == "false" || v == "0" || v == "no") return false;
        throw std::invalid_argument(v);
      } else if constexpr (std::is_integral_v<T>) {
        std::size_t pos = 0;
        const long long x = std::stoll(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        if (std::is_unsigned_v<T> && x < 0) throw std::invalid_argument(v);
        return static_cast<T>(x);
      } else {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return x;
      }
    } catch (const std::logic_error&) {
      throw ValidationError("configuration key '" + key + "' has invalid value '" + v + "'");
    }
  }

  const ConfigMap& m_;
  ConfigMap used_;
};

template <class T>
std::vector<T> parse_list(const std::string& key, const std::string& text) {
  std::vector<T> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    try {
      std::size_t pos = 0;
      if constexpr (std::is_integral_v<T>) {
        const long long v = std::stoll(item, &pos);
        if (v < 0 && std::is_unsigned_v<T>) throw std::invalid_argument(item);
        out.push_back(static_cast<T>(v));
      } else {
        out.push_back(std::stod(item, &pos));
      }
      if (pos != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw ValidationError("configuration key '" + key + "' has invalid list entry '" + item + "'");
    }
  }
  return out;
}

}  // namespace

std::vector<double> parse_doubles(const std::string& text) { return parse_list<double>("list", text); }

ConfigMap parse_ini(std::istream& in) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ValidationError(std::string("configuration parse error: ") + e.what());
  }
  ConfigMap m;
  for (const auto& [section, body] : tree) {
    if (body.empty()) {
      m[section] = trim(body.data());
      continue;
    }
    for (const auto& [key, value] : body) m[section + "." + key] = trim(value.data());
  }
  return m;
}

ConfigMap read_ini(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read configuration " + path.string());
  return parse_ini(in);
}

ExperimentConfig config_from_map(const ConfigMap& map) {
  Reader r(map);
  ExperimentConfig c;
  c.experiment = r.get<std::string>("experiment.name", c.experiment);
  c.seed = r.get<std::uint64_t>("experiment.seed", c.seed);
  c.nx = r.get<std::size_t>("grid.nx", c.nx);
  c.ny = r.get<std::size_t>("grid.ny", c.nx);
  c.lx = r.get<double>("grid.lx", c.lx);
  c.ly = r.get<double>("grid.ly", c.lx);
  c.weights.s = r.get<double>("weights.s", c.weights.s);
  c.weights.r1 = r.get<double>("weights.r1", c.weights.r1);
  c.weights.r2 = r.get<double>("weights.r2", c.weights.r1);
  c.weights.beta = r.get<double>("weights.beta", c.weights.beta);
  c.weights.k = r.get<int>("weights.k", c.weights.k);

  auto& s = c.solver;
  s.k = c.weights.k;
  s.s = c.weights.s;
  s.horizon = r.get<double>("solver.horizon", s.horizon);
  s.steps = r.get<std::size_t>("solver.steps", s.steps);
  s.substeps = r.get<std::size_t>("solver.substeps", s.substeps);
  s.picard_max_iterations = r.get<std::size_t>("solver.picard_max_iterations", s.picard_max_iterations);
  s.picard_tolerance = r.get<double>("solver.picard_tolerance", s.picard_tolerance);
  s.c = r.get<double>("solver.c", s.c);
  s.gamma = r.get<double>("solver.gamma", s.gamma);
  s.t_max = r.get<double>("solver.t_max", s.t_max);
  s.nonlinear = r.get<bool>("solver.nonlinear", s.nonlinear);
  s.override_time = r.get<bool>("solver.override_time", s.override_time);
  c.use_local_time = r.get<bool>("solver.use_local_time", c.use_local_time);

  auto& d = c.data;
  d.kind = r.get<std::string>("data.kind", d.kind);
  d.sigma = r.get<double>("data.sigma", d.sigma);
  d.amplitude = r.get<double>("data.amplitude", d.amplitude);
  d.center_x = r.get<double>("data.center_x", d.center_x);
  d.center_y = r.get<double>("data.center_y", d.center_y);
  d.mode_a = r.get<int>("data.mode_a", d.mode_a);
  d.mode_b = r.get<int>("data.mode_b", d.mode_b);
  d.path = r.get<std::string>("data.path", d.path);

  if (auto v = r.get<std::string>("commutator.times", ""); !v.empty()) c.times = parse_list<double>("commutator.times", v);
  if (auto v = r.get<std::string>("commutator.resolutions", ""); !v.empty()) {
    c.resolutions = parse_list<std::size_t>("commutator.resolutions", v);
  }
  if (auto v = r.get<std::string>("commutator.alphas", ""); !v.empty()) c.alphas = parse_list<double>("commutator.alphas", v);
  if (auto v = r.get<std::string>("solver.amplitudes", ""); !v.empty()) {
    c.amplitudes = parse_list<double>("solver.amplitudes", v);
  }
  if (auto v = r.get<std::string>("solver.powers", ""); !v.empty()) c.powers = parse_list<int>("solver.powers", v);
  c.cusp_order = r.get<int>("commutator.cusp_order", c.cusp_order);
  c.tolerance = r.get<double>("commutator.tolerance", c.tolerance);
  c.slope_limit = r.get<double>("commutator.slope_limit", c.slope_limit);
  c.order_horizon = r.get<double>("convergence.order_horizon", c.order_horizon);
  c.order_steps = r.get<std::size_t>("convergence.order_steps", c.order_steps);

  c.out_dir = r.get<std::string>("output.dir", c.out_dir.string());
  c.checkpoint = r.get<bool>("output.checkpoint", c.checkpoint);
  r.reject_unknown();
  c.raw = r.used();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) { return config_from_map(read_ini(path)); }

GridSpec ExperimentConfig::grid() const { return make_grid(nx, ny, lx, ly); }
GridSpec ExperimentConfig::grid(std::size_t n) const { return make_grid(n, n, lx, ly); }

void ExperimentConfig::validate() const {
  if (std::find(experiment_names().begin(), experiment_names().end(), experiment) == experiment_names().end()) {
    throw ValidationError("unknown experiment '" + experiment + "'");
  }
  (void)grid();
  for (auto n : resolutions) (void)grid(n);
  weights.validate();
  solver.validate();
  if (experiment == "commutator-beta" && !(weights.beta > 0.0)) {
    throw ValidationError("commutator-beta needs beta > 0 (got beta=" + format_double(weights.beta) + ")");
  }
  static const std::vector<std::string> kinds{"gaussian", "mode", "file", "zero", "random"};
  if (std::find(kinds.begin(), kinds.end(), data.kind) == kinds.end()) {
    throw ValidationError("unknown data.kind '" + data.kind + "'");
  }
  if (data.kind == "gaussian" && !(data.sigma > 0.0)) throw ValidationError("data.sigma must be positive");
  if (data.kind == "file" && data.path.empty()) throw ValidationError("data.kind=file needs data.path");
  for (double a : alphas) {
    if (!(a > 0.0 && a < 1.0)) throw ValidationError("alpha=" + format_double(a) + " must lie in (0,1)");
  }
  for (int k : powers) {
    if (k < 1) throw ValidationError("k=" + std::to_string(k) + " must be at least 1");
  }
  if (order_horizon < 0.0) throw ValidationError("convergence.order_horizon must be nonnegative");
  if (order_steps == 1) throw ValidationError("convergence.order_steps must be at least 2");
  if (times.empty()) throw ValidationError("commutator.times is empty");
  if (cusp_order < 0 || cusp_order > 20) throw ValidationError("commutator.cusp_order must lie in [0, 20]");
}

std::string sha256_hex(const std::string& text) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[digest[i] >> 4];
    out += hex[digest[i] & 15];
  }
  return out;
}

std::string ExperimentConfig::hash() const {
  std::string canon;
  for (const auto& [k, v] : raw) {
    if (k.rfind("output.", 0) == 0) continue;
    canon += k + "=" + v + "\n";
  }
  canon += "experiment.name=" + experiment + "\n";
  canon += "experiment.seed=" + std::to_string(seed) + "\n";
  canon += "solver.override_time=" + std::string(solver.override_time ? "true" : "false") + "\n";
  return sha256_hex(canon).substr(0, 16);
}

Field make_initial_data(const ExperimentConfig& cfg, const GridSpec& grid) {
  const auto& d = cfg.data;
  if (d.kind == "zero") return Field::zeros(grid);
  if (d.kind == "gaussian") {
    const double s2 = 2.0 * d.sigma * d.sigma;
    return Field::sample(grid, [&](double x, double y) {
      const double dx = x - d.center_x, dy = y - d.center_y;
      return complex{d.amplitude * std::exp(-(dx * dx + dy * dy) / s2)};
    });
  }
  if (d.kind == "mode") {
    const double kx = 2.0 * std::numbers::pi * d.mode_a / grid.lx();
    const double ky = 2.0 * std::numbers::pi * d.mode_b / grid.ly();
    return Field::sample(grid, [&](double x, double y) { return complex{d.amplitude * std::cos(kx * x + ky * y)}; });
  }
  if (d.kind == "random") {
    // Gaussian envelope times a seeded random band-limited modulation.
    std::mt19937_64 rng(cfg.seed);
    std::normal_distribution<double> normal;
    Field c(grid, Representation::Spectral);
    const auto& xi = grid.xi();
    const auto& eta = grid.eta();
    for (std::size_t i = 0; i < grid.nx(); ++i)
      for (std::size_t j = 0; j < grid.ny(); ++j) {
        const double decay = std::exp(-0.5 * (xi[i] * xi[i] + eta[j] * eta[j]) * d.sigma * d.sigma);
        c(i, j) = decay * complex{normal(rng), normal(rng)};
      }
    hermitian_symmetrize(c);
    Field mod = real_part(inverse(c));
    double peak = 0.0;
    for (const auto& v : mod.values()) peak = std::max(peak, std::abs(v));
    const double s2 = 2.0 * d.sigma * d.sigma;
    for (std::size_t i = 0; i < grid.nx(); ++i)
      for (std::size_t j = 0; j < grid.ny(); ++j) {
        const double x = grid.x(i), y = grid.y(j);
        mod(i, j) *= (peak > 0 ? d.amplitude / peak : 0.0) * std::exp(-(x * x + y * y) / (4.0 * s2));
      }
    return mod;
  }
  Field f = to_physical(load_field(d.path));
  if (!(f.grid() == grid)) throw ValidationError("data file " + d.path + " does not match the configured grid");
  return f;
}

}  // namespace gzk
