#include "gzk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include "gzk/errors.hpp"
#include "gzk/experiment.hpp"

namespace gzk {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    out.push_back(item.substr(b, item.find_last_not_of(" \t") - b + 1));
  }
  return out;
}

// Maps a swept key to the configuration keys it sets.
std::vector<std::string> targets(const std::string& key) {
  if (key == "t") return {"commutator.times"};
  if (key == "r1") return {"weights.r1"};
  if (key == "r2") return {"weights.r2"};
  if (key == "k") return {"weights.k"};
  if (key == "resolution") return {"grid.nx", "grid.ny"};
  if (key.find('.') == std::string::npos) throw ValidationError("unknown sweep key '" + key + "'");
  return {key};
}

struct RowOutcome {
  int status = kOk;
  std::string message;
  std::string hash;
  NormReport report;
};

}  // namespace

std::size_t thread_count() {
  if (const char* env = std::getenv("GZK_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  return 1;
}

std::vector<SweepAxis> read_sweep_grid(const std::filesystem::path& path) {
  const ConfigMap m = read_ini(path);
  std::vector<SweepAxis> axes;
  for (const auto& [k, v] : m) {
    SweepAxis a{k, split_list(v)};
    if (a.values.empty()) throw ValidationError("sweep key '" + k + "' has no values");
    (void)targets(k);
    axes.push_back(std::move(a));
  }
  if (axes.empty()) throw ValidationError("sweep grid " + path.string() + " is empty");
  return axes;
}

std::string SweepResult::to_csv() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < columns.size(); ++i) out << columns[i] << (i + 1 < columns.size() ? "," : "\n");
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out << r[i] << (i + 1 < r.size() ? "," : "\n");
  }
  return out.str();
}

SweepResult sweep(const ConfigMap& base, const std::vector<SweepAxis>& axes, std::ostream& log) {
  // enumerate combinations, last axis fastest
  std::vector<std::vector<std::size_t>> combos{{}};
  for (const auto& a : axes) {
    std::vector<std::vector<std::size_t>> next;
    for (const auto& c : combos)
      for (std::size_t i = 0; i < a.values.size(); ++i) {
        auto d = c;
        d.push_back(i);
        next.push_back(std::move(d));
      }
    combos = std::move(next);
  }

  std::vector<RowOutcome> outcomes(combos.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < combos.size(); i = next++) {
      RowOutcome& o = outcomes[i];
      try {
        ConfigMap m = base;
        for (std::size_t a = 0; a < axes.size(); ++a) {
          for (const auto& t : targets(axes[a].key)) m[t] = axes[a].values[combos[i][a]];
          if (axes[a].key == "resolution") m.erase("commutator.resolutions");
        }
        const ExperimentConfig cfg = config_from_map(m);
        o.hash = cfg.hash();
        const ExperimentResult r = run_experiment(cfg);
        o.report = r.report;
        o.status = r.status();
        if (!r.failures.empty()) o.message = r.failures.front();
      } catch (const ValidationError& e) {
        o.status = kValidationFailed;
        o.message = e.what();
      } catch (const NumericalGuardError& e) {
        o.status = kNumericalGuard;
        o.message = e.what();
      }
    }
  };
  const std::size_t nthreads = std::min(thread_count(), combos.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  SweepResult res;
  std::vector<std::string> value_names;
  for (const auto& o : outcomes) {
    for (const auto& [name, v] : o.report.values()) {
      if (name.rfind("assert:", 0) == 0) continue;
      if (std::find(value_names.begin(), value_names.end(), name) == value_names.end()) value_names.push_back(name);
    }
  }
  res.columns.push_back("row");
  for (const auto& a : axes) res.columns.push_back(a.key);
  res.columns.push_back("status");
  for (const auto& n : value_names) res.columns.push_back("\"" + n + "\"");
  res.columns.push_back("config_hash");

  for (std::size_t i = 0; i < combos.size(); ++i) {
    const auto& o = outcomes[i];
    std::vector<std::string> row{std::to_string(i)};
    for (std::size_t a = 0; a < axes.size(); ++a) row.push_back(axes[a].values[combos[i][a]]);
    row.push_back(std::to_string(o.status));
    for (const auto& n : value_names) {
      const auto v = o.report.find(n);
      row.push_back(v ? format_double(*v) : "");
    }
    row.push_back(o.hash);
    res.rows.push_back(std::move(row));
    res.status = std::max(res.status, o.status);
    if (o.status != kOk) log << "row " << i << " status " << o.status << ": " << o.message << '\n';
  }

  // Summary rows: for each swept axis with numeric values, group rows that
  // agree on every other axis and fit log-log slopes / check monotonicity.
  for (std::size_t a = 0; a < axes.size(); ++a) {
    std::vector<double> xs;
    bool numeric = axes[a].values.size() >= 2;
    for (const auto& v : axes[a].values) {
      char* end = nullptr;
      const double x = std::strtod(v.c_str(), &end);
      numeric = numeric && end && *end == '\0' && x > 0.0;
      xs.push_back(x);
    }
    if (!numeric) continue;
    std::map<std::vector<std::size_t>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < combos.size(); ++i) {
      auto k = combos[i];
      k.erase(k.begin() + static_cast<long>(a));
      groups[k].push_back(i);
    }
    for (const auto& [other, members] : groups) {
      std::vector<std::string> slope_row{"summary"}, mono_row{"summary"};
      for (std::size_t b = 0; b < axes.size(); ++b) {
        if (b == a) {
          slope_row.push_back("slope_vs_" + axes[a].key);
          mono_row.push_back("decreasing_in_" + axes[a].key);
        } else {
          const std::size_t idx = combos[members.front()][b];
          slope_row.push_back(axes[b].values[idx]);
          mono_row.push_back(axes[b].values[idx]);
        }
      }
      slope_row.push_back("");
      mono_row.push_back("");
      for (const auto& n : value_names) {
        std::vector<double> px, py;
        bool ok = true;
        for (std::size_t i : members) {
          const auto v = outcomes[i].report.find(n);
          if (outcomes[i].status == kValidationFailed || outcomes[i].status == kNumericalGuard || !v) {
            ok = false;
            break;
          }
          px.push_back(xs[combos[i][a]]);
          py.push_back(*v);
        }
        const bool positive = ok && std::all_of(py.begin(), py.end(), [](double v) { return v > 0.0; });
        slope_row.push_back(positive ? format_double(loglog_slope(px, py)) : "");
        if (ok) {
          bool dec = true;
          for (std::size_t j = 1; j < py.size(); ++j) dec = dec && py[j] < py[j - 1];
          mono_row.push_back(dec ? "1" : "0");
        } else {
          mono_row.push_back("");
        }
      }
      slope_row.push_back("");
      mono_row.push_back("");
      res.rows.push_back(std::move(slope_row));
      res.rows.push_back(std::move(mono_row));
    }
  }
  return res;
}

}  // namespace gzk
