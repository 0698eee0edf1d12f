#include "gzk/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gzk/errors.hpp"

namespace gzk {

namespace {

template <class V>
auto find_key(V& vec, const std::string& key) {
  return std::find_if(vec.begin(), vec.end(), [&](const auto& p) { return p.first == key; });
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void NormReport::set(const std::string& name, double value) {
  if (auto it = find_key(values_, name); it != values_.end()) {
    it->second = value;
  } else {
    values_.emplace_back(name, value);
  }
}

void NormReport::set_meta(const std::string& key, const std::string& value) {
  if (auto it = find_key(meta_, key); it != meta_.end()) {
    it->second = value;
  } else {
    meta_.emplace_back(key, value);
  }
}

void NormReport::flag(const std::string& name) {
  if (std::find(flagged_.begin(), flagged_.end(), name) == flagged_.end()) flagged_.push_back(name);
}

double NormReport::get(const std::string& name) const {
  if (auto v = find(name)) return *v;
  throw ValidationError("report has no value named '" + name + "'");
}

std::optional<double> NormReport::find(const std::string& name) const {
  if (auto it = find_key(values_, name); it != values_.end()) return it->second;
  return std::nullopt;
}

std::optional<std::string> NormReport::meta(const std::string& key) const {
  if (auto it = find_key(meta_, key); it != meta_.end()) return it->second;
  return std::nullopt;
}

bool NormReport::all_finite() const {
  return std::all_of(values_.begin(), values_.end(), [&](const auto& p) {
    return std::isfinite(p.second) ||
           std::find(flagged_.begin(), flagged_.end(), p.first) != flagged_.end();
  });
}

void NormReport::merge(const NormReport& other, const std::string& prefix) {
  for (const auto& [k, v] : other.values_) set(prefix + k, v);
  for (const auto& k : other.flagged_) flag(prefix + k);
}

std::string NormReport::to_text() const {
  std::ostringstream out;
  for (const auto& [k, v] : meta_) out << "# " << k << " = " << v << '\n';
  for (const auto& [k, v] : values_) out << k << " = " << format_double(v) << '\n';
  return out.str();
}

std::string NormReport::to_json() const {
  nlohmann::ordered_json j;
  j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : meta_) j["metadata"][k] = v;
  j["values"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values_) {
    if (std::isfinite(v)) {
      j["values"][k] = v;
    } else {
      j["values"][k] = nullptr;
    }
  }
  j["flagged"] = flagged_;
  return j.dump(2) + "\n";
}

NormReport NormReport::from_text(const std::string& text) {
  NormReport r;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const bool is_meta = line.rfind("# ", 0) == 0;
    const std::string body = is_meta ? line.substr(2) : line;
    const auto eq = body.find(" = ");
    if (eq == std::string::npos) throw ValidationError("malformed report line: " + line);
    const std::string key = trim(body.substr(0, eq));
    const std::string val = trim(body.substr(eq + 3));
    if (is_meta) {
      r.set_meta(key, val);
    } else {
      r.set(key, std::stod(val));
    }
  }
  return r;
}

}  // namespace gzk
