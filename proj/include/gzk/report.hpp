#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gzk {

/// Named norm values plus string metadata, kept in insertion order so that
/// serialized reports are byte-stable.
class NormReport {
 public:
  void set(const std::string& name, double value);
  void set_meta(const std::string& key, const std::string& value);
  /// Marks a value as allowed to be non-finite.
  void flag(const std::string& name);

  double get(const std::string& name) const;
  std::optional<double> find(const std::string& name) const;
  std::optional<std::string> meta(const std::string& key) const;

  const std::vector<std::pair<std::string, double>>& values() const noexcept { return values_; }
  const std::vector<std::pair<std::string, std::string>>& metadata() const noexcept { return meta_; }

  /// True when every unflagged value is finite.
  bool all_finite() const;

  /// Appends `other`'s values with names prefixed by `prefix`.
  void merge(const NormReport& other, const std::string& prefix = "");

  /// "# key = value" metadata lines, then one "name = value" line per value.
  std::string to_text() const;
  /// {"metadata": {...}, "values": {...}, "flagged": [...]}; non-finite values become null.
  std::string to_json() const;
  static NormReport from_text(const std::string& text);

 private:
  std::vector<std::pair<std::string, double>> values_;
  std::vector<std::pair<std::string, std::string>> meta_;
  std::vector<std::string> flagged_;
};

/// Shortest decimal that reads back to the same double.
std::string format_double(double v);

}  // namespace gzk
