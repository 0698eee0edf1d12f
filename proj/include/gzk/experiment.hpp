#pragma once

#include <string>
#include <vector>

#include "gzk/config.hpp"
#include "gzk/report.hpp"

namespace gzk {

enum ExitStatus : int { kOk = 0, kAssertionFailed = 1, kValidationFailed = 2, kNumericalGuard = 3 };

/// Row-per-sample table; every row is written with the config hash appended.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  std::string to_csv(const std::string& config_hash) const;
};

struct ExperimentResult {
  NormReport report;
  Table table;
  std::vector<std::string> failures;  // failed assertions, empty when all pass
  int status() const { return failures.empty() ? kOk : kAssertionFailed; }
};

/// Runs the configured experiment in memory. Throws ValidationError or
/// NumericalGuardError; assertion failures are returned in the result.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

/// Validates, runs, writes report.txt, report.json and table.csv under
/// cfg.out_dir, and maps errors to exit statuses. Messages go to `log`.
int run(const ExperimentConfig& cfg, std::ostream& log);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace gzk
