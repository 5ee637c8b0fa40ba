#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "hyperwalk/experiment.hpp"
#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/scoring.hpp"

namespace hyperwalk {

/// Everything a `run`, `sweep` or `cv` invocation needs.
///
/// The file form is flat `key = value` text; lists are comma-separated and
/// `#` starts a comment line. `to_text` emits every key in a fixed order with
/// shortest round-trip number formatting, so `parse_config(to_text(c)) == c`.
struct RunConfig {
  std::vector<std::string> datasets;
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
  std::vector<double> alphas{0.2, 0.5, 0.8};
  int lambda = 3;
  std::vector<double> rhos{0.8};
  int trials = 10;
  std::uint64_t seed = 0;
  std::vector<int> k_grid{2, 3, 4, 5};
  std::vector<double> beta_grid{0.001, 0.005, 0.01, 0.05, 0.1};
  int folds = 5;
  std::string out = "results";
  /// 0 selects the number of available cores.
  int threads = 0;
  std::size_t min_cardinality = 2;
  bool label_mode = false;
  double drop_threshold = 1e-15;
  KatzEvaluation katz = KatzEvaluation::kAuto;
  int katz_terms = 8;

  /// Throws ParameterError naming the first invalid field.
  void validate() const;

  /// Experiment settings for one (rho, alpha) cell.
  ExperimentConfig experiment(double rho, double alpha) const;
  LoadOptions load_options() const;

  bool operator==(const RunConfig&) const = default;
};

std::string to_text(const RunConfig& config);
/// Keys that change results only; excludes `out` and `threads` so result
/// files do not depend on where or how parallel they were produced.
std::string result_text(const RunConfig& config);

RunConfig parse_config(const std::string& text);
RunConfig load_config(const std::filesystem::path& path);

/// Applies one `key`/`value` pair. Throws ParameterError on unknown keys or
/// malformed values.
void set_config_value(RunConfig& config, const std::string& key, const std::string& value);

std::string format_number(double value);
std::string katz_evaluation_name(KatzEvaluation k);

}  // namespace hyperwalk
