#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hyperwalk/config.hpp"
#include "hyperwalk/experiment.hpp"
#include "hyperwalk/hypergraph.hpp"
#include "json.hpp"

namespace hyperwalk {

/// 64-bit FNV-1a, lowercase hex.
std::string fnv1a_hex(std::string_view bytes);
std::string file_checksum(const std::filesystem::path& path);

/// All results for one dataset across the (rho, alpha) cells of a run.
struct DatasetRun {
  std::string name;
  std::string checksum;
  Stats stats;
  std::vector<ExperimentResult> results;
};

/// Stem of the dataset path, used as the dataset column.
std::string dataset_name(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ExperimentResult& result);

/// Top-level results document: provenance, config, then per-dataset blocks.
nlohmann::ordered_json results_document(const RunConfig& config,
                                        const std::vector<DatasetRun>& runs);

/// One row per dataset x rho x alpha x method:
/// dataset,rho,alpha,lambda,method,auroc_mean,f1_mean,chosen_param_mode
void write_summary_csv(std::ostream& out, const std::vector<DatasetRun>& runs);

/// Long format for plotting: dataset,rho,alpha,method,metric,mean
void write_sweep_csv(std::ostream& out, const std::vector<DatasetRun>& runs);

/// Per trial and method wall-clock seconds. Kept apart from the result
/// files, which must not vary between runs.
void write_timings_csv(std::ostream& out, const std::vector<DatasetRun>& runs);

/// Fixed-width table of the summary rows for the terminal.
void print_summary(std::ostream& out, const std::vector<DatasetRun>& runs);

}  // namespace hyperwalk
