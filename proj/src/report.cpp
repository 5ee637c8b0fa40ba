#include "hyperwalk/report.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string file_checksum(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  const std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return fnv1a_hex(bytes);
}

std::string dataset_name(const std::filesystem::path& path) { return path.stem().string(); }

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string param_text(const std::optional<double>& v) { return v ? format_number(*v) : ""; }

}  // namespace

nlohmann::ordered_json to_json(const ExperimentResult& result) {
  nlohmann::ordered_json j;
  j["rho"] = result.observed_fraction;
  j["alpha"] = result.alpha;
  j["lambda"] = result.lambda;
  j["mean_missing"] = result.mean_missing;
  auto& summary = j["summary"] = nlohmann::ordered_json::array();
  for (const auto& s : result.summary) {
    nlohmann::ordered_json row;
    row["method"] = method_name(s.method);
    row["auroc_mean"] = s.auroc_mean;
    row["f1_mean"] = s.f1_mean;
    row["chosen_param_mode"] = optional_number(s.chosen_mode);
    summary.push_back(std::move(row));
  }
  auto& trials = j["trials"] = nlohmann::ordered_json::array();
  for (const auto& t : result.trials) {
    nlohmann::ordered_json row;
    row["trial"] = t.trial;
    row["split_seed"] = t.split_seed;
    row["sampling_seed"] = t.sampling_seed;
    row["cv_seed"] = t.cv_seed;
    row["observed"] = t.observed;
    row["missing"] = t.missing;
    row["dropped_missing"] = t.dropped_missing;
    row["negatives"] = t.negatives;
    row["collisions"] = t.collisions;
    auto& methods = row["methods"] = nlohmann::ordered_json::array();
    for (const auto& m : t.methods) {
      nlohmann::ordered_json mj;
      mj["method"] = method_name(m.method);
      mj["auroc"] = m.auroc;
      mj["f1"] = m.f1;
      mj["chosen_param"] = optional_number(m.chosen);
      methods.push_back(std::move(mj));
    }
    trials.push_back(std::move(row));
  }
  return j;
}

nlohmann::ordered_json results_document(const RunConfig& config,
                                        const std::vector<DatasetRun>& runs) {
  nlohmann::ordered_json doc;
  const std::string text = result_text(config);
  auto& prov = doc["provenance"];
  prov["tool"] = "hyperwalk";
  prov["config_hash"] = fnv1a_hex(text);
  prov["master_seed"] = config.seed;
  auto& checksums = prov["dataset_checksums"] = nlohmann::ordered_json::object();
  for (const auto& r : runs) checksums[r.name] = r.checksum;

  auto& cfg = doc["config"];
  cfg["methods"] = nlohmann::ordered_json::array();
  for (Method m : config.methods) cfg["methods"].push_back(method_name(m));
  cfg["alpha"] = config.alphas;
  cfg["lambda"] = config.lambda;
  cfg["rho"] = config.rhos;
  cfg["trials"] = config.trials;
  cfg["seed"] = config.seed;
  cfg["k_grid"] = config.k_grid;
  cfg["beta_grid"] = config.beta_grid;
  cfg["folds"] = config.folds;
  cfg["min_cardinality"] = config.min_cardinality;
  cfg["label_mode"] = config.label_mode;
  cfg["drop_threshold"] = config.drop_threshold;
  cfg["katz"] = katz_evaluation_name(config.katz);
  cfg["katz_terms"] = config.katz_terms;

  auto& datasets = doc["datasets"] = nlohmann::ordered_json::array();
  for (const auto& r : runs) {
    nlohmann::ordered_json d;
    d["name"] = r.name;
    d["checksum"] = r.checksum;
    d["num_vertices"] = r.stats.num_vertices;
    d["num_edges"] = r.stats.num_edges;
    d["mean_degree"] = r.stats.mean_degree;
    d["mean_cardinality"] = r.stats.mean_cardinality;
    auto& exps = d["experiments"] = nlohmann::ordered_json::array();
    for (const auto& e : r.results) exps.push_back(to_json(e));
    datasets.push_back(std::move(d));
  }
  return doc;
}

void write_summary_csv(std::ostream& out, const std::vector<DatasetRun>& runs) {
  out << "dataset,rho,alpha,lambda,method,auroc_mean,f1_mean,chosen_param_mode\n";
  for (const auto& r : runs)
    for (const auto& e : r.results)
      for (const auto& s : e.summary)
        out << r.name << ',' << format_number(e.observed_fraction) << ','
            << format_number(e.alpha) << ',' << e.lambda << ',' << method_name(s.method) << ','
            << format_number(s.auroc_mean) << ',' << format_number(s.f1_mean) << ','
            << param_text(s.chosen_mode) << '\n';
}

void write_sweep_csv(std::ostream& out, const std::vector<DatasetRun>& runs) {
  out << "dataset,rho,alpha,method,metric,mean\n";
  for (const auto& r : runs)
    for (const auto& e : r.results)
      for (const auto& s : e.summary) {
        const std::string prefix = r.name + ',' + format_number(e.observed_fraction) + ',' +
                                   format_number(e.alpha) + ',' + std::string(method_name(s.method));
        out << prefix << ",auroc," << format_number(s.auroc_mean) << '\n';
        out << prefix << ",f1," << format_number(s.f1_mean) << '\n';
      }
}

void write_timings_csv(std::ostream& out, const std::vector<DatasetRun>& runs) {
  out << "dataset,rho,alpha,trial,method,seconds\n";
  for (const auto& r : runs)
    for (const auto& e : r.results)
      for (const auto& t : e.trials)
        for (const auto& m : t.methods)
          out << r.name << ',' << format_number(e.observed_fraction) << ','
              << format_number(e.alpha) << ',' << t.trial << ',' << method_name(m.method) << ','
              << format_number(m.seconds) << '\n';
}

void print_summary(std::ostream& out, const std::vector<DatasetRun>& runs) {
  out << std::left << std::setw(24) << "dataset" << std::setw(6) << "rho" << std::setw(7)
      << "alpha" << std::setw(9) << "method" << std::right << std::setw(9) << "AUROC"
      << std::setw(9) << "F1" << std::setw(8) << "param" << '\n';
  const auto flags = out.flags();
  for (const auto& r : runs)
    for (const auto& e : r.results)
      for (const auto& s : e.summary) {
        out << std::left << std::setw(24) << r.name << std::setw(6)
            << format_number(e.observed_fraction) << std::setw(7) << format_number(e.alpha)
            << std::setw(9) << method_name(s.method) << std::right << std::fixed
            << std::setprecision(4) << std::setw(9) << s.auroc_mean << std::setw(9) << s.f1_mean
            << std::setw(8) << param_text(s.chosen_mode) << '\n';
        out.flags(flags);
      }
}

}  // namespace hyperwalk
