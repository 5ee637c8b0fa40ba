// Command-line front end: dataset statistics, experiment runs, rho sweeps,
// cross-validation inspection and scaling benchmarks.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "hyperwalk/bench.hpp"
#include "hyperwalk/config.hpp"
#include "hyperwalk/errors.hpp"
#include "hyperwalk/experiment.hpp"
#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/report.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace fs = std::filesystem;
using namespace hyperwalk;

namespace {

// Flags shared by run, sweep and cv; each maps onto a config key.
struct ConfigFlags {
  std::string config_path;
  std::map<std::string, std::string> values;
  bool label_mode = false;

  void attach(CLI::App* app) {
    app->add_option("--config", config_path, "Key-value config file; flags override it");
    add(app, "--dataset", "datasets", "Hyperedge-list file(s), comma-separated");
    add(app, "--methods", "methods", "Methods: HCN,HKatz,HPRA,LRW,LRW-JS,LRW-GJS");
    add(app, "--alpha", "alpha", "Kept-vertex fraction(s) for fake hyperedges");
    add(app, "--lambda", "lambda", "Fake hyperedges per missing hyperedge");
    add(app, "--rho", "rho", "Observed hyperedge fraction(s)");
    add(app, "--trials", "trials", "Independent trials");
    add(app, "--seed", "seed", "Master seed");
    add(app, "--k-grid", "k_grid", "Walk lengths tried by cross-validation");
    add(app, "--beta-grid", "beta_grid", "Katz damping factors tried by cross-validation");
    add(app, "--folds", "folds", "Cross-validation folds");
    add(app, "--out", "out", "Output directory");
    add(app, "--threads", "threads", "Worker threads (0 = all cores)");
    add(app, "--min-cardinality", "min_cardinality", "Drop hyperedges with fewer vertices");
    add(app, "--drop-threshold", "drop_threshold", "Walk probabilities below this are dropped");
    add(app, "--katz", "katz", "Katz evaluation: auto, closed or truncated");
    app->add_flag("--label-mode", label_mode, "Vertex tokens are strings, not integers");
  }

  void add(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    app->add_option_function<std::string>(
        flag, [this, key](const std::string& v) { values[key] = v; }, help);
  }

  RunConfig resolve(const RunConfig& defaults) const {
    RunConfig c = config_path.empty() ? defaults : load_config(config_path);
    for (const auto& [key, value] : values) set_config_value(c, key, value);
    if (label_mode) c.label_mode = true;
    c.validate();
    if (c.datasets.empty()) throw ParameterError("no dataset given (--dataset)");
    return c;
  }
};

void apply_threads(int threads) {
#ifdef _OPENMP
  omp_set_num_threads(threads > 0 ? threads : static_cast<int>(std::max(1u, std::thread::hardware_concurrency())));
#else
  (void)threads;
#endif
}

Hypergraph prepare(const std::string& path, const LoadOptions& options) {
  return largest_component(load(path, options));
}

std::vector<DatasetRun> run_grid(const RunConfig& c) {
  std::vector<DatasetRun> runs;
  for (const auto& path : c.datasets) {
    DatasetRun run;
    run.name = dataset_name(path);
    run.checksum = file_checksum(path);
    const Hypergraph g = prepare(path, c.load_options());
    run.stats = stats(g);
    for (double rho : c.rhos)
      for (double alpha : c.alphas) {
        std::cerr << "[hyperwalk] " << run.name << " rho=" << format_number(rho)
                  << " alpha=" << format_number(alpha) << " lambda=" << c.lambda << '\n';
        run.results.push_back(run_experiment(g, c.experiment(rho, alpha)));
      }
    runs.push_back(std::move(run));
  }
  return runs;
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  out << text;
}

template <typename Writer>
std::string render(Writer&& w) {
  std::ostringstream s;
  w(s);
  return s.str();
}

void write_outputs(const RunConfig& c, const std::vector<DatasetRun>& runs, bool sweep) {
  const fs::path dir = c.out;
  fs::create_directories(dir);
  write_file(dir / "results.json", results_document(c, runs).dump(2) + "\n");
  write_file(dir / "summary.csv", render([&](std::ostream& o) { write_summary_csv(o, runs); }));
  if (sweep) write_file(dir / "sweep.csv", render([&](std::ostream& o) { write_sweep_csv(o, runs); }));
  write_file(dir / "timings.csv", render([&](std::ostream& o) { write_timings_csv(o, runs); }));
  write_file(dir / "config.txt", result_text(c));
}

int cmd_stats(const std::vector<std::string>& paths, std::size_t min_cardinality, bool label_mode,
              const std::string& save_path) {
  LoadOptions options;
  options.label_mode = label_mode;
  options.min_cardinality = min_cardinality;
  std::cout << std::left << std::setw(28) << "dataset" << std::right << std::setw(10) << "vertices"
            << std::setw(12) << "hyperedges" << std::setw(12) << "avg_degree" << std::setw(12)
            << "avg_size" << '\n';
  for (const auto& path : paths) {
    const Hypergraph g = prepare(path, options);
    const Stats s = stats(g);
    std::cout << std::left << std::setw(28) << dataset_name(path) << std::right << std::setw(10)
              << s.num_vertices << std::setw(12) << s.num_edges << std::fixed << std::setprecision(2)
              << std::setw(12) << s.mean_degree << std::setw(12) << s.mean_cardinality << '\n';
    std::cout.unsetf(std::ios::fixed);
    if (!save_path.empty()) save(g, save_path);
  }
  return 0;
}

int cmd_cv(const RunConfig& c, int trial, double alpha) {
  for (const auto& path : c.datasets) {
    const Hypergraph g = prepare(path, c.load_options());
    const auto config = c.experiment(c.rhos.front(), alpha);
    const Split s = split(g, config.split, trial);
    Rng sampling_rng(derive_seed(c.seed, seed_stream::kSampling, static_cast<std::uint64_t>(trial)));
    const auto candidates = build_candidates(g, s, config.sampling, sampling_rng);
    const auto all = candidates.all();
    std::cout << dataset_name(path) << " trial " << trial << ": observed=" << s.observed.size()
              << " missing=" << s.missing.size() << " candidates=" << all.size() << '\n';
    for (Method m : c.methods) {
      if (!is_walk_method(m) && m != Method::kHkatz) continue;
      Rng cv_rng(derive_seed(c.seed, seed_stream::kCrossValidation, static_cast<std::uint64_t>(trial)));
      std::vector<double> grid = m == Method::kHkatz
                                     ? c.beta_grid
                                     : std::vector<double>(c.k_grid.begin(), c.k_grid.end());
      const auto cv = cross_validate(m, g, s.observed, all, grid, config.cv, cv_rng);
      std::cout << "  " << std::left << std::setw(8) << method_name(m) << std::right;
      for (std::size_t i = 0; i < cv.grid.size(); ++i)
        std::cout << "  " << format_number(cv.grid[i]) << ':' << std::fixed << std::setprecision(4)
                  << cv.mean_auroc[i] << std::defaultfloat;
      std::cout << "  -> " << format_number(cv.chosen) << '\n';
    }
  }
  return 0;
}

int cmd_bench(const BenchConfig& config, const std::string& out_path) {
  const auto rows = run_bench(config);
  std::ostringstream csv;
  write_bench_csv(csv, rows);
  if (!out_path.empty()) write_file(out_path, csv.str());
  std::cout << csv.str();

  std::map<int, std::pair<std::vector<double>, std::vector<double>>> by_k;
  for (const auto& r : rows) {
    by_k[r.max_step].first.push_back(r.clique_degree);
    by_k[r.max_step].second.push_back(r.row_seconds);
  }
  for (const auto& [k, xy] : by_k) {
    if (xy.first.size() < 2) continue;
    std::cout << "K=" << k << ": log-log slope of S-row time vs d = " << std::fixed
              << std::setprecision(3) << loglog_slope(xy.first, xy.second) << " (expected ~" << k
              << ")\n"
              << std::defaultfloat;
  }
  for (const auto& r : rows)
    std::cout << "d=" << std::fixed << std::setprecision(1) << r.clique_degree << " K=" << r.max_step
              << std::setprecision(6) << "  LRW " << r.lrw_seconds << "s  LRW-JS " << r.js_seconds
              << "s  LRW-GJS " << r.gjs_seconds << "s" << (r.lrw_seconds < r.gjs_seconds ? "" : "  (!)")
              << '\n'
              << std::defaultfloat;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperwalk: hyperlink prediction with local random walks"};
  app.require_subcommand(1);

  auto* stats_cmd = app.add_subcommand("stats", "Dataset statistics after preprocessing");
  std::vector<std::string> stats_paths;
  std::size_t stats_min_card = 2;
  bool stats_label_mode = false;
  std::string stats_save;
  stats_cmd->add_option("--dataset", stats_paths, "Hyperedge-list file(s)")->required()->delimiter(',');
  stats_cmd->add_option("--min-cardinality", stats_min_card, "Drop hyperedges with fewer vertices");
  stats_cmd->add_flag("--label-mode", stats_label_mode, "Vertex tokens are strings");
  stats_cmd->add_option("--save", stats_save, "Write the preprocessed hypergraph in canonical form");

  auto* run_cmd = app.add_subcommand("run", "Full evaluation: split, sample, cross-validate, score");
  ConfigFlags run_flags;
  run_flags.attach(run_cmd);

  auto* sweep_cmd = app.add_subcommand("sweep", "Evaluate over a grid of observed fractions");
  ConfigFlags sweep_flags;
  sweep_flags.attach(sweep_cmd);

  auto* cv_cmd = app.add_subcommand("cv", "Show cross-validation AUROC per grid value for one trial");
  ConfigFlags cv_flags;
  cv_flags.attach(cv_cmd);
  int cv_trial = 0;
  cv_cmd->add_option("--trial", cv_trial, "Trial index");

  auto* bench_cmd = app.add_subcommand("bench", "Timing of walk rows and scoring on synthetic hypergraphs");
  BenchConfig bench;
  std::string bench_out;
  int bench_threads = 1;
  bench_cmd->add_option("--vertices", bench.num_vertices, "Vertices per synthetic hypergraph");
  bench_cmd->add_option("--edge-size", bench.edge_size, "Hyperedge cardinality");
  bench_cmd->add_option("--hyperdegrees", bench.hyperdegrees, "Mean hyperdegrees to sweep")->delimiter(',');
  bench_cmd->add_option("--k", bench.ks, "Walk lengths")->delimiter(',');
  bench_cmd->add_option("--sources", bench.sources, "Rows of S timed per point");
  bench_cmd->add_option("--candidates", bench.candidates, "Candidate hyperedges scored per point");
  bench_cmd->add_option("--repeats", bench.repeats, "Repetitions per phase (fastest kept)");
  bench_cmd->add_option("--seed", bench.seed, "Generator seed");
  bench_cmd->add_option("--out", bench_out, "CSV output path");
  bench_cmd->add_option("--threads", bench_threads, "Worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*stats_cmd) return cmd_stats(stats_paths, stats_min_card, stats_label_mode, stats_save);
    if (*run_cmd) {
      const RunConfig c = run_flags.resolve(RunConfig{});
      apply_threads(c.threads);
      const auto runs = run_grid(c);
      write_outputs(c, runs, false);
      print_summary(std::cout, runs);
      return 0;
    }
    if (*sweep_cmd) {
      RunConfig defaults;
      defaults.rhos = {0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
      defaults.alphas = {0.5};
      const RunConfig c = sweep_flags.resolve(defaults);
      apply_threads(c.threads);
      const auto runs = run_grid(c);
      write_outputs(c, runs, true);
      print_summary(std::cout, runs);
      return 0;
    }
    if (*cv_cmd) {
      const RunConfig c = cv_flags.resolve(RunConfig{});
      apply_threads(c.threads);
      for (double alpha : c.alphas) cmd_cv(c, cv_trial, alpha);
      return 0;
    }
    if (*bench_cmd) {
      apply_threads(bench_threads);
      return cmd_bench(bench, bench_out);
    }
  } catch (const ParseError& e) {
    std::cerr << "hyperwalk: parse error: " << e.what() << '\n';
    return 3;
  } catch (const ParameterError& e) {
    std::cerr << "hyperwalk: invalid parameter: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "hyperwalk: error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
