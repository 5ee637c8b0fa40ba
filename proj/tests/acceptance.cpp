// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hyperwalk/bench.hpp"
#include "hyperwalk/divergence.hpp"
#include "hyperwalk/experiment.hpp"
#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/local_walk.hpp"
#include "hyperwalk/metrics.hpp"
#include "hyperwalk/projection.hpp"
#include "hyperwalk/scoring.hpp"
#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace hyperwalk;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

struct Settings {
  fs::path data_dir = "data";
  fs::path cli;
  fs::path work_dir = "acceptance_work";
};

std::string fmt(double x, int precision = 4) {
  std::ostringstream out;
  out.precision(precision);
  out << std::fixed << x;
  return out.str();
}

std::vector<VertexId> all_vertices(const Hypergraph& g) {
  std::vector<VertexId> v(g.num_vertices());
  std::iota(v.begin(), v.end(), 0);
  return v;
}

SparseVector sparse(const std::vector<double>& dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i] != 0.0) {
      v.indices.push_back(static_cast<Index>(i));
      v.values.push_back(dense[i]);
    }
  return v;
}

// 1. Toy exactness.
Outcome toy_exactness(const Settings&) {
  Outcome o;
  const Hypergraph t1(4, {{0, 1, 2}, {2, 3}});
  const auto p = transition(t1);
  const auto w = weighted_projection(t1);
  const auto dense_p = oracle::walk_transition(t1);
  const auto dense_w = oracle::projection(t1, true);
  const auto dense_s = oracle::superposed(dense_p, 2);
  const VertexId source = 0;
  const auto rows = walk_matrix_rows(p, {&source, 1}, 2);

  const double tol = 1e-12;
  struct Entry { Index i, j; double value; };
  for (auto [i, j, v] : {Entry{0, 2, 0.5}, Entry{2, 0, 0.25}, Entry{2, 3, 0.5}, Entry{3, 2, 1.0}}) {
    o.check(std::abs(p.at(i, j) - v) <= tol && std::abs(dense_p[i][j] - v) <= tol,
            "p_" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  for (auto [i, j, v] : {Entry{0, 1, 0.5}, Entry{0, 2, 0.5}, Entry{1, 2, 0.5}, Entry{2, 3, 1.0}}) {
    o.check(std::abs(w.at(i, j) - v) <= tol && std::abs(dense_w[i][j] - v) <= tol,
            "w_" + std::to_string(i + 1) + std::to_string(j + 1));
  }
  const double s1[] = {3.0 / 16, 5.0 / 16, 3.0 / 8, 1.0 / 8};
  for (VertexId j = 0; j < 4; ++j)
    o.check(std::abs(rows.entry(0, j) - s1[j]) <= tol && std::abs(dense_s[0][j] - s1[j]) <= tol,
            "S_1" + std::to_string(j + 1));
  for (Index i = 0; i < 4; ++i)
    for (Index j = 0; j < 4; ++j) o.check(std::abs(p.at(i, j) - dense_p[i][j]) <= tol, "P vs oracle");
  if (o.pass) o.detail = "P, W and S_1 (K=2) match the dense oracle to 1e-12";
  return o;
}

// 2. Stochasticity and degree preservation.
Outcome stochasticity(const Settings&) {
  Outcome o;
  std::mt19937_64 rng(2024);
  double worst_p = 0.0, worst_s = 0.0, worst_w = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_hypergraph(rng, 50, 60, 6);
    const auto p = transition(g);
    const auto w = weighted_projection(g);
    const auto d = degrees(g);
    for (Index r = 0; r < p.rows(); ++r) {
      worst_p = std::max(worst_p, std::abs(p.row_sum(r) - 1.0));
      worst_w = std::max(worst_w, std::abs(w.row_sum(r) - d[r]));
    }
    const auto rows = walk_matrix_rows(p, all_vertices(g), 1 + i % 5);
    for (const auto& row : rows.rows()) worst_s = std::max(worst_s, std::abs(row.probs.sum() - 1.0));
  }
  o.check(worst_p <= 1e-10, "P row sum off by " + std::to_string(worst_p));
  o.check(worst_s <= 1e-10, "S row sum off by " + std::to_string(worst_s));
  o.check(worst_w <= 1e-10, "W row sum off degree by " + std::to_string(worst_w));
  std::ostringstream msg;
  msg << "200 hypergraphs, max deviation P " << worst_p << ", S " << worst_s << ", W " << worst_w;
  if (o.pass) o.detail = msg.str();
  return o;
}

// 3. Divergence bounds.
Outcome divergence_bounds(const Settings&) {
  Outcome o;
  std::mt19937_64 rng(3);
  const double tol = 1e-12;
  double worst_reduction = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + i % 40;
    const auto p = sparse(oracle::random_distribution(rng, n, 0.4));
    const auto q = sparse(oracle::random_distribution(rng, n, 0.4));
    const double d = js(p, q);
    if (d < -tol || d > 1.0 + tol) o.check(false, "JS out of [0,1]: " + std::to_string(d));

    const std::size_t t = 2 + i % 8;
    std::vector<SparseVector> many;
    for (std::size_t k = 0; k < t; ++k) many.push_back(sparse(oracle::random_distribution(rng, n, 0.4)));
    const double g = js_generalized(many, Weights::uniform(t));
    if (g < -tol || g > std::log2(static_cast<double>(t)) + tol)
      o.check(false, "GJS out of [0, log2 t]: " + std::to_string(g));

    const std::vector<SparseVector> pair{p, q};
    worst_reduction = std::max(worst_reduction, std::abs(js_generalized(pair, Weights::uniform(2)) - d));
  }
  o.check(worst_reduction <= tol, "t=2 reduction off by " + std::to_string(worst_reduction));
  std::ostringstream msg;
  msg << "10000 pairs within bounds; t=2 reduction max deviation " << worst_reduction;
  if (o.pass) o.detail = msg.str();
  return o;
}

// 4. Reduction identity on size-2 candidates.
Outcome reduction_identity(const Settings&) {
  Outcome o;
  std::mt19937_64 rng(4);
  std::size_t checked = 0;
  double worst = 0.0;
  while (checked < 1000) {
    const auto g = oracle::random_hypergraph(rng, 40, 40, 5);
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.num_vertices() - 1));
    std::vector<Edge> candidates;
    while (candidates.size() < 100) {
      const VertexId a = pick(rng), b = pick(rng);
      if (a != b) candidates.push_back({a, b});
    }
    const int k = 1 + static_cast<int>(checked / 100) % 5;
    const auto lhs = score_edges(MethodSpec{Method::kLrwJs, k}, g, candidates);
    const auto rhs = score_edges(MethodSpec{Method::kLrwGjs, k}, g, candidates);
    for (std::size_t i = 0; i < lhs.size(); ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    checked += candidates.size();
  }
  o.check(worst <= 1e-12, "max |LRW-JS - LRW-GJS| = " + std::to_string(worst));
  std::ostringstream msg;
  msg << checked << " pair candidates, max difference " << worst;
  if (o.pass) o.detail = msg.str();
  return o;
}

// 5. Metric oracles.
Outcome metric_oracles(const Settings&) {
  Outcome o;
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> size(2, 100), level(0, 7);
  std::uniform_int_distribution<VertexId> vertex(0, 30);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = size(rng);
    std::vector<double> s;
    std::vector<char> y;
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
      s.push_back(level(rng) * 0.125);
      y.push_back(static_cast<char>(rng() % 3 == 0));
      Edge e{vertex(rng), static_cast<VertexId>(31 + vertex(rng))};
      edges.push_back(e);
    }
    y[0] = 1;
    y[1] = 0;

    double wins = 0.0, pairs = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (y[i] && !y[j]) {
          pairs += 1.0;
          wins += s[i] > s[j] ? 1.0 : (s[i] == s[j] ? 0.5 : 0.0);
        }
    o.check(auroc(s, y) == wins / pairs, "AUROC mismatch in case " + std::to_string(trial));

    // Top set by explicit enumeration: candidate i is selected iff fewer than
    // `cutoff` candidates precede it in the (score desc, edge asc, index) order.
    const auto positives = static_cast<std::size_t>(std::count(y.begin(), y.end(), 1));
    std::size_t tp = 0;
    for (int i = 0; i < n; ++i) {
      std::size_t ahead = 0;
      for (int j = 0; j < n; ++j)
        if (j != i && (s[j] > s[i] || (s[j] == s[i] && (edges[j] < edges[i] || (edges[j] == edges[i] && j < i)))))
          ++ahead;
      if (ahead < positives && y[i]) ++tp;
    }
    const double precision = static_cast<double>(tp) / static_cast<double>(positives);
    const double recall = static_cast<double>(tp) / static_cast<double>(positives);
    const double f1 = f1_at_cutoff(s, y, edges, positives);
    const auto counts = counts_at_cutoff(s, y, edges, positives);
    o.check(f1 == precision, "F1 differs from enumeration in case " + std::to_string(trial));
    o.check(counts.precision() == counts.recall() && counts.precision() == f1 && recall == precision,
            "F1 = precision = recall violated in case " + std::to_string(trial));
  }
  if (o.pass) o.detail = "100 random score vectors: AUROC and F1 equal brute-force enumeration";
  return o;
}

// Hypergraph preparation matching the CLI: filter, then largest component.
bool load_dataset(const Settings& s, const std::string& file, std::size_t min_cardinality,
                  Hypergraph& out, Outcome& o) {
  const fs::path path = s.data_dir / file;
  if (!fs::exists(path)) {
    o.check(false, "dataset not found: " + path.string());
    return false;
  }
  LoadOptions options;
  options.min_cardinality = min_cardinality;
  out = largest_component(load(path, options));
  return true;
}

double mean_auroc(const Hypergraph& g, Method method, double alpha, int lambda) {
  ExperimentConfig config;
  config.split.trials = 10;
  config.sampling.alpha = alpha;
  config.sampling.lambda = lambda;
  config.methods = {method};
  return run_experiment(g, config).summary.front().auroc_mean;
}

// 6. Benchmark reproduction.
Outcome reproduction(const Settings& s) {
  Outcome o;
  std::vector<std::string> notes;
  Hypergraph g;
  if (load_dataset(s, "contact-high-school.txt", 3, g, o)) {
    const double a = mean_auroc(g, Method::kLrwJs, 0.2, 3);
    notes.push_back("contact-high-school a=0.2 LRW-JS " + fmt(a) + " (target 0.9934 +/- 0.01)");
    o.check(std::abs(a - 0.9934) <= 0.01, "contact-high-school LRW-JS AUROC " + fmt(a));
  }
  if (load_dataset(s, "email-enron.txt", 2, g, o)) {
    const double a = mean_auroc(g, Method::kLrwJs, 0.8, 3);
    notes.push_back("email-enron a=0.8 LRW-JS " + fmt(a) + " (target 0.8733 +/- 0.03)");
    o.check(std::abs(a - 0.8733) <= 0.03, "email-enron LRW-JS AUROC " + fmt(a));
  }
  if (load_dataset(s, "cora-coreference.txt", 2, g, o)) {
    const double js_auc = mean_auroc(g, Method::kLrwJs, 0.8, 3);
    const double lrw_auc = mean_auroc(g, Method::kLrw, 0.8, 3);
    notes.push_back("cora-coreference a=0.8 LRW-JS " + fmt(js_auc) + " vs LRW " + fmt(lrw_auc));
    o.check(js_auc >= lrw_auc, "cora-coreference LRW-JS below LRW");
  }
  std::string joined;
  for (const auto& n : notes) joined += (joined.empty() ? "" : "; ") + n;
  o.detail = o.pass ? joined : o.detail + (joined.empty() ? "" : " | " + joined);
  return o;
}

// 7. Robustness with ten fakes per missing hyperedge.
Outcome robustness(const Settings& s) {
  Outcome o;
  Hypergraph g;
  if (!load_dataset(s, "email-enron.txt", 2, g, o)) return o;
  const double a = mean_auroc(g, Method::kLrwJs, 0.2, 10);
  o.check(std::abs(a - 0.9319) <= 0.02, "email-enron lambda=10 LRW-JS AUROC " + fmt(a));
  if (o.pass) o.detail = "email-enron a=0.2 lambda=10 LRW-JS " + fmt(a) + " (target 0.9319 +/- 0.02)";
  return o;
}

// 8. Complexity trend.
Outcome complexity(const Settings&) {
  Outcome o;
  std::ostringstream msg;
  struct Plan { int k; std::vector<double> hyperdegrees; };
  for (const auto& plan : {Plan{2, {2, 4, 8, 16}}, Plan{3, {2, 4, 8}}}) {
    BenchConfig config;
    config.ks = {plan.k};
    config.hyperdegrees = plan.hyperdegrees;
    const auto rows = run_bench(config);
    std::vector<double> d, t;
    for (const auto& r : rows) {
      d.push_back(r.clique_degree);
      t.push_back(r.row_seconds);
      const double lrw = r.candidate_rows_seconds + r.lrw_seconds;
      const double gjs = r.candidate_rows_seconds + r.gjs_seconds;
      o.check(lrw < gjs, "LRW not faster than LRW-GJS at d=" + fmt(r.clique_degree, 1));
    }
    const double slope = loglog_slope(d, t);
    o.check(std::abs(slope - plan.k) <= 0.5, "K=" + std::to_string(plan.k) + " slope " + fmt(slope, 3));
    msg << (msg.tellp() > 0 ? "; " : "") << "K=" << plan.k << " slope " << fmt(slope, 3);
  }
  msg << "; LRW total below LRW-GJS at every d";
  if (o.pass) o.detail = msg.str();
  return o;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// 9. Determinism of the result files.
Outcome determinism(const Settings& s) {
  Outcome o;
  if (s.cli.empty() || !fs::exists(s.cli)) {
    o.check(false, "CLI binary not found: " + s.cli.string());
    return o;
  }
  fs::create_directories(s.work_dir);
  std::mt19937_64 rng(9);
  std::vector<Edge> edges;
  std::uniform_int_distribution<VertexId> pick(0, 149);
  while (edges.size() < 400) {
    Edge e{pick(rng), pick(rng), pick(rng)};
    canonicalize(e);
    if (e.size() >= 2) edges.push_back(e);
  }
  const auto dataset = s.work_dir / "determinism.txt";
  {
    std::ofstream out(dataset);
    save(largest_component(Hypergraph(150, edges)), out);
  }

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::vector<std::pair<std::string, unsigned>> runs{
      {"a", 1}, {"b", 1}, {"c", hw}, {"d", std::max(4u, hw)}};
  for (const auto& [name, threads] : runs) {
    const auto out = s.work_dir / ("run_" + name);
    fs::remove_all(out);
    const std::string cmd = "\"" + s.cli.string() + "\" run --dataset \"" + dataset.string() +
                            "\" --trials 3 --seed 7 --threads " + std::to_string(threads) +
                            " --out \"" + out.string() + "\" > \"" + (s.work_dir / (name + ".log")).string() +
                            "\" 2>&1";
    if (std::system(cmd.c_str()) != 0) {
      o.check(false, "CLI run failed: " + cmd);
      return o;
    }
  }
  for (const char* file : {"results.json", "summary.csv", "config.txt"}) {
    const auto reference = slurp(s.work_dir / "run_a" / file);
    o.check(!reference.empty(), std::string(file) + " is empty");
    for (const char* other : {"run_b", "run_c", "run_d"})
      o.check(slurp(s.work_dir / other / file) == reference, std::string(file) + " differs in " + other);
  }
  if (o.pass)
    o.detail = "results.json, summary.csv, config.txt identical across reruns and 1/" + std::to_string(hw) +
               "/" + std::to_string(std::max(4u, hw)) + " threads";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hyperwalk acceptance suite"};
  Settings settings;
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-9)")->check(CLI::Range(0, 9));
  app.add_option("--data-dir", settings.data_dir, "Directory with the benchmark hyperedge lists");
  app.add_option("--cli", settings.cli, "Path to the hyperwalk executable");
  app.add_option("--work-dir", settings.work_dir, "Scratch directory");
  CLI11_PARSE(app, argc, argv);
  if (const char* env = std::getenv("HYPERWALK_DATA_DIR"); env && *env) settings.data_dir = env;

  const std::vector<std::pair<std::string, std::function<Outcome(const Settings&)>>> criteria{
      {"toy exactness", toy_exactness},
      {"stochasticity and degree preservation", stochasticity},
      {"divergence bounds", divergence_bounds},
      {"reduction identity", reduction_identity},
      {"metric oracles", metric_oracles},
      {"benchmark reproduction", reproduction},
      {"robustness with lambda=10", robustness},
      {"complexity trend", complexity},
      {"determinism", determinism},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<std::size_t>(only) != i + 1) continue;
    Outcome outcome;
    try {
      outcome = criteria[i].second(settings);
    } catch (const std::exception& e) {
      outcome.pass = false;
      outcome.detail = std::string("exception: ") + e.what();
    }
    std::cout << "[" << (outcome.pass ? "PASS" : "FAIL") << "] " << (i + 1) << ". " << criteria[i].first
              << ": " << outcome.detail << std::endl;
    if (!outcome.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
