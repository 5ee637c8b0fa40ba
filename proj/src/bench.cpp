#include "hyperwalk/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <ostream>
#include <random>

#include "hyperwalk/config.hpp"
#include "hyperwalk/errors.hpp"
#include "hyperwalk/local_walk.hpp"
#include "hyperwalk/projection.hpp"
#include "hyperwalk/scoring.hpp"

namespace hyperwalk {

namespace {

// Upper bound on stored row entries per batch of timed S-rows.
constexpr double kBatchEntries = 1 << 24;

Edge random_edge(std::size_t n, std::size_t size, std::mt19937_64& rng) {
  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  Edge e;
  while (e.size() < size) {
    const VertexId v = pick(rng);
    if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
  }
  canonicalize(e);
  return e;
}

template <typename Fn>
double fastest(int repeats, Fn&& fn) {
  double best = std::numeric_limits<double>::infinity();
  for (int r = 0; r < std::max(1, repeats); ++r) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

}  // namespace

Hypergraph synthetic_hypergraph(const SyntheticSpec& spec) {
  if (spec.edge_size < 2 || spec.num_vertices < spec.edge_size)
    throw ParameterError("synthetic hypergraph needs edge_size >= 2 and enough vertices");
  if (!(spec.mean_hyperdegree > 0.0)) throw ParameterError("mean hyperdegree must be positive");
  std::mt19937_64 rng(spec.seed);
  const auto m = static_cast<std::size_t>(std::llround(
      static_cast<double>(spec.num_vertices) * spec.mean_hyperdegree / static_cast<double>(spec.edge_size)));
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) edges.push_back(random_edge(spec.num_vertices, spec.edge_size, rng));
  return Hypergraph(spec.num_vertices, std::move(edges));
}

double mean_clique_degree(const Hypergraph& g) {
  const auto a = adjacency(g);
  return static_cast<double>(a.nnz()) / static_cast<double>(g.num_vertices());
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
  std::vector<BenchRow> out;
  for (double h : config.hyperdegrees) {
    SyntheticSpec spec{config.num_vertices, config.edge_size, h, config.seed};
    // Walk rows need every vertex to have a hyperedge.
    const Hypergraph g = largest_component(synthetic_hypergraph(spec));
    const auto p = transition(g);
    const double d = mean_clique_degree(g);

    std::mt19937_64 rng(config.seed ^ 0x5bd1e995ULL);
    std::vector<VertexId> sources;
    std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(g.num_vertices() - 1));
    for (std::size_t i = 0; i < std::min(config.sources, g.num_vertices()); ++i) sources.push_back(pick(rng));
    std::sort(sources.begin(), sources.end());
    sources.erase(std::unique(sources.begin(), sources.end()), sources.end());

    std::vector<Edge> candidates;
    for (std::size_t i = 0; i < config.candidates / 2 && i < g.num_edges(); ++i)
      candidates.push_back(g.edge(static_cast<EdgeId>(i * g.num_edges() / (config.candidates / 2))));
    while (candidates.size() < config.candidates)
      candidates.push_back(random_edge(g.num_vertices(), config.edge_size, rng));
    const auto candidate_vertices = vertex_union(candidates);

    for (int k : config.ks) {
      BenchRow row;
      row.num_vertices = g.num_vertices();
      row.num_edges = g.num_edges();
      row.hyperdegree = h;
      row.clique_degree = d;
      row.max_step = k;
      row.sources = sources.size();
      row.candidates = candidates.size();

      // Rows are built in batches and discarded to bound memory at large d^K.
      const auto batch = static_cast<std::size_t>(
          std::clamp(kBatchEntries / std::pow(d, k), 64.0, static_cast<double>(sources.size())));
      const auto all_rows = [&](WalkCounters* counters) {
        for (std::size_t lo = 0; lo < sources.size(); lo += batch) {
          const std::size_t hi = std::min(sources.size(), lo + batch);
          walk_matrix_rows(p, std::span<const VertexId>(sources).subspan(lo, hi - lo), k, {}, counters);
        }
      };
      WalkCounters counters;
      all_rows(&counters);
      row.row_updates = static_cast<double>(counters.updates) / static_cast<double>(sources.size());
      row.row_seconds = fastest(config.repeats, [&] { all_rows(nullptr); }) /
                        static_cast<double>(sources.size());

      WalkRows rows;
      row.candidate_rows_seconds =
          fastest(config.repeats, [&] { rows = walk_matrix_rows(p, candidate_vertices, k); });
      row.lrw_seconds = fastest(config.repeats, [&] { score_with_rows(Method::kLrw, candidates, rows); });
      row.js_seconds = fastest(config.repeats, [&] { score_with_rows(Method::kLrwJs, candidates, rows); });
      row.gjs_seconds = fastest(config.repeats, [&] { score_with_rows(Method::kLrwGjs, candidates, rows); });
      out.push_back(row);
    }
  }
  return out;
}

double loglog_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) throw ParameterError("slope needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(y.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << "n,m,hyperdegree,clique_degree,K,sources,row_seconds,row_updates,candidates,"
         "candidate_rows_seconds,lrw_seconds,lrw_js_seconds,lrw_gjs_seconds\n";
  for (const auto& r : rows)
    out << r.num_vertices << ',' << r.num_edges << ',' << format_number(r.hyperdegree) << ','
        << format_number(r.clique_degree) << ',' << r.max_step << ',' << r.sources << ','
        << format_number(r.row_seconds) << ',' << format_number(r.row_updates) << ','
        << r.candidates << ',' << format_number(r.candidate_rows_seconds) << ','
        << format_number(r.lrw_seconds) << ',' << format_number(r.js_seconds) << ','
        << format_number(r.gjs_seconds) << '\n';
}

}  // namespace hyperwalk
