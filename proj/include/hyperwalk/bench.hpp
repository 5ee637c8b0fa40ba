#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "hyperwalk/hypergraph.hpp"

namespace hyperwalk {

/// Random uniform hypergraph: `num_vertices` vertices and
/// round(num_vertices * mean_hyperdegree / edge_size) hyperedges, each a
/// uniformly drawn vertex set of size `edge_size`.
struct SyntheticSpec {
  std::size_t num_vertices = 10000;
  std::size_t edge_size = 3;
  double mean_hyperdegree = 4.0;
  std::uint64_t seed = 1;
};

Hypergraph synthetic_hypergraph(const SyntheticSpec& spec);

/// Mean vertex degree of the clique expansion.
double mean_clique_degree(const Hypergraph& g);

struct BenchConfig {
  std::size_t num_vertices = 100000;
  std::size_t edge_size = 3;
  std::vector<double> hyperdegrees{2, 4, 8, 16};
  std::vector<int> ks{2};
  /// Rows of S timed per point.
  std::size_t sources = 2000;
  /// Candidate hyperedges for the scoring phases (half true, half random).
  std::size_t candidates = 2000;
  /// Each phase is repeated and the fastest run is kept.
  int repeats = 3;
  std::uint64_t seed = 1;
};

struct BenchRow {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  double hyperdegree = 0.0;
  /// Measured mean clique-expansion degree d.
  double clique_degree = 0.0;
  int max_step = 0;
  std::size_t sources = 0;
  /// Seconds per row of S.
  double row_seconds = 0.0;
  /// Sparse multiply-adds per row of S.
  double row_updates = 0.0;
  std::size_t candidates = 0;
  /// Scoring phases on shared rows, seconds for all candidates.
  double lrw_seconds = 0.0;
  double js_seconds = 0.0;
  double gjs_seconds = 0.0;
  /// Rows for the candidate vertices, shared by every index.
  double candidate_rows_seconds = 0.0;
};

std::vector<BenchRow> run_bench(const BenchConfig& config);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(std::span<const double> x, std::span<const double> y);

void write_bench_csv(std::ostream& out, std::span<const BenchRow> rows);

}  // namespace hyperwalk
