#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/sparse_matrix.hpp"

namespace hyperwalk {

/// One row of the superposed walk matrix S = (1/K) sum_{k=1..K} P^k: the
/// stop distribution of a walker leaving `source` after a uniformly random
/// number of steps in 1..K.
struct WalkDistribution {
  VertexId source = 0;
  int max_step = 0;
  SparseVector probs;
};

struct WalkOptions {
  /// Accumulated entries below this are dropped from the row.
  double drop_threshold = 1e-15;
  /// Rows are rescaled to unit mass only when dropping moved the sum by more.
  double renormalize_tolerance = 1e-10;
};

/// Rows of S for a set of source vertices, addressable by vertex ID.
class WalkRows {
 public:
  WalkRows() = default;
  WalkRows(std::size_t num_vertices, int max_step);

  int max_step() const noexcept { return max_step_; }
  bool has(VertexId v) const { return v < slot_.size() && slot_[v] != kNone; }
  /// Throws ContractViolation when the row was not computed.
  const WalkDistribution& row(VertexId v) const;
  /// s_ij, with i required to be a computed source.
  double entry(VertexId i, VertexId j) const { return row(i).probs.at(j); }

  std::span<const WalkDistribution> rows() const noexcept { return rows_; }

  /// Appends a row; rows are expected in ascending source order.
  void add(WalkDistribution row);

 private:
  static constexpr std::uint32_t kNone = static_cast<std::uint32_t>(-1);
  int max_step_ = 0;
  std::vector<std::uint32_t> slot_;
  std::vector<WalkDistribution> rows_;
};

/// Work counters for one propagation run, used by the benchmark.
struct WalkCounters {
  /// Number of sparse multiply-add updates performed.
  std::uint64_t updates = 0;
};

/// Computes S_i for every i in `sources` by K sparse vector-matrix
/// propagations from the one-hot vector at i. `sources` need not be sorted
/// or unique. Throws ParameterError for K < 1.
WalkRows walk_matrix_rows(const CsrMatrix& transition, std::span<const VertexId> sources,
                          int max_step, const WalkOptions& options = {},
                          WalkCounters* counters = nullptr);

/// Same propagation, emitting rows for every K in `max_steps` from a single
/// pass up to the largest K. Result order follows `max_steps`.
std::vector<WalkRows> walk_matrix_rows_multi(const CsrMatrix& transition,
                                             std::span<const VertexId> sources,
                                             std::span<const int> max_steps,
                                             const WalkOptions& options = {},
                                             WalkCounters* counters = nullptr);

}  // namespace hyperwalk
