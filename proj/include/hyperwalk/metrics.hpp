#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/scoring.hpp"

namespace hyperwalk {

/// Candidate positions ordered by descending score, then ascending
/// canonical edge (lexicographic on vertex IDs), then position.
std::vector<std::size_t> rank_order(std::span<const double> scores, std::span<const Edge> edges);

/// Probability that a random positive outscores a random negative, ties
/// counted one half. Throws MetricUndefinedError unless both classes occur.
double auroc(std::span<const double> scores, std::span<const char> labels);
double auroc(std::span<const ScoredEdge> scored, std::span<const char> labels);

/// F1 of the top-`cutoff` candidates under `rank_order`. Computed as
/// 2 TP / (cutoff + positives), which equals TP / positives exactly when the
/// cutoff is the number of positives.
double f1_at_cutoff(std::span<const double> scores, std::span<const char> labels,
                    std::span<const Edge> edges, std::size_t cutoff);
double f1_at_cutoff(std::span<const ScoredEdge> scored, std::span<const char> labels,
                    std::size_t cutoff);

/// Precision and recall at the same cutoff, for reporting.
struct CutoffCounts {
  std::size_t true_positives = 0;
  std::size_t predicted = 0;
  std::size_t positives = 0;
  double precision() const;
  double recall() const;
};
CutoffCounts counts_at_cutoff(std::span<const double> scores, std::span<const char> labels,
                              std::span<const Edge> edges, std::size_t cutoff);

}  // namespace hyperwalk
