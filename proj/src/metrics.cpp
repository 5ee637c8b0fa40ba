#include "hyperwalk/metrics.hpp"

#include <algorithm>
#include <numeric>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

std::vector<std::size_t> rank_order(std::span<const double> scores, std::span<const Edge> edges) {
  if (scores.size() != edges.size()) throw ContractViolation("scores and edges differ in length");
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    if (edges[a] != edges[b]) return edges[a] < edges[b];
    return a < b;
  });
  return order;
}

double auroc(std::span<const double> scores, std::span<const char> labels) {
  if (scores.size() != labels.size()) throw ContractViolation("scores and labels differ in length");
  const std::size_t positives =
      static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](char l) { return l != 0; }));
  const std::size_t negatives = labels.size() - positives;
  if (positives == 0 || negatives == 0)
    throw MetricUndefinedError("AUROC needs at least one positive and one negative");

  // Mann-Whitney U from midranks; every quantity below is a multiple of 1/2
  // and therefore exact in double precision.
  std::vector<std::size_t> order(scores.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double positive_rank_sum = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && scores[order[j]] == scores[order[i]]) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // ranks i+1..j
    for (std::size_t k = i; k < j; ++k)
      if (labels[order[k]]) positive_rank_sum += midrank;
    i = j;
  }
  const double p = static_cast<double>(positives);
  const double u = positive_rank_sum - p * (p + 1.0) / 2.0;
  return u / (p * static_cast<double>(negatives));
}

double auroc(std::span<const ScoredEdge> scored, std::span<const char> labels) {
  std::vector<double> scores;
  scores.reserve(scored.size());
  for (const auto& s : scored) scores.push_back(s.score);
  return auroc(scores, labels);
}

double CutoffCounts::precision() const {
  return predicted ? static_cast<double>(true_positives) / static_cast<double>(predicted) : 0.0;
}

double CutoffCounts::recall() const {
  return positives ? static_cast<double>(true_positives) / static_cast<double>(positives) : 0.0;
}

CutoffCounts counts_at_cutoff(std::span<const double> scores, std::span<const char> labels,
                              std::span<const Edge> edges, std::size_t cutoff) {
  if (labels.size() != scores.size()) throw ContractViolation("scores and labels differ in length");
  if (cutoff < 1 || cutoff > scores.size())
    throw MetricUndefinedError("F1 cutoff must lie in [1, number of candidates]");
  const auto order = rank_order(scores, edges);
  CutoffCounts c;
  c.predicted = cutoff;
  c.positives =
      static_cast<std::size_t>(std::count_if(labels.begin(), labels.end(), [](char l) { return l != 0; }));
  for (std::size_t k = 0; k < cutoff; ++k)
    if (labels[order[k]]) ++c.true_positives;
  return c;
}

double f1_at_cutoff(std::span<const double> scores, std::span<const char> labels,
                    std::span<const Edge> edges, std::size_t cutoff) {
  const auto c = counts_at_cutoff(scores, labels, edges, cutoff);
  if (c.true_positives == 0) return 0.0;
  return 2.0 * static_cast<double>(c.true_positives) /
         static_cast<double>(c.predicted + c.positives);
}

double f1_at_cutoff(std::span<const ScoredEdge> scored, std::span<const char> labels,
                    std::size_t cutoff) {
  std::vector<double> scores;
  std::vector<Edge> edges;
  for (const auto& s : scored) {
    scores.push_back(s.score);
    edges.push_back(s.edge);
  }
  return f1_at_cutoff(scores, labels, edges, cutoff);
}

}  // namespace hyperwalk
