#include "hyperwalk/projection.hpp"

#include <string>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

namespace {

// Accumulates weight(|e|) for every ordered pair i != j sharing e.
// Cost is O(sum_e |e|^2), independent of n.
template <typename WeightFn>
CsrMatrix pairwise_accumulate(const Hypergraph& g, WeightFn weight) {
  std::vector<Triplet> triplets;
  std::size_t pairs = 0;
  for (const auto& e : g.edges()) pairs += e.size() * (e.size() - 1);
  triplets.reserve(pairs);
  for (const auto& e : g.edges()) {
    const double w = weight(e.size());
    for (VertexId i : e)
      for (VertexId j : e)
        if (i != j) triplets.push_back({i, j, w});
  }
  const auto n = g.num_vertices();
  return CsrMatrix::from_triplets(n, n, std::move(triplets));
}

void require_no_isolated(const Hypergraph& g) {
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) == 0)
      throw ContractViolation("transition matrix undefined: vertex '" + g.label(v) +
                              "' has no incident hyperedge");
}

}  // namespace

CsrMatrix adjacency(const Hypergraph& g) {
  return pairwise_accumulate(g, [](std::size_t) { return 1.0; });
}

CsrMatrix weighted_projection(const Hypergraph& g) {
  return pairwise_accumulate(
      g, [](std::size_t card) { return 1.0 / static_cast<double>(card - 1); });
}

std::vector<double> degrees(const Hypergraph& g) {
  std::vector<double> d(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) d[v] = static_cast<double>(g.degree(v));
  return d;
}

CsrMatrix transition(const Hypergraph& g) {
  require_no_isolated(g);
  const CsrMatrix w = weighted_projection(g);
  std::vector<Triplet> triplets;
  triplets.reserve(w.nnz());
  for (Index r = 0; r < w.rows(); ++r) {
    const double inv = 1.0 / static_cast<double>(g.degree(r));
    auto cols = w.row_indices(r);
    auto vals = w.row_values(r);
    for (std::size_t k = 0; k < cols.size(); ++k) triplets.push_back({r, cols[k], vals[k] * inv});
  }
  return CsrMatrix::from_triplets(w.rows(), w.cols(), std::move(triplets));
}

CsrMatrix transition_by_walk(const Hypergraph& g) {
  require_no_isolated(g);
  std::vector<Triplet> triplets;
  for (VertexId i = 0; i < g.num_vertices(); ++i) {
    const double pick_edge = 1.0 / static_cast<double>(g.degree(i));
    for (EdgeId e : g.incident_edges(i)) {
      const auto& members = g.edge(e);
      const double pick_vertex = 1.0 / static_cast<double>(members.size() - 1);
      for (VertexId j : members)
        if (j != i) triplets.push_back({i, j, pick_edge * pick_vertex});
    }
  }
  const auto n = g.num_vertices();
  return CsrMatrix::from_triplets(n, n, std::move(triplets));
}

}  // namespace hyperwalk
