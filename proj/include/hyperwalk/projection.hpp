#pragma once

#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/sparse_matrix.hpp"

namespace hyperwalk {

/// a_ij = number of hyperedges containing both i and j; zero diagonal.
CsrMatrix adjacency(const Hypergraph& g);

/// w_ij = sum over shared hyperedges e of 1/(|e|-1); zero diagonal.
/// Row sums equal vertex degrees.
CsrMatrix weighted_projection(const Hypergraph& g);

/// Row-stochastic transition matrix of the vertex -> hyperedge -> vertex
/// walk, built as D_v^{-1} W. Throws ContractViolation on isolated vertices.
CsrMatrix transition(const Hypergraph& g);

/// Same matrix accumulated directly from the two-step walk: pick an
/// incident hyperedge uniformly, then another of its vertices uniformly.
/// Independent of `weighted_projection`; used as a cross-check.
CsrMatrix transition_by_walk(const Hypergraph& g);

/// Vertex degrees as reals.
std::vector<double> degrees(const Hypergraph& g);

}  // namespace hyperwalk
