#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace hyperwalk {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// A hyperedge in canonical form: strictly ascending vertex IDs.
using Edge = std::vector<VertexId>;

/// Sorts and deduplicates the vertex list in place.
void canonicalize(Edge& e);

/// Undirected, unweighted hypergraph with dense vertex IDs.
///
/// Construction normalizes the input: vertex lists are sorted and
/// deduplicated, hyperedges with fewer than two distinct vertices are
/// dropped, repeated hyperedges are collapsed, and the surviving hyperedges
/// are stored in lexicographic order. The incidence structure is kept in
/// both directions (edge -> vertices and vertex -> incident edges).
///
/// Vertex IDs are assigned in ascending label order, so the smallest ID of
/// any vertex subset also carries the smallest label. Vertices may have
/// degree zero; callers that need a walk-ready graph use
/// `largest_component` or `induced_by_edges`.
class Hypergraph {
 public:
  Hypergraph() = default;

  /// `labels[v]` is the original label of vertex `v`.
  Hypergraph(std::vector<std::string> labels, std::vector<Edge> edges,
             bool integer_labels = true);

  /// Unlabelled convenience constructor; vertex `v` gets label `v`.
  Hypergraph(std::size_t num_vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return labels_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return edges_.empty(); }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::size_t cardinality(EdgeId e) const { return edges_[e].size(); }

  std::span<const EdgeId> incident_edges(VertexId v) const {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  const std::string& label(VertexId v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  bool integer_labels() const noexcept { return integer_labels_; }

  /// Neighbours of `v` in the clique expansion, ascending.
  std::vector<VertexId> neighbors(VertexId v) const;

  /// True when `e` (canonical) is one of the stored hyperedges.
  bool contains(const Edge& e) const;

 private:
  void build_incidence();

  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
  bool integer_labels_ = true;
};

struct LoadOptions {
  /// Treat tokens as opaque strings instead of integers.
  bool label_mode = false;
  /// Hyperedges with fewer distinct vertices are dropped. Never below 2.
  std::size_t min_cardinality = 2;
};

/// Parses a hyperedge list: one hyperedge per line, vertex tokens separated
/// by commas and/or whitespace, `#` lines are comments, LF or CRLF endings.
Hypergraph parse(std::istream& in, const LoadOptions& options = {});
Hypergraph load(const std::filesystem::path& path, const LoadOptions& options = {});

/// Canonical text form: comma-separated labels, vertices ascending, edges in
/// lexicographic order.
void save(const Hypergraph& g, std::ostream& out);
void save(const Hypergraph& g, const std::filesystem::path& path);

/// Sub-hypergraph on the largest connected component of the clique
/// expansion. Equal-size components are ordered by their smallest label.
Hypergraph largest_component(const Hypergraph& g);

/// Result of restricting a hypergraph to a subset of its hyperedges.
struct InducedHypergraph {
  Hypergraph graph;
  /// Maps a vertex of `graph` to its ID in the parent hypergraph.
  std::vector<VertexId> to_parent;
  /// Maps a parent vertex to its ID in `graph`, or `kAbsent`.
  std::vector<VertexId> from_parent;

  static constexpr VertexId kAbsent = static_cast<VertexId>(-1);

  /// Translates a parent edge; returns false if any vertex is absent.
  bool translate(const Edge& parent_edge, Edge& out) const;
};

/// Hypergraph formed by `edges` (parent IDs), keeping only the vertices that
/// have at least one incident hyperedge. Labels are carried over.
InducedHypergraph induced_by_edges(const Hypergraph& parent,
                                   const std::vector<Edge>& edges);

struct Stats {
  std::size_t num_vertices = 0;
  std::size_t num_edges = 0;
  double mean_degree = 0.0;
  double mean_cardinality = 0.0;
};

Stats stats(const Hypergraph& g);

}  // namespace hyperwalk
