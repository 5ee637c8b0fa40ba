#include "hyperwalk/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

void canonicalize(Edge& e) {
  std::sort(e.begin(), e.end());
  e.erase(std::unique(e.begin(), e.end()), e.end());
}

namespace {

std::vector<Edge> normalize_edges(std::vector<Edge> edges, std::size_t num_vertices) {
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (auto& e : edges) {
    canonicalize(e);
    if (e.size() < 2) continue;
    if (e.back() >= num_vertices) {
      throw InputError("hyperedge references vertex " + std::to_string(e.back()) +
                       " but the hypergraph has " + std::to_string(num_vertices) +
                       " vertices");
    }
    kept.push_back(std::move(e));
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  return kept;
}

bool label_less(const std::string& a, const std::string& b, bool integer_labels) {
  if (integer_labels) {
    std::int64_t x = 0, y = 0;
    auto rx = std::from_chars(a.data(), a.data() + a.size(), x);
    auto ry = std::from_chars(b.data(), b.data() + b.size(), y);
    if (rx.ec == std::errc() && ry.ec == std::errc()) return x < y;
  }
  return a < b;
}

}  // namespace

Hypergraph::Hypergraph(std::vector<std::string> labels, std::vector<Edge> edges,
                       bool integer_labels)
    : labels_(std::move(labels)), integer_labels_(integer_labels) {
  edges_ = normalize_edges(std::move(edges), labels_.size());
  build_incidence();
}

Hypergraph::Hypergraph(std::size_t num_vertices, std::vector<Edge> edges) {
  labels_.reserve(num_vertices);
  for (std::size_t v = 0; v < num_vertices; ++v) labels_.push_back(std::to_string(v));
  edges_ = normalize_edges(std::move(edges), num_vertices);
  build_incidence();
}

void Hypergraph::build_incidence() {
  const std::size_t n = labels_.size();
  offsets_.assign(n + 1, 0);
  for (const auto& e : edges_)
    for (VertexId v : e) ++offsets_[v + 1];
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  incidence_.resize(offsets_[n]);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id)
    for (VertexId v : edges_[id]) incidence_[cursor[v]++] = id;
}

std::vector<VertexId> Hypergraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  for (EdgeId e : incident_edges(v))
    for (VertexId u : edges_[e])
      if (u != v) out.push_back(u);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool Hypergraph::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

// ---------------------------------------------------------------------------
// I/O

Hypergraph parse(std::istream& in, const LoadOptions& options) {
  const std::size_t min_card = std::max<std::size_t>(2, options.min_cardinality);

  // Tokens per retained line, still in label space.
  std::vector<std::vector<std::string>> raw_edges;
  std::vector<std::vector<std::int64_t>> int_edges;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::string> tokens;
    std::string token;
    for (char c : line) {
      if (c == ',' || c == ' ' || c == '\t') {
        if (!token.empty()) tokens.push_back(std::move(token));
        token.clear();
      } else {
        token.push_back(c);
      }
    }
    if (!token.empty()) tokens.push_back(std::move(token));

    if (options.label_mode) {
      std::sort(tokens.begin(), tokens.end());
      tokens.erase(std::unique(tokens.begin(), tokens.end()), tokens.end());
      if (tokens.size() >= min_card) raw_edges.push_back(std::move(tokens));
    } else {
      std::vector<std::int64_t> ids;
      ids.reserve(tokens.size());
      for (const auto& t : tokens) {
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
        if (ec != std::errc() || ptr != t.data() + t.size())
          throw ParseError(line_no, "non-integer vertex token '" + t + "'");
        ids.push_back(value);
      }
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      if (ids.size() >= min_card) int_edges.push_back(std::move(ids));
    }
  }

  std::vector<std::string> labels;
  std::vector<Edge> edges;
  if (options.label_mode) {
    std::map<std::string, VertexId> ids;
    for (const auto& e : raw_edges)
      for (const auto& t : e) ids.emplace(t, 0);
    VertexId next = 0;
    for (auto& [label, id] : ids) {
      id = next++;
      labels.push_back(label);
    }
    for (const auto& e : raw_edges) {
      Edge edge;
      for (const auto& t : e) edge.push_back(ids.at(t));
      edges.push_back(std::move(edge));
    }
  } else {
    std::vector<std::int64_t> all;
    for (const auto& e : int_edges) all.insert(all.end(), e.begin(), e.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (auto v : all) labels.push_back(std::to_string(v));
    for (const auto& e : int_edges) {
      Edge edge;
      for (auto v : e)
        edge.push_back(static_cast<VertexId>(std::lower_bound(all.begin(), all.end(), v) -
                                             all.begin()));
      edges.push_back(std::move(edge));
    }
  }

  Hypergraph g(std::move(labels), std::move(edges), !options.label_mode);
  if (g.empty()) throw EmptyHypergraphError("no hyperedges left after filtering");
  return g;
}

Hypergraph load(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open dataset '" + path.string() + "'");
  return parse(in, options);
}

void save(const Hypergraph& g, std::ostream& out) {
  // Edges are ordered by vertex ID, which follows label order only when the
  // hypergraph came from `parse`; sort by label to honour the format.
  std::vector<std::vector<const std::string*>> rows;
  rows.reserve(g.num_edges());
  const bool ints = g.integer_labels();
  auto less = [ints](const std::string* a, const std::string* b) {
    return label_less(*a, *b, ints);
  };
  for (const auto& e : g.edges()) {
    std::vector<const std::string*> row;
    for (VertexId v : e) row.push_back(&g.label(v));
    std::sort(row.begin(), row.end(), less);
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [&](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), less);
  });
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << ',';
      out << *row[i];
    }
    out << '\n';
  }
}

void save(const Hypergraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path.string() + "'");
  save(g, out);
}

// ---------------------------------------------------------------------------
// Structure

namespace {

struct DisjointSets {
  std::vector<VertexId> parent;
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), VertexId{0});
  }
  VertexId find(VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

Hypergraph largest_component(const Hypergraph& g) {
  if (g.empty()) throw EmptyHypergraphError("largest_component of an empty hypergraph");
  const std::size_t n = g.num_vertices();
  DisjointSets sets(n);
  for (const auto& e : g.edges())
    for (std::size_t i = 1; i < e.size(); ++i) sets.unite(e[0], e[i]);

  // Component key: (size, min label). Roots are not necessarily min IDs
  // when labels are not in ID order, so track the min label explicitly.
  std::vector<std::size_t> size(n, 0);
  std::vector<VertexId> min_vertex(n, static_cast<VertexId>(-1));
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) continue;
    const VertexId r = sets.find(v);
    ++size[r];
    if (min_vertex[r] == static_cast<VertexId>(-1) ||
        label_less(g.label(v), g.label(min_vertex[r]), g.integer_labels()))
      min_vertex[r] = v;
  }
  VertexId best = static_cast<VertexId>(-1);
  for (VertexId r = 0; r < n; ++r) {
    if (size[r] == 0) continue;
    if (best == static_cast<VertexId>(-1) || size[r] > size[best] ||
        (size[r] == size[best] &&
         label_less(g.label(min_vertex[r]), g.label(min_vertex[best]), g.integer_labels())))
      best = r;
  }

  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (sets.find(e[0]) == best) kept.push_back(e);
  return induced_by_edges(g, kept).graph;
}

bool InducedHypergraph::translate(const Edge& parent_edge, Edge& out) const {
  out.clear();
  out.reserve(parent_edge.size());
  for (VertexId v : parent_edge) {
    if (v >= from_parent.size() || from_parent[v] == kAbsent) return false;
    out.push_back(from_parent[v]);
  }
  canonicalize(out);
  return true;
}

InducedHypergraph induced_by_edges(const Hypergraph& parent, const std::vector<Edge>& edges) {
  InducedHypergraph result;
  result.from_parent.assign(parent.num_vertices(), InducedHypergraph::kAbsent);
  std::vector<char> used(parent.num_vertices(), 0);
  for (const auto& e : edges)
    for (VertexId v : e) used.at(v) = 1;

  std::vector<std::string> labels;
  for (VertexId v = 0; v < parent.num_vertices(); ++v) {
    if (!used[v]) continue;
    result.from_parent[v] = static_cast<VertexId>(result.to_parent.size());
    result.to_parent.push_back(v);
    labels.push_back(parent.label(v));
  }
  std::vector<Edge> local;
  local.reserve(edges.size());
  for (const auto& e : edges) {
    Edge t;
    result.translate(e, t);
    local.push_back(std::move(t));
  }
  result.graph = Hypergraph(std::move(labels), std::move(local), parent.integer_labels());
  return result;
}

Stats stats(const Hypergraph& g) {
  if (g.empty()) throw EmptyHypergraphError("stats of an empty hypergraph");
  Stats s;
  s.num_vertices = g.num_vertices();
  s.num_edges = g.num_edges();
  std::size_t incidences = 0;
  for (const auto& e : g.edges()) incidences += e.size();
  s.mean_degree = static_cast<double>(incidences) / static_cast<double>(s.num_vertices);
  s.mean_cardinality = static_cast<double>(incidences) / static_cast<double>(s.num_edges);
  return s;
}

}  // namespace hyperwalk
