#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/local_walk.hpp"
#include "hyperwalk/sparse_matrix.hpp"

namespace hyperwalk {

enum class Method { kLrw, kLrwJs, kLrwGjs, kHcn, kHkatz, kHpra };

/// Display names: LRW, LRW-JS, LRW-GJS, HCN, HKatz, HPRA.
std::string_view method_name(Method m);
/// Case-insensitive; '-' and '_' are interchangeable. Throws ParameterError.
Method parse_method(std::string_view name);
bool is_walk_method(Method m);
inline constexpr Method kAllMethods[] = {Method::kHcn, Method::kHkatz, Method::kHpra,
                                         Method::kLrw, Method::kLrwJs, Method::kLrwGjs};

enum class KatzEvaluation {
  /// Closed form up to `closed_form_limit` vertices, truncated beyond.
  kAuto,
  kClosedForm,
  kTruncated,
};

struct MethodSpec {
  Method kind = Method::kLrwJs;
  /// Maximum walk length K for the walk methods.
  int max_step = 2;
  /// Katz damping factor.
  double beta = 0.01;
  KatzEvaluation katz = KatzEvaluation::kAuto;
  int katz_terms = 8;
  std::size_t closed_form_limit = 20000;
};

struct ScoredEdge {
  Edge edge;
  double score = 0.0;
  MethodSpec method;
};

// Walk-based indices. Every vertex of `e` must have a computed row.
double score_lrw(const Edge& e, const WalkRows& rows);
double score_lrw_js(const Edge& e, const WalkRows& rows);
double score_lrw_gjs(const Edge& e, const WalkRows& rows);

/// Mean common-neighbour count over the vertex pairs of `e`.
double score_hcn(const Edge& e, const Hypergraph& g);
/// Same, with neighbourhoods read from the rows of the adjacency matrix.
double score_hcn(const Edge& e, const CsrMatrix& adjacency);

/// Largest eigenvalue of a symmetric nonnegative matrix, returned as a
/// Collatz-Wielandt upper bound tightened by power iteration.
double spectral_radius(const CsrMatrix& a);

/// Pairwise Katz similarities sum_{l>=1} beta^l (A^l)_ij for a fixed set of
/// columns j.
class KatzIndex {
 public:
  /// Throws DivergenceError when the closed form is requested with
  /// beta >= 1/spectral_radius(A).
  KatzIndex(const CsrMatrix& adjacency, double beta, KatzEvaluation evaluation, int terms,
            std::span<const VertexId> columns, std::size_t closed_form_limit = 20000);

  double similarity(VertexId i, VertexId j) const;
  bool closed_form() const noexcept { return closed_form_; }

 private:
  bool closed_form_ = false;
  std::unordered_map<VertexId, std::vector<double>> columns_;
};

double score_hkatz(const Edge& e, const KatzIndex& katz);
/// One-shot form: `l_max` empty selects the closed form.
double score_hkatz(const Edge& e, const CsrMatrix& adjacency, double beta,
                   std::optional<int> l_max);

/// (W + W D_v^{-1} W)_ij for one vertex pair.
double hra_similarity(VertexId i, VertexId j, const CsrMatrix& w, std::span<const double> degrees);
double score_hpra(const Edge& e, const CsrMatrix& w, std::span<const double> degrees);

/// Scores with already computed walk rows; `method` must be a walk method.
std::vector<double> score_with_rows(Method method, std::span<const Edge> candidates,
                                    const WalkRows& rows);

/// Scores every candidate under `spec` on the observed hypergraph `g`.
/// Walk rows, matrices and Katz columns are computed once for the union of
/// candidate vertices. Output order is input order. Throws InputError if a
/// candidate has fewer than two vertices or touches a vertex that is absent
/// from `g` or has no incident hyperedge there.
std::vector<double> score_edges(const MethodSpec& spec, const Hypergraph& g,
                                std::span<const Edge> candidates,
                                const WalkOptions& options = {});

std::vector<ScoredEdge> score_candidates(const MethodSpec& spec, const Hypergraph& g,
                                         std::span<const Edge> candidates,
                                         const WalkOptions& options = {});

/// Union of the vertices of `edges`, ascending.
std::vector<VertexId> vertex_union(std::span<const Edge> edges);

}  // namespace hyperwalk
