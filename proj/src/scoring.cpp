#include "hyperwalk/scoring.hpp"

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCore>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>

#include "hyperwalk/divergence.hpp"
#include "hyperwalk/errors.hpp"
#include "hyperwalk/projection.hpp"

namespace hyperwalk {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::kLrw: return "LRW";
    case Method::kLrwJs: return "LRW-JS";
    case Method::kLrwGjs: return "LRW-GJS";
    case Method::kHcn: return "HCN";
    case Method::kHkatz: return "HKatz";
    case Method::kHpra: return "HPRA";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  std::string key;
  for (char c : name) key.push_back(c == '_' ? '-' : static_cast<char>(std::toupper(c)));
  for (Method m : kAllMethods) {
    std::string canon;
    for (char c : method_name(m)) canon.push_back(static_cast<char>(std::toupper(c)));
    if (key == canon) return m;
  }
  if (key == "HPRA-CHS") return Method::kHpra;
  throw ParameterError("unknown method '" + std::string(name) + "'");
}

bool is_walk_method(Method m) {
  return m == Method::kLrw || m == Method::kLrwJs || m == Method::kLrwGjs;
}

namespace {

double pair_count(std::size_t t) { return static_cast<double>(t) * static_cast<double>(t - 1) / 2.0; }

void require_pairable(const Edge& e) {
  if (e.size() < 2) throw ContractViolation("scored hyperedge needs at least two vertices");
}

// Mean of f(i, j) over unordered vertex pairs of e.
template <typename PairFn>
double pair_mean(const Edge& e, PairFn f) {
  require_pairable(e);
  double total = 0.0;
  for (std::size_t a = 0; a < e.size(); ++a)
    for (std::size_t b = a + 1; b < e.size(); ++b) total += f(e[a], e[b]);
  return total / pair_count(e.size());
}

std::size_t sorted_intersection_size(std::span<const Index> a, std::span<const Index> b) {
  std::size_t count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) ++i;
    else if (b[j] < a[i]) ++j;
    else { ++count; ++i; ++j; }
  }
  return count;
}

}  // namespace

double score_lrw(const Edge& e, const WalkRows& rows) {
  return pair_mean(e, [&](VertexId i, VertexId j) { return rows.entry(i, j) + rows.entry(j, i); });
}

double score_lrw_js(const Edge& e, const WalkRows& rows) {
  return 1.0 - pair_mean(e, [&](VertexId i, VertexId j) {
           return js(rows.row(i).probs, rows.row(j).probs);
         });
}

double score_lrw_gjs(const Edge& e, const WalkRows& rows) {
  require_pairable(e);
  std::vector<const SparseVector*> dists;
  dists.reserve(e.size());
  for (VertexId v : e) dists.push_back(&rows.row(v).probs);
  const double t = static_cast<double>(e.size());
  const double d = js_generalized(std::span<const SparseVector* const>(dists),
                                  Weights::uniform(e.size()));
  return std::clamp(1.0 - d / std::log2(t), 0.0, 1.0);
}

double score_hcn(const Edge& e, const Hypergraph& g) {
  return pair_mean(e, [&](VertexId i, VertexId j) {
    const auto ni = g.neighbors(i);
    const auto nj = g.neighbors(j);
    return static_cast<double>(sorted_intersection_size(ni, nj));
  });
}

double score_hcn(const Edge& e, const CsrMatrix& adjacency) {
  return pair_mean(e, [&](VertexId i, VertexId j) {
    return static_cast<double>(
        sorted_intersection_size(adjacency.row_indices(i), adjacency.row_indices(j)));
  });
}

// ---------------------------------------------------------------------------
// Katz

double spectral_radius(const CsrMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 0.0;
  // Power iteration on A + I keeps the iterate strictly positive, so the
  // Collatz-Wielandt ratio max_i (Ax)_i / x_i stays a valid upper bound.
  std::vector<double> x(n, 1.0);
  double upper = 0.0;
  for (int iter = 0; iter < 5000; ++iter) {
    const auto ax = a.multiply(x);
    double hi = 0.0, num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      hi = std::max(hi, ax[i] / x[i]);
      num += x[i] * ax[i];
      den += x[i] * x[i];
    }
    upper = hi;
    const double rayleigh = num / den;
    if (upper - rayleigh <= 1e-10 * std::max(1.0, upper)) break;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      x[i] += ax[i];
      norm = std::max(norm, x[i]);
    }
    for (double& v : x) v /= norm;
  }
  return upper;
}

KatzIndex::KatzIndex(const CsrMatrix& adjacency, double beta, KatzEvaluation evaluation,
                     int terms, std::span<const VertexId> columns,
                     std::size_t closed_form_limit) {
  if (!(beta > 0.0)) throw ParameterError("Katz damping factor must be positive");
  const std::size_t n = adjacency.rows();
  closed_form_ = evaluation == KatzEvaluation::kClosedForm ||
                 (evaluation == KatzEvaluation::kAuto && n <= closed_form_limit);

  std::vector<VertexId> cols(columns.begin(), columns.end());
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

  if (closed_form_) {
    const double radius = spectral_radius(adjacency);
    if (beta * radius >= 1.0)
      throw DivergenceError("Katz series diverges: beta=" + std::to_string(beta) +
                            " but 1/lambda_max=" + std::to_string(1.0 / radius));
    // (I - beta A) x = e_j gives x = e_j + column j of the Katz matrix.
    std::vector<Eigen::Triplet<double>> entries;
    entries.reserve(adjacency.nnz() + n);
    for (Index r = 0; r < n; ++r) {
      entries.emplace_back(r, r, 1.0);
      auto idx = adjacency.row_indices(r);
      auto val = adjacency.row_values(r);
      for (std::size_t k = 0; k < idx.size(); ++k) entries.emplace_back(r, idx[k], -beta * val[k]);
    }
    Eigen::SparseMatrix<double> system(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    system.setFromTriplets(entries.begin(), entries.end());
    Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper> solver;
    solver.setTolerance(1e-14);
    solver.setMaxIterations(static_cast<Eigen::Index>(std::max<std::size_t>(1000, 4 * n)));
    solver.compute(system);
    for (VertexId j : cols) {
      Eigen::VectorXd rhs = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
      rhs[j] = 1.0;
      Eigen::VectorXd x = solver.solve(rhs);
      if (solver.info() != Eigen::Success)
        throw DivergenceError("Katz linear solve did not converge");
      x[j] -= 1.0;
      columns_.emplace(j, std::vector<double>(x.data(), x.data() + n));
    }
  } else {
    if (terms < 1) throw ParameterError("truncated Katz series needs at least one term");
    for (VertexId j : cols) {
      std::vector<double> power(n, 0.0), sum(n, 0.0);
      power[j] = 1.0;
      for (int l = 1; l <= terms; ++l) {
        power = adjacency.multiply(power);
        for (std::size_t i = 0; i < n; ++i) {
          power[i] *= beta;
          sum[i] += power[i];
        }
      }
      columns_.emplace(j, std::move(sum));
    }
  }
}

double KatzIndex::similarity(VertexId i, VertexId j) const {
  // Katz matrix is symmetric; use whichever column is available.
  if (auto it = columns_.find(j); it != columns_.end()) return it->second.at(i);
  if (auto it = columns_.find(i); it != columns_.end()) return it->second.at(j);
  throw ContractViolation("Katz column not computed for pair (" + std::to_string(i) + ", " +
                          std::to_string(j) + ")");
}

double score_hkatz(const Edge& e, const KatzIndex& katz) {
  return pair_mean(e, [&](VertexId i, VertexId j) { return katz.similarity(i, j); });
}

double score_hkatz(const Edge& e, const CsrMatrix& adjacency, double beta,
                   std::optional<int> l_max) {
  const KatzIndex katz(adjacency, beta,
                       l_max ? KatzEvaluation::kTruncated : KatzEvaluation::kClosedForm,
                       l_max.value_or(0), e);
  return score_hkatz(e, katz);
}

// ---------------------------------------------------------------------------
// Resource allocation

double hra_similarity(VertexId i, VertexId j, const CsrMatrix& w, std::span<const double> degrees) {
  // (W D^-1 W)_ij = sum_k w_ik w_kj / d_k, and W is symmetric, so this is a
  // merge of rows i and j.
  auto ci = w.row_indices(i);
  auto vi = w.row_values(i);
  auto cj = w.row_indices(j);
  auto vj = w.row_values(j);
  double two_hop = 0.0;
  std::size_t a = 0, b = 0;
  while (a < ci.size() && b < cj.size()) {
    if (ci[a] < cj[b]) ++a;
    else if (cj[b] < ci[a]) ++b;
    else {
      two_hop += vi[a] * vj[b] / degrees[ci[a]];
      ++a;
      ++b;
    }
  }
  return w.at(i, j) + two_hop;
}

double score_hpra(const Edge& e, const CsrMatrix& w, std::span<const double> degrees) {
  return pair_mean(e, [&](VertexId i, VertexId j) { return hra_similarity(i, j, w, degrees); });
}

// ---------------------------------------------------------------------------
// Batch scoring

std::vector<VertexId> vertex_union(std::span<const Edge> edges) {
  std::vector<VertexId> out;
  for (const auto& e : edges) out.insert(out.end(), e.begin(), e.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

std::string describe(const Edge& e) {
  std::string s = "{";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(e[i]);
  }
  return s + "}";
}

std::vector<Edge> checked_candidates(const Hypergraph& g, std::span<const Edge> candidates) {
  std::vector<Edge> out;
  out.reserve(candidates.size());
  for (const auto& raw : candidates) {
    Edge e = raw;
    canonicalize(e);
    if (e.size() < 2)
      throw InputError("candidate " + describe(raw) + " has fewer than two distinct vertices");
    for (VertexId v : e)
      if (v >= g.num_vertices() || g.degree(v) == 0)
        throw InputError("candidate " + describe(raw) + " contains vertex " + std::to_string(v) +
                         " which is not part of the observed hypergraph");
    out.push_back(std::move(e));
  }
  return out;
}

template <typename ScoreFn>
std::vector<double> score_each(std::span<const Edge> edges, ScoreFn score) {
  std::vector<double> out(edges.size());
  const auto count = static_cast<std::int64_t>(edges.size());
#pragma omp parallel for schedule(dynamic, 32)
  for (std::int64_t c = 0; c < count; ++c)
    out[static_cast<std::size_t>(c)] = score(edges[static_cast<std::size_t>(c)]);
  return out;
}

}  // namespace

std::vector<double> score_with_rows(Method method, std::span<const Edge> candidates,
                                    const WalkRows& rows) {
  switch (method) {
    case Method::kLrw:
      return score_each(candidates, [&](const Edge& e) { return score_lrw(e, rows); });
    case Method::kLrwJs:
      return score_each(candidates, [&](const Edge& e) { return score_lrw_js(e, rows); });
    case Method::kLrwGjs:
      return score_each(candidates, [&](const Edge& e) { return score_lrw_gjs(e, rows); });
    default:
      throw ContractViolation("score_with_rows called for a non-walk method");
  }
}

std::vector<double> score_edges(const MethodSpec& spec, const Hypergraph& g,
                                std::span<const Edge> candidates, const WalkOptions& options) {
  const auto edges = checked_candidates(g, candidates);
  if (edges.empty()) return {};

  switch (spec.kind) {
    case Method::kLrw:
    case Method::kLrwJs:
    case Method::kLrwGjs: {
      const auto p = transition(g);
      const auto sources = vertex_union(edges);
      const auto rows = walk_matrix_rows(p, sources, spec.max_step, options);
      return score_with_rows(spec.kind, edges, rows);
    }
    case Method::kHcn: {
      const auto a = adjacency(g);
      return score_each(edges, [&](const Edge& e) { return score_hcn(e, a); });
    }
    case Method::kHkatz: {
      const auto a = adjacency(g);
      const auto columns = vertex_union(edges);
      const KatzIndex katz(a, spec.beta, spec.katz, spec.katz_terms, columns,
                           spec.closed_form_limit);
      return score_each(edges, [&](const Edge& e) { return score_hkatz(e, katz); });
    }
    case Method::kHpra: {
      const auto w = weighted_projection(g);
      const auto d = degrees(g);
      return score_each(edges, [&](const Edge& e) { return score_hpra(e, w, d); });
    }
  }
  throw ContractViolation("unhandled method");
}

std::vector<ScoredEdge> score_candidates(const MethodSpec& spec, const Hypergraph& g,
                                         std::span<const Edge> candidates,
                                         const WalkOptions& options) {
  const auto scores = score_edges(spec, g, candidates, options);
  std::vector<ScoredEdge> out;
  out.reserve(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    Edge e = candidates[c];
    canonicalize(e);
    out.push_back({std::move(e), scores[c], spec});
  }
  return out;
}

}  // namespace hyperwalk
