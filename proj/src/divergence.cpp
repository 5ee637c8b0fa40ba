#include "hyperwalk/divergence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "hyperwalk/errors.hpp"

namespace hyperwalk {

Weights::Weights(std::vector<double> values) : values_(std::move(values)) {
  double total = 0.0;
  for (double w : values_) {
    if (!(w >= 0.0)) throw ParameterError("mixture weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-12) throw ParameterError("mixture weights must sum to 1");
}

Weights Weights::uniform(std::size_t t) {
  if (t == 0) throw ParameterError("uniform weights need at least one component");
  return Weights(std::vector<double>(t, 1.0 / static_cast<double>(t)));
}

namespace {

// 0.5 * [a log2(a/r) + b log2(b/r)], r = (a+b)/2. Symmetric in (a, b)
// because both the mixture and the final sum are commutative.
inline double js_term(double a, double b) {
  const double r = 0.5 * (a + b);
  const double ta = a > 0.0 ? a * std::log2(a / r) : 0.0;
  const double tb = b > 0.0 ? b * std::log2(b / r) : 0.0;
  return 0.5 * (ta + tb);
}

inline double clamp_unit(double v, double hi) { return std::clamp(v, 0.0, hi); }

}  // namespace

double js(const SparseVector& p, const SparseVector& q) {
  double total = 0.0;
  std::size_t i = 0, j = 0;
  const std::size_t np = p.nnz(), nq = q.nnz();
  while (i < np || j < nq) {
    if (j == nq || (i < np && p.indices[i] < q.indices[j])) {
      total += js_term(p.values[i++], 0.0);
    } else if (i == np || q.indices[j] < p.indices[i]) {
      total += js_term(0.0, q.values[j++]);
    } else {
      total += js_term(p.values[i++], q.values[j++]);
    }
  }
  return clamp_unit(total, 1.0);
}

double js_dense(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ContractViolation("distributions over different universes");
  double total = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) total += js_term(p[x], q[x]);
  return clamp_unit(total, 1.0);
}

double js_generalized(std::span<const SparseVector* const> dists, const Weights& weights) {
  const std::size_t t = dists.size();
  if (t < 2) throw ParameterError("generalized divergence needs at least two distributions");
  if (weights.size() != t) throw ParameterError("one weight per distribution required");

  std::vector<std::size_t> cursor(t, 0);
  // (weight, probability) of the components present at the current point.
  std::vector<std::pair<double, double>> present;
  present.reserve(t);
  double total = 0.0;
  constexpr Index kEnd = std::numeric_limits<Index>::max();
  for (;;) {
    Index x = kEnd;
    for (std::size_t k = 0; k < t; ++k)
      if (cursor[k] < dists[k]->nnz()) x = std::min(x, dists[k]->indices[cursor[k]]);
    if (x == kEnd) break;

    present.clear();
    for (std::size_t k = 0; k < t; ++k) {
      if (cursor[k] < dists[k]->nnz() && dists[k]->indices[cursor[k]] == x) {
        if (weights[k] > 0.0) present.emplace_back(weights[k], dists[k]->values[cursor[k]]);
        ++cursor[k];
      }
    }
    // Summation order fixed by value so the result does not depend on the
    // order in which the distributions were passed.
    std::sort(present.begin(), present.end());
    double r = 0.0;
    for (const auto& [w, v] : present) r += w * v;
    double term = 0.0;
    for (const auto& [w, v] : present) term += w * v * std::log2(v / r);
    total += term;
  }
  return clamp_unit(total, std::log2(static_cast<double>(t)));
}

double js_generalized(std::span<const SparseVector> dists, const Weights& weights) {
  std::vector<const SparseVector*> ptrs;
  ptrs.reserve(dists.size());
  for (const auto& d : dists) ptrs.push_back(&d);
  return js_generalized(std::span<const SparseVector* const>(ptrs), weights);
}

}  // namespace hyperwalk
