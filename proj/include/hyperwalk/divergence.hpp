#pragma once

#include <span>
#include <vector>

#include "hyperwalk/sparse_matrix.hpp"

namespace hyperwalk {

/// Mixture weights for the generalized divergence: nonnegative, unit sum.
class Weights {
 public:
  /// Throws ParameterError if any weight is negative or the sum is off by
  /// more than 1e-12.
  explicit Weights(std::vector<double> values);
  static Weights uniform(std::size_t t);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  std::span<const double> values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Jensen-Shannon divergence in bits between two sparse distributions over
/// the same universe. Exactly symmetric; clamped to [0, 1].
double js(const SparseVector& p, const SparseVector& q);

/// Dense reference form of `js`.
double js_dense(std::span<const double> p, std::span<const double> q);

/// Generalized Jensen-Shannon divergence of t >= 2 distributions with the
/// given mixture weights, in bits. Lies in [0, log2 t].
double js_generalized(std::span<const SparseVector* const> dists, const Weights& weights);
double js_generalized(std::span<const SparseVector> dists, const Weights& weights);

}  // namespace hyperwalk
