#include "hyperwalk/local_walk.hpp"

#include <algorithm>
#include <cmath>

#include "hyperwalk/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hyperwalk {

WalkRows::WalkRows(std::size_t num_vertices, int max_step)
    : max_step_(max_step), slot_(num_vertices, kNone) {}

const WalkDistribution& WalkRows::row(VertexId v) const {
  if (!has(v))
    throw ContractViolation("walk row for vertex " + std::to_string(v) + " was not computed");
  return rows_[slot_[v]];
}

void WalkRows::add(WalkDistribution row) {
  if (row.source >= slot_.size()) throw ContractViolation("walk row source out of range");
  slot_[row.source] = static_cast<std::uint32_t>(rows_.size());
  rows_.push_back(std::move(row));
}

namespace {

// Dense scratch space reused across sources by one worker.
class Propagator {
 public:
  explicit Propagator(const CsrMatrix& p)
      : p_(p), cur_(p.rows(), 0.0), next_(p.rows(), 0.0), acc_(p.rows(), 0.0),
        in_next_(p.rows(), 0), in_acc_(p.rows(), 0) {}

  // Fills `out[slot]` for each requested K (sorted ascending, unique).
  void run(VertexId source, std::span<const int> ks, const WalkOptions& options,
           std::vector<WalkDistribution>& out, std::uint64_t& updates) {
    cur_support_.assign(1, source);
    cur_[source] = 1.0;
    std::size_t want = 0;
    const int k_max = ks.back();
    for (int k = 1; k <= k_max; ++k) {
      next_support_.clear();
      for (Index i : cur_support_) {
        const double mass = cur_[i];
        auto cols = p_.row_indices(i);
        auto vals = p_.row_values(i);
        for (std::size_t t = 0; t < cols.size(); ++t) {
          const Index j = cols[t];
          if (!in_next_[j]) {
            in_next_[j] = 1;
            next_support_.push_back(j);
          }
          next_[j] += mass * vals[t];
        }
        updates += cols.size();
        cur_[i] = 0.0;
      }
      cur_support_.swap(next_support_);
      cur_.swap(next_);
      for (Index j : cur_support_) {
        in_next_[j] = 0;
        if (!in_acc_[j]) {
          in_acc_[j] = 1;
          acc_support_.push_back(j);
        }
        acc_[j] += cur_[j];
      }
      if (k == ks[want]) {
        out[want] = emit(source, k, options);
        ++want;
      }
    }
    for (Index j : cur_support_) cur_[j] = 0.0;
    for (Index j : acc_support_) {
      acc_[j] = 0.0;
      in_acc_[j] = 0;
    }
    acc_support_.clear();
  }

 private:
  WalkDistribution emit(VertexId source, int k, const WalkOptions& options) {
    std::sort(acc_support_.begin(), acc_support_.end());
    WalkDistribution row;
    row.source = source;
    row.max_step = k;
    row.probs.indices.reserve(acc_support_.size());
    row.probs.values.reserve(acc_support_.size());
    const double scale = 1.0 / static_cast<double>(k);
    double total = 0.0;
    for (Index j : acc_support_) {
      const double v = acc_[j] * scale;
      if (v < options.drop_threshold) continue;
      row.probs.indices.push_back(j);
      row.probs.values.push_back(v);
      total += v;
    }
    if (std::abs(total - 1.0) > options.renormalize_tolerance && total > 0.0)
      for (double& v : row.probs.values) v /= total;
    return row;
  }

  const CsrMatrix& p_;
  std::vector<double> cur_, next_, acc_;
  std::vector<char> in_next_, in_acc_;
  std::vector<Index> cur_support_, next_support_, acc_support_;
};

}  // namespace

std::vector<WalkRows> walk_matrix_rows_multi(const CsrMatrix& transition,
                                             std::span<const VertexId> sources,
                                             std::span<const int> max_steps,
                                             const WalkOptions& options,
                                             WalkCounters* counters) {
  if (max_steps.empty()) throw ParameterError("no walk length requested");
  for (int k : max_steps)
    if (k < 1) throw ParameterError("maximum walk length K must be >= 1, got " + std::to_string(k));
  if (transition.rows() != transition.cols())
    throw ContractViolation("transition matrix must be square");

  std::vector<int> ks(max_steps.begin(), max_steps.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  std::vector<VertexId> order(sources.begin(), sources.end());
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  for (VertexId v : order)
    if (v >= transition.rows()) throw ContractViolation("walk source outside the vertex range");

  // computed[s][k-slot]
  std::vector<std::vector<WalkDistribution>> computed(order.size(),
                                                      std::vector<WalkDistribution>(ks.size()));
  std::uint64_t updates = 0;
  const auto count = static_cast<std::int64_t>(order.size());
#pragma omp parallel reduction(+ : updates)
  {
    Propagator worker(transition);
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t s = 0; s < count; ++s)
      worker.run(order[static_cast<std::size_t>(s)], ks, options,
                 computed[static_cast<std::size_t>(s)], updates);
  }
  if (counters) counters->updates += updates;

  std::vector<WalkRows> out;
  out.reserve(max_steps.size());
  for (int k : max_steps) {
    const auto slot = static_cast<std::size_t>(std::lower_bound(ks.begin(), ks.end(), k) - ks.begin());
    WalkRows rows(transition.rows(), k);
    for (auto& per_source : computed) rows.add(per_source[slot]);
    out.push_back(std::move(rows));
  }
  return out;
}

WalkRows walk_matrix_rows(const CsrMatrix& transition, std::span<const VertexId> sources,
                          int max_step, const WalkOptions& options, WalkCounters* counters) {
  const int ks[] = {max_step};
  return std::move(walk_matrix_rows_multi(transition, sources, ks, options, counters).front());
}

}  // namespace hyperwalk
