#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "hyperwalk/hypergraph.hpp"
#include "hyperwalk/local_walk.hpp"
#include "hyperwalk/scoring.hpp"

namespace hyperwalk {

using Rng = std::mt19937_64;

/// Deterministic child seed for (master, stream, index); streams separate
/// the split, sampling and cross-validation randomness of each trial.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

namespace seed_stream {
inline constexpr std::uint64_t kSplit = 1;
inline constexpr std::uint64_t kSampling = 2;
inline constexpr std::uint64_t kCrossValidation = 3;
}  // namespace seed_stream

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept;
};
using EdgeSet = std::unordered_set<Edge, EdgeHash>;

struct SplitSpec {
  /// Fraction rho of hyperedges observed during training.
  double observed_fraction = 0.8;
  int trials = 10;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SamplingSpec {
  /// Fraction of a true hyperedge's vertices kept in each fake.
  double alpha = 0.5;
  /// Fakes per missing hyperedge.
  int lambda = 3;

  void validate() const;
};

struct Split {
  std::vector<Edge> observed;
  /// Missing hyperedges after dropping those with unobserved vertices.
  std::vector<Edge> missing;
  std::size_t dropped_missing = 0;
  std::uint64_t seed = 0;
  /// 1 unless earlier seeds left no usable missing hyperedge.
  int attempts = 1;
};

/// ceil(rho * m) hyperedges observed, the rest missing; missing hyperedges
/// touching a vertex without observed hyperedges are dropped. Reseeds up to
/// 100 times when nothing usable remains, then throws DegenerateTrialError.
Split split(const Hypergraph& g, const SplitSpec& spec, int trial);

/// Number of vertices replaced when forging a fake from a hyperedge of
/// `cardinality` vertices: round-half-up((1-alpha) |e|) clamped to
/// [1, |e|-1].
std::size_t replacement_count(std::size_t cardinality, double alpha);

struct CandidateSet {
  std::vector<Edge> positives;
  std::vector<Edge> negatives;
  /// Fakes accepted despite colliding after the resampling budget.
  std::size_t collisions = 0;

  std::size_t size() const noexcept { return positives.size() + negatives.size(); }
  /// Positives followed by negatives.
  std::vector<Edge> all() const;
  /// 1 for positives, 0 for negatives, aligned with `all()`.
  std::vector<char> labels() const;
};

/// Forges fake hyperedges by vertex replacement. Replacement vertices are
/// drawn from vertices with at least one observed hyperedge; fakes matching
/// a known hyperedge or an earlier fake are redrawn up to 100 times.
class NegativeSampler {
 public:
  NegativeSampler(const Hypergraph& g, std::span<const Edge> observed,
                  std::span<const Edge> missing);

  /// Exactly `spec.lambda` fakes for `e`. Throws SamplingError if fewer than
  /// the required number of replacement vertices are available.
  std::vector<Edge> sample(const Edge& e, const SamplingSpec& spec, Rng& rng);

  std::size_t collisions() const noexcept { return collisions_; }
  std::span<const VertexId> eligible() const noexcept { return eligible_; }

 private:
  std::vector<VertexId> eligible_;
  std::vector<char> is_eligible_;
  EdgeSet taken_;
  std::size_t collisions_ = 0;
};

/// One-shot form of `NegativeSampler::sample`.
std::vector<Edge> sample_negatives(const Edge& e, const Hypergraph& g,
                                   std::span<const Edge> observed, const SamplingSpec& spec,
                                   Rng& rng);

/// E^c for one trial: the missing hyperedges plus lambda fakes for each.
CandidateSet build_candidates(const Hypergraph& g, const Split& split, const SamplingSpec& spec,
                              Rng& rng);

struct CrossValidation {
  /// Grid values, ascending.
  std::vector<double> grid;
  /// Mean validation AUROC per grid value; NaN when a value was unusable
  /// (e.g. a divergent Katz damping factor).
  std::vector<double> mean_auroc;
  double chosen = 0.0;
};

struct CvOptions {
  int folds = 5;
  WalkOptions walk;
  KatzEvaluation katz = KatzEvaluation::kAuto;
  int katz_terms = 8;
};

/// Selects the grid value with the highest mean AUROC over `folds` folds of
/// the observed hyperedges; each fold in turn is the validation positive set,
/// `candidates` is the negative set of every fold. Ties go to the smaller
/// value. The grid holds K for walk methods and beta for HKatz.
CrossValidation cross_validate(Method method, const Hypergraph& g, std::span<const Edge> observed,
                               std::span<const Edge> candidates, std::span<const double> grid,
                               const CvOptions& options, Rng& rng);

struct ExperimentConfig {
  SplitSpec split;
  SamplingSpec sampling;
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
  std::vector<int> k_grid{2, 3, 4, 5};
  std::vector<double> beta_grid{0.001, 0.005, 0.01, 0.05, 0.1};
  CvOptions cv;

  void validate() const;
};

struct MethodTrial {
  Method method = Method::kLrwJs;
  double auroc = 0.0;
  double f1 = 0.0;
  /// K or beta picked by cross-validation; empty for parameter-free methods.
  std::optional<double> chosen;
  /// Wall-clock seconds for CV and scoring; not part of serialized results.
  double seconds = 0.0;
};

struct TrialRecord {
  int trial = 0;
  std::uint64_t split_seed = 0;
  std::uint64_t sampling_seed = 0;
  std::uint64_t cv_seed = 0;
  std::size_t observed = 0;
  std::size_t missing = 0;
  std::size_t dropped_missing = 0;
  std::size_t negatives = 0;
  std::size_t collisions = 0;
  std::vector<MethodTrial> methods;
};

struct MethodSummary {
  Method method = Method::kLrwJs;
  double auroc_mean = 0.0;
  double f1_mean = 0.0;
  /// Most frequent chosen parameter; ties go to the smaller value.
  std::optional<double> chosen_mode;
};

struct ExperimentResult {
  double observed_fraction = 0.0;
  double alpha = 0.0;
  int lambda = 0;
  std::vector<TrialRecord> trials;
  std::vector<MethodSummary> summary;
  double mean_missing = 0.0;
};

/// Evaluates one trial: split, candidates, per-method CV and scoring.
TrialRecord run_trial(const Hypergraph& g, const ExperimentConfig& config, int trial);

/// Runs every trial (in parallel when OpenMP is enabled) and aggregates.
/// Results depend only on `g` and `config`, never on the thread count.
ExperimentResult run_experiment(const Hypergraph& g, const ExperimentConfig& config);

}  // namespace hyperwalk
