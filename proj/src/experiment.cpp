#include "hyperwalk/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <map>
#include <numeric>

#include "hyperwalk/errors.hpp"
#include "hyperwalk/metrics.hpp"
#include "hyperwalk/projection.hpp"

namespace hyperwalk {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::size_t uniform_index(Rng& rng, std::size_t bound) {
  return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng);
}

template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_index(rng, i)]);
}

constexpr int kMaxSplitAttempts = 100;
constexpr int kMaxSampleAttempts = 100;

}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = splitmix64(master);
  z = splitmix64(z ^ (stream * 0xd1b54a32d192ed03ULL));
  return splitmix64(z ^ (index * 0xa0761d6478bd642fULL));
}

std::size_t EdgeHash::operator()(const Edge& e) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (VertexId v : e) {
    h ^= v;
    h *= 0x100000001b3ULL;
  }
  return static_cast<std::size_t>(splitmix64(h));
}

void SplitSpec::validate() const {
  if (!(observed_fraction > 0.0 && observed_fraction < 1.0))
    throw ParameterError("observed fraction rho must lie in (0, 1)");
  if (trials < 1) throw ParameterError("trials must be >= 1");
}

void SamplingSpec::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw ParameterError("alpha must lie in (0, 1)");
  if (lambda < 1) throw ParameterError("lambda must be >= 1");
}

// ---------------------------------------------------------------------------
// Split

Split split(const Hypergraph& g, const SplitSpec& spec, int trial) {
  spec.validate();
  const std::size_t m = g.num_edges();
  // Guard against products like 0.7 * 10 = 7.000000000000001.
  const auto observed_count = std::min<std::size_t>(
      m, static_cast<std::size_t>(std::ceil(spec.observed_fraction * static_cast<double>(m) - 1e-9)));

  for (int attempt = 0; attempt < kMaxSplitAttempts; ++attempt) {
    const std::uint64_t index =
        static_cast<std::uint64_t>(trial) | (static_cast<std::uint64_t>(attempt) << 32);
    Split s;
    s.seed = derive_seed(spec.seed, seed_stream::kSplit, index);
    s.attempts = attempt + 1;
    Rng rng(s.seed);
    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), EdgeId{0});
    shuffle(order, rng);

    std::vector<std::size_t> observed_degree(g.num_vertices(), 0);
    for (std::size_t k = 0; k < observed_count; ++k) {
      s.observed.push_back(g.edge(order[k]));
      for (VertexId v : g.edge(order[k])) ++observed_degree[v];
    }
    for (std::size_t k = observed_count; k < m; ++k) {
      const Edge& e = g.edge(order[k]);
      const bool usable = std::all_of(e.begin(), e.end(), [&](VertexId v) { return observed_degree[v] > 0; });
      if (usable) s.missing.push_back(e);
      else ++s.dropped_missing;
    }
    if (!s.missing.empty()) return s;
  }
  throw DegenerateTrialError("trial " + std::to_string(trial) + ": no usable missing hyperedge after " +
                             std::to_string(kMaxSplitAttempts) + " attempts");
}

// ---------------------------------------------------------------------------
// Negative sampling

std::size_t replacement_count(std::size_t cardinality, double alpha) {
  if (cardinality < 2) throw ParameterError("cannot forge a fake from fewer than two vertices");
  const double raw = (1.0 - alpha) * static_cast<double>(cardinality);
  // Round half up; the epsilon absorbs representation error in e.g. 0.5*3.
  const auto rounded = static_cast<std::size_t>(std::floor(raw + 0.5 + 1e-9));
  return std::clamp<std::size_t>(rounded, 1, cardinality - 1);
}

std::vector<Edge> CandidateSet::all() const {
  std::vector<Edge> out = positives;
  out.insert(out.end(), negatives.begin(), negatives.end());
  return out;
}

std::vector<char> CandidateSet::labels() const {
  std::vector<char> out(positives.size(), 1);
  out.resize(size(), 0);
  return out;
}

NegativeSampler::NegativeSampler(const Hypergraph& g, std::span<const Edge> observed,
                                 std::span<const Edge> missing)
    : is_eligible_(g.num_vertices(), 0) {
  for (const auto& e : observed) {
    for (VertexId v : e) is_eligible_.at(v) = 1;
    taken_.insert(e);
  }
  for (const auto& e : missing) taken_.insert(e);
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (is_eligible_[v]) eligible_.push_back(v);
}

std::vector<Edge> NegativeSampler::sample(const Edge& e, const SamplingSpec& spec, Rng& rng) {
  spec.validate();
  const std::size_t r = replacement_count(e.size(), spec.alpha);
  std::size_t blocked = 0;
  for (VertexId v : e)
    if (v < is_eligible_.size() && is_eligible_[v]) ++blocked;
  const std::size_t available = eligible_.size() - blocked;
  if (available < r)
    throw SamplingError("need " + std::to_string(r) + " replacement vertices but only " +
                        std::to_string(available) + " are eligible");

  // Explicit pool when rejection sampling would be slow.
  std::vector<VertexId> pool;
  const bool small_pool = available <= 4 * (r + e.size());
  if (small_pool)
    for (VertexId v : eligible_)
      if (!std::binary_search(e.begin(), e.end(), v)) pool.push_back(v);

  auto forge = [&]() {
    Edge kept = e;
    shuffle(kept, rng);
    kept.resize(e.size() - r);
    if (small_pool) {
      for (std::size_t k = 0; k < r; ++k) {
        std::swap(pool[k], pool[k + uniform_index(rng, pool.size() - k)]);
        kept.push_back(pool[k]);
      }
    } else {
      std::vector<VertexId> chosen;
      while (chosen.size() < r) {
        const VertexId v = eligible_[uniform_index(rng, eligible_.size())];
        if (std::binary_search(e.begin(), e.end(), v)) continue;
        if (std::find(chosen.begin(), chosen.end(), v) != chosen.end()) continue;
        chosen.push_back(v);
      }
      kept.insert(kept.end(), chosen.begin(), chosen.end());
    }
    canonicalize(kept);
    return kept;
  };

  std::vector<Edge> fakes;
  fakes.reserve(static_cast<std::size_t>(spec.lambda));
  for (int f = 0; f < spec.lambda; ++f) {
    Edge fake;
    bool fresh = false;
    for (int attempt = 0; attempt < kMaxSampleAttempts && !fresh; ++attempt) {
      fake = forge();
      fresh = !taken_.contains(fake);
    }
    if (!fresh) ++collisions_;
    taken_.insert(fake);
    fakes.push_back(std::move(fake));
  }
  return fakes;
}

std::vector<Edge> sample_negatives(const Edge& e, const Hypergraph& g,
                                   std::span<const Edge> observed, const SamplingSpec& spec,
                                   Rng& rng) {
  const Edge* self = &e;
  NegativeSampler sampler(g, observed, std::span<const Edge>(self, 1));
  return sampler.sample(e, spec, rng);
}

CandidateSet build_candidates(const Hypergraph& g, const Split& split, const SamplingSpec& spec,
                              Rng& rng) {
  NegativeSampler sampler(g, split.observed, split.missing);
  CandidateSet c;
  c.positives = split.missing;
  c.negatives.reserve(split.missing.size() * static_cast<std::size_t>(spec.lambda));
  for (const auto& e : split.missing) {
    auto fakes = sampler.sample(e, spec, rng);
    std::move(fakes.begin(), fakes.end(), std::back_inserter(c.negatives));
  }
  c.collisions = sampler.collisions();
  return c;
}

// ---------------------------------------------------------------------------
// Cross-validation

namespace {

struct FoldData {
  InducedHypergraph train;
  std::vector<Edge> edges;   // local IDs, positives first
  std::vector<char> labels;
  std::vector<VertexId> sources;
};

// Per-fold AUROC for each grid value; NaN marks an unusable value.
std::vector<double> evaluate_fold(Method method, const FoldData& fold,
                                  std::span<const double> grid, const CvOptions& options) {
  std::vector<double> out(grid.size(), std::numeric_limits<double>::quiet_NaN());
  if (is_walk_method(method)) {
    std::vector<int> ks;
    for (double k : grid) ks.push_back(static_cast<int>(k));
    const auto p = transition(fold.train.graph);
    const auto rows = walk_matrix_rows_multi(p, fold.sources, ks, options.walk);
    for (std::size_t i = 0; i < grid.size(); ++i)
      out[i] = auroc(score_with_rows(method, fold.edges, rows[i]), fold.labels);
  } else if (method == Method::kHkatz) {
    const auto a = adjacency(fold.train.graph);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      try {
        const KatzIndex katz(a, grid[i], options.katz, options.katz_terms, fold.sources);
        std::vector<double> scores;
        scores.reserve(fold.edges.size());
        for (const auto& e : fold.edges) scores.push_back(score_hkatz(e, katz));
        out[i] = auroc(scores, fold.labels);
      } catch (const DivergenceError&) {
        // left as NaN
      }
    }
  } else {
    throw ContractViolation("method has no tunable parameter");
  }
  return out;
}

}  // namespace

CrossValidation cross_validate(Method method, const Hypergraph& g, std::span<const Edge> observed,
                               std::span<const Edge> candidates, std::span<const double> grid,
                               const CvOptions& options, Rng& rng) {
  if (grid.empty()) throw ParameterError("empty cross-validation grid");
  if (options.folds < 2) throw ParameterError("cross-validation needs at least two folds");
  const auto k = static_cast<std::size_t>(options.folds);
  if (observed.size() < k) throw ParameterError("fewer observed hyperedges than folds");

  CrossValidation cv;
  cv.grid.assign(grid.begin(), grid.end());
  std::sort(cv.grid.begin(), cv.grid.end());
  cv.grid.erase(std::unique(cv.grid.begin(), cv.grid.end()), cv.grid.end());
  if (cv.grid.size() == 1) {
    cv.chosen = cv.grid.front();
    cv.mean_auroc.assign(1, std::numeric_limits<double>::quiet_NaN());
    return cv;
  }

  std::vector<std::size_t> order(observed.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  shuffle(order, rng);

  std::vector<double> total(cv.grid.size(), 0.0);
  std::vector<char> unusable(cv.grid.size(), 0);
  std::size_t used_folds = 0;
  for (std::size_t f = 0; f < k; ++f) {
    const std::size_t lo = f * observed.size() / k;
    const std::size_t hi = (f + 1) * observed.size() / k;
    std::vector<Edge> training;
    std::vector<Edge> validation;
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (i >= lo && i < hi) validation.push_back(observed[order[i]]);
      else training.push_back(observed[order[i]]);
    }

    FoldData fold{induced_by_edges(g, training), {}, {}, {}};
    Edge local;
    for (const auto& e : validation)
      if (fold.train.translate(e, local)) {
        fold.edges.push_back(local);
        fold.labels.push_back(1);
      }
    const std::size_t positives = fold.edges.size();
    for (const auto& e : candidates)
      if (fold.train.translate(e, local)) {
        fold.edges.push_back(local);
        fold.labels.push_back(0);
      }
    if (positives == 0 || positives == fold.edges.size()) continue;
    fold.sources = vertex_union(fold.edges);

    const auto scores = evaluate_fold(method, fold, cv.grid, options);
    for (std::size_t i = 0; i < scores.size(); ++i) {
      if (std::isnan(scores[i])) unusable[i] = 1;
      else total[i] += scores[i];
    }
    ++used_folds;
  }

  cv.mean_auroc.assign(cv.grid.size(), std::numeric_limits<double>::quiet_NaN());
  if (used_folds == 0) {
    cv.chosen = cv.grid.front();
    return cv;
  }
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < cv.grid.size(); ++i) {
    if (unusable[i]) continue;
    cv.mean_auroc[i] = total[i] / static_cast<double>(used_folds);
    if (!best || cv.mean_auroc[i] > cv.mean_auroc[*best]) best = i;
  }
  if (!best) throw DivergenceError("no cross-validation grid value is usable");
  cv.chosen = cv.grid[*best];
  return cv;
}

// ---------------------------------------------------------------------------
// Experiment driver

void ExperimentConfig::validate() const {
  split.validate();
  sampling.validate();
  if (methods.empty()) throw ParameterError("no methods selected");
  if (k_grid.empty()) throw ParameterError("empty K grid");
  for (int k : k_grid)
    if (k < 1) throw ParameterError("K grid values must be >= 1");
  if (beta_grid.empty()) throw ParameterError("empty beta grid");
  for (double b : beta_grid)
    if (!(b > 0.0)) throw ParameterError("beta grid values must be positive");
  if (cv.folds < 2) throw ParameterError("folds must be >= 2");
}

TrialRecord run_trial(const Hypergraph& g, const ExperimentConfig& config, int trial) {
  using Clock = std::chrono::steady_clock;
  const auto t = static_cast<std::uint64_t>(trial);
  TrialRecord record;
  record.trial = trial;

  const Split s = split(g, config.split, trial);
  record.split_seed = s.seed;
  record.observed = s.observed.size();
  record.missing = s.missing.size();
  record.dropped_missing = s.dropped_missing;

  record.sampling_seed = derive_seed(config.split.seed, seed_stream::kSampling, t);
  Rng sampling_rng(record.sampling_seed);
  const CandidateSet candidates = build_candidates(g, s, config.sampling, sampling_rng);
  record.negatives = candidates.negatives.size();
  record.collisions = candidates.collisions;

  const auto all = candidates.all();
  const auto labels = candidates.labels();
  const auto train = induced_by_edges(g, s.observed);
  std::vector<Edge> local(all.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (!train.translate(all[i], local[i]))
      throw ContractViolation("candidate contains a vertex without observed hyperedges");

  record.cv_seed = derive_seed(config.split.seed, seed_stream::kCrossValidation, t);
  std::vector<double> k_grid(config.k_grid.begin(), config.k_grid.end());

  for (Method method : config.methods) {
    const auto start = Clock::now();
    MethodTrial mt;
    mt.method = method;
    MethodSpec spec;
    spec.kind = method;
    spec.katz = config.cv.katz;
    spec.katz_terms = config.cv.katz_terms;
    if (is_walk_method(method) || method == Method::kHkatz) {
      // Same fold partition for every method of this trial.
      Rng cv_rng(record.cv_seed);
      const auto& grid = method == Method::kHkatz ? config.beta_grid : k_grid;
      const auto cv = cross_validate(method, g, s.observed, all, grid, config.cv, cv_rng);
      mt.chosen = cv.chosen;
      if (method == Method::kHkatz) spec.beta = cv.chosen;
      else spec.max_step = static_cast<int>(cv.chosen);
    }
    const auto scores = score_edges(spec, train.graph, local, config.cv.walk);
    mt.auroc = auroc(scores, labels);
    mt.f1 = f1_at_cutoff(scores, labels, all, candidates.positives.size());
    mt.seconds = std::chrono::duration<double>(Clock::now() - start).count();
    record.methods.push_back(mt);
  }
  return record;
}

ExperimentResult run_experiment(const Hypergraph& g, const ExperimentConfig& config) {
  config.validate();
  const int trials = config.split.trials;
  std::vector<TrialRecord> records(static_cast<std::size_t>(trials));
  std::vector<std::exception_ptr> failures(static_cast<std::size_t>(trials));

#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < trials; ++t) {
    try {
      records[static_cast<std::size_t>(t)] = run_trial(g, config, t);
    } catch (...) {
      failures[static_cast<std::size_t>(t)] = std::current_exception();
    }
  }
  for (int t = 0; t < trials; ++t) {
    if (!failures[static_cast<std::size_t>(t)]) continue;
    try {
      std::rethrow_exception(failures[static_cast<std::size_t>(t)]);
    } catch (const std::exception& e) {
      throw Error("trial " + std::to_string(t) + " failed: " + e.what());
    }
  }

  ExperimentResult result;
  result.observed_fraction = config.split.observed_fraction;
  result.alpha = config.sampling.alpha;
  result.lambda = config.sampling.lambda;
  result.trials = std::move(records);
  double missing = 0.0;
  for (const auto& r : result.trials) missing += static_cast<double>(r.missing);
  result.mean_missing = missing / trials;

  for (std::size_t m = 0; m < config.methods.size(); ++m) {
    MethodSummary summary;
    summary.method = config.methods[m];
    std::map<double, int> counts;
    for (const auto& r : result.trials) {
      summary.auroc_mean += r.methods[m].auroc;
      summary.f1_mean += r.methods[m].f1;
      if (r.methods[m].chosen) ++counts[*r.methods[m].chosen];
    }
    summary.auroc_mean /= trials;
    summary.f1_mean /= trials;
    int best = 0;
    for (const auto& [value, count] : counts)
      if (count > best) {
        best = count;
        summary.chosen_mode = value;
      }
    result.summary.push_back(summary);
  }
  return result;
}

}  // namespace hyperwalk
