#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Dense>

#include "hyperwalk/errors.hpp"
#include "hyperwalk/projection.hpp"
#include "oracles.hpp"

using namespace hyperwalk;

namespace {

// T1 = {{1,2,3},{3,4}} with labels 1..4 stored as IDs 0..3.
const Hypergraph kToy(4, {{0, 1, 2}, {2, 3}});

void expect_matches(const CsrMatrix& m, const oracle::Dense& d, double tol) {
  ASSERT_EQ(m.rows(), d.size());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) EXPECT_NEAR(m.at(i, j), d[i][j], tol) << i << "," << j;
}

}  // namespace

TEST(Adjacency, Toy) {
  const auto a = adjacency(kToy);
  EXPECT_EQ(a.at(0, 1), 1.0);
  EXPECT_EQ(a.at(0, 2), 1.0);
  EXPECT_EQ(a.at(1, 2), 1.0);
  EXPECT_EQ(a.at(2, 3), 1.0);
  EXPECT_EQ(a.at(0, 3), 0.0);
  EXPECT_EQ(a.at(2, 2), 0.0);
  EXPECT_EQ(a.nnz(), 8u);
}

TEST(Adjacency, CountsSharedEdges) {
  const auto a = adjacency(Hypergraph(3, {{0, 1, 2}, {0, 1}}));
  EXPECT_EQ(a.at(0, 1), 2.0);
  EXPECT_EQ(a.at(1, 0), 2.0);
}

TEST(WeightedProjection, Toy) {
  const auto w = weighted_projection(kToy);
  EXPECT_EQ(w.at(0, 1), 0.5);
  EXPECT_EQ(w.at(0, 2), 0.5);
  EXPECT_EQ(w.at(1, 2), 0.5);
  EXPECT_EQ(w.at(2, 3), 1.0);
  EXPECT_EQ(w.row_sum(2), 2.0);
}

TEST(WeightedProjection, SingleEdge) {
  EXPECT_EQ(weighted_projection(Hypergraph(2, {{0, 1}})).at(0, 1), 1.0);
}

TEST(Transition, Toy) {
  const auto p = transition(kToy);
  EXPECT_NEAR(p.at(0, 2), 0.5, 1e-12);
  EXPECT_NEAR(p.at(2, 0), 0.25, 1e-12);
  EXPECT_NEAR(p.at(2, 3), 0.5, 1e-12);
  EXPECT_NEAR(p.at(3, 2), 1.0, 1e-12);
  expect_matches(p, oracle::walk_transition(kToy), 1e-12);
}

TEST(Transition, SingleEdgeSwaps) {
  const auto p = transition(Hypergraph(2, {{0, 1}}));
  EXPECT_EQ(p.to_dense(), (std::vector<double>{0, 1, 1, 0}));
}

TEST(Transition, IsolatedVertexRejected) {
  const Hypergraph g(3, {{0, 1}});
  EXPECT_THROW(transition(g), ContractViolation);
  EXPECT_THROW(transition_by_walk(g), ContractViolation);
}

TEST(Property, ProjectionsMatchIncidenceOracle) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_hypergraph(rng, 15, 10, 5);
    expect_matches(adjacency(g), oracle::projection(g, false), 1e-12);
    expect_matches(weighted_projection(g), oracle::projection(g, true), 1e-12);
  }
}

TEST(Property, TwoTransitionConstructionsAgree) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_hypergraph(rng, 50, 40, 6);
    const auto a = transition(g);
    const auto b = transition_by_walk(g);
    ASSERT_EQ(a.nnz(), b.nnz());
    for (Index r = 0; r < a.rows(); ++r) {
      for (Index c : a.row_indices(r)) EXPECT_NEAR(a.at(r, c), b.at(r, c), 1e-12);
      EXPECT_NEAR(a.row_sum(r), 1.0, 1e-10);
    }
  }
}

TEST(Property, RowSumsEqualDegrees) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_hypergraph(rng, 50, 40, 6);
    const auto w = weighted_projection(g);
    const auto d = degrees(g);
    for (Index r = 0; r < w.rows(); ++r) EXPECT_NEAR(w.row_sum(r), d[r], 1e-10);
  }
}

TEST(Property, SameSparsityPattern) {
  std::mt19937_64 rng(24);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_hypergraph(rng, 30, 20, 6);
    const auto a = adjacency(g);
    const auto w = weighted_projection(g);
    ASSERT_EQ(a.nnz(), w.nnz());
    for (Index r = 0; r < a.rows(); ++r) {
      const auto ai = a.row_indices(r);
      const auto wi = w.row_indices(r);
      EXPECT_TRUE(std::equal(ai.begin(), ai.end(), wi.begin(), wi.end()));
    }
  }
}

namespace {

oracle::Dense dense_power64(const CsrMatrix& p) {
  const std::size_t n = p.rows();
  oracle::Dense power = oracle::zeros(n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) power[i][j] = p.at(i, j);
  for (int s = 0; s < 6; ++s) power = oracle::multiply(power, power);
  return power;
}

// Second largest eigenvalue modulus of P, via the symmetric similar matrix
// D^{-1/2} W D^{-1/2}.
double second_eigenvalue_modulus(const Hypergraph& g) {
  const auto w = weighted_projection(g);
  const auto d = degrees(g);
  const auto n = static_cast<Eigen::Index>(g.num_vertices());
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (Index i = 0; i < w.rows(); ++i)
    for (Index j : w.row_indices(i)) m(i, j) = w.at(i, j) / std::sqrt(d[i] * d[j]);
  Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(m).eigenvalues().cwiseAbs();
  std::sort(ev.data(), ev.data() + ev.size());
  return ev(ev.size() - 2);
}

bool non_bipartite(const Hypergraph& g) {
  return std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.size() >= 3; });
}

}  // namespace

TEST(Property, PowersConvergeToDegreeShare) {
  // Well-connected hypergraphs: three or more hyperedges per vertex on average.
  std::mt19937_64 rng(25);
  int checked = 0;
  while (checked < 30) {
    const auto g = largest_component(oracle::random_hypergraph(rng, 20, 40, 4));
    if (!non_bipartite(g) || g.num_vertices() < 3 || g.num_edges() < g.num_vertices()) continue;
    ++checked;
    const auto power = dense_power64(transition(g));
    const auto d = degrees(g);
    const double total = std::accumulate(d.begin(), d.end(), 0.0);
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
      for (std::size_t j = 0; j < g.num_vertices(); ++j) EXPECT_NEAR(power[i][j], d[j] / total, 1e-6);
  }
}

TEST(Property, ConvergenceWithinSpectralBound) {
  // Any connected non-bipartite hypergraph, however slowly mixing:
  // |P^k_ij - d_j / sum d| <= sqrt(d_j / d_i) * mu^k.
  std::mt19937_64 rng(26);
  int checked = 0;
  while (checked < 60) {
    const auto g = largest_component(oracle::random_hypergraph(rng, 20, 25, 4));
    if (!non_bipartite(g) || g.num_vertices() < 3) continue;
    ++checked;
    const auto power = dense_power64(transition(g));
    const auto d = degrees(g);
    const double total = std::accumulate(d.begin(), d.end(), 0.0);
    const double mu64 = std::pow(second_eigenvalue_modulus(g), 64);
    ASSERT_LT(second_eigenvalue_modulus(g), 1.0);
    for (std::size_t i = 0; i < g.num_vertices(); ++i)
      for (std::size_t j = 0; j < g.num_vertices(); ++j)
        EXPECT_LE(std::abs(power[i][j] - d[j] / total), std::sqrt(d[j] / d[i]) * mu64 + 1e-12);
  }
}
