#include "svrpll/separation.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "svrpll/errors.hpp"
#include "svrpll/model.hpp"

namespace svrpll {
namespace {

std::vector<double> point(int n, const std::vector<std::pair<EdgeId, double>>& w) {
  const EdgeIndex index(n);
  std::vector<double> x(index.num_edges(), 0.0);
  for (const auto& [e, v] : w) x[index.ordinal(e)] = v;
  return x;
}

std::vector<double> cycles(int n, const std::vector<std::vector<int>>& cs) {
  std::vector<std::pair<EdgeId, double>> w;
  for (const auto& c : cs) {
    for (size_t k = 0; k < c.size(); ++k) {
      const int a = c[k];
      const int b = c[(k + 1) % c.size()];
      w.push_back({{std::min(a, b), std::max(a, b)}, 1.0});
    }
  }
  return point(n, w);
}

double row_activity(const Row& r, const std::vector<double>& x) {
  double a = 0.0;
  for (const Term& t : r.terms) a += t.coef * x[t.var.index];
  return a;
}

TEST(SupportGraphTest, DropsDust) {
  const SupportGraph g =
      support_graph(point(4, {{{0, 1}, 1.0}, {{1, 2}, 1e-8}, {{2, 3}, 2e-7}}), 4);
  EXPECT_EQ(g.num_vertices, 4);
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.edges[0], (EdgeId{0, 1}));
  EXPECT_EQ(g.edges[1], (EdgeId{2, 3}));
}

TEST(ConnectedComponentsTest, Examples) {
  const auto two = connected_components(
      support_graph(cycles(6, {{0, 1, 2}, {3, 4, 5}}), 6));
  EXPECT_EQ(two, (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_EQ(connected_components(support_graph(cycles(5, {{0, 3, 1, 4, 2}}), 5)).size(),
            1u);
  const auto singles = connected_components(support_graph(point(5, {}), 5));
  EXPECT_EQ(singles, (std::vector<std::vector<int>>{{0}, {1}, {2}, {3}, {4}}));
}

TEST(GlobalMinCutTest, Path) {
  SupportGraph g{3, {{0, 1}, {1, 2}}, {1.0, 0.5}};
  const CutResult c = global_min_cut(g);
  EXPECT_DOUBLE_EQ(c.value, 0.5);
  EXPECT_TRUE(c.side == std::vector<int>({2}) || c.side == std::vector<int>({0, 1}));
}

TEST(GlobalMinCutTest, TriangleAndK4) {
  SupportGraph tri{3, {{0, 1}, {0, 2}, {1, 2}}, {1.0, 1.0, 1.0}};
  EXPECT_DOUBLE_EQ(global_min_cut(tri).value, 2.0);
  EXPECT_DOUBLE_EQ(oracle::min_cut_by_enumeration(tri), 2.0);
  SupportGraph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                  std::vector<double>(6, 0.5)};
  const CutResult c = global_min_cut(k4);
  EXPECT_DOUBLE_EQ(c.value, 1.5);
  EXPECT_DOUBLE_EQ(oracle::min_cut_by_enumeration(k4), 1.5);
  EXPECT_EQ(c.side.size() == 1 || c.side.size() == 3, true);
}

TEST(GlobalMinCutTest, RejectsDisconnectedOrTiny) {
  EXPECT_THROW(global_min_cut(SupportGraph{4, {{0, 1}, {2, 3}}, {1.0, 1.0}}),
               PreconditionError);
  EXPECT_THROW(global_min_cut(SupportGraph{1, {}, {}}), PreconditionError);
}

TEST(GlobalMinCutTest, MatchesEnumeration) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 150; ++t) {
    const int n = 2 + t % 11;
    const SupportGraph g = oracle::random_connected_graph(rng, n);
    const CutResult c = global_min_cut(g);
    EXPECT_NEAR(c.value, oracle::min_cut_by_enumeration(g), 1e-9);
    EXPECT_NEAR(oracle::cut_weight(g, c.side), c.value, 1e-9);
    EXPECT_GE(c.side.size(), 1u);
    EXPECT_LT(static_cast<int>(c.side.size()), n);
    EXPECT_TRUE(std::is_sorted(c.side.begin(), c.side.end()));
  }
}

TEST(GlobalMinCutTest, Deterministic) {
  std::mt19937_64 rng(1);
  const SupportGraph g = oracle::random_connected_graph(rng, 10);
  const CutResult a = global_min_cut(g);
  const CutResult b = global_min_cut(g);
  EXPECT_EQ(a.side, b.side);
  EXPECT_EQ(a.value, b.value);
}

TEST(SeparateSecsTest, TwoSubtours) {
  const auto rows = separate_secs(cycles(7, {{0, 1, 2}, {3, 4, 5, 6}}), 7);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].sec_set, std::vector<int>({0, 1, 2}));
  EXPECT_EQ(rows[1].sec_set, std::vector<int>({3, 4, 5, 6}));
}

TEST(SeparateSecsTest, HamiltonianCycleHasNoCut) {
  EXPECT_TRUE(separate_secs(cycles(7, {{0, 4, 2, 6, 1, 3, 5}}), 7).empty());
}

TEST(SeparateSecsTest, FractionalBridgedTriangles) {
  const int n = 6;
  const auto x = point(n, {{{0, 1}, 1.0}, {{1, 2}, 1.0}, {{0, 2}, 0.5},
                           {{3, 4}, 1.0}, {{4, 5}, 1.0}, {{3, 5}, 0.5},
                           {{0, 3}, 0.5}, {{2, 5}, 0.5}});
  const SupportGraph g = support_graph(x, n);
  ASSERT_EQ(connected_components(g).size(), 1u);
  EXPECT_DOUBLE_EQ(oracle::min_cut_by_enumeration(g), 1.0);
  const auto rows = separate_secs(x, n);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_TRUE(rows[0].sec_set == std::vector<int>({0, 1, 2}) ||
              rows[0].sec_set == std::vector<int>({3, 4, 5}));
  EXPECT_DOUBLE_EQ(row_activity(rows[0], x), 1.0);
}

TEST(SeparateSecsTest, SmallComponentsAreNotReturned) {
  // Components of size 1 and n - 1 are implied by degree rows.
  EXPECT_TRUE(separate_secs(cycles(4, {{1, 2, 3}}), 4).empty());
  EXPECT_TRUE(separate_secs(cycles(3, {{0, 1, 2}}), 3).empty());
}

TEST(SeparateSecsTest, ReturnedRowsAreViolated) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + t % 9;
    std::vector<double> x(EdgeIndex(n).num_edges());
    for (double& v : x) v = u(rng) < 0.3 ? u(rng) : 0.0;
    for (const Row& r : separate_secs(x, n)) {
      EXPECT_LT(row_activity(r, x), 2.0 - 1e-6);
      EXPECT_GE(r.sec_set.size(), 2u);
      EXPECT_LE(static_cast<int>(r.sec_set.size()), n - 2);
    }
  }
}

TEST(SeparateSecsTest, CompleteAtIntegrality) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 200; ++t) {
    const int n = 4 + t % 10;
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    // Split the permutation into cycles of length >= 3.
    std::vector<std::vector<int>> cs;
    int start = 0;
    while (start < n) {
      int len = n - start;
      if (len >= 6 && rng() % 2) len = 3 + static_cast<int>(rng() % (len - 5));
      cs.emplace_back(perm.begin() + start, perm.begin() + start + len);
      start += len;
    }
    const auto x = cycles(n, cs);
    const EdgeIndex index(n);
    std::vector<EdgeId> edges;
    for (int e = 0; e < index.num_edges(); ++e) {
      if (x[e] > 0.5) edges.push_back(index.edge(e));
    }
    const bool single = !order_from_edges(n, edges).empty();
    EXPECT_EQ(single, cs.size() == 1);
    const auto rows = separate_secs(x, n);
    EXPECT_EQ(rows.empty(), single);
    if (!single) {
      EXPECT_EQ(rows.size(), cs.size());
    }
  }
}

}  // namespace
}  // namespace svrpll
