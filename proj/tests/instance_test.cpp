#include "svrpll/instance.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "svrpll/errors.hpp"

namespace svrpll {
namespace {

Instance make_instance(std::vector<Point2> targets, std::vector<Point2> sites,
                       double range) {
  Instance inst;
  inst.targets = std::move(targets);
  inst.candidate_sites = std::move(sites);
  inst.sensing_range = range;
  inst.landmark_cost.assign(inst.candidate_sites.size(), 1.0);
  return inst;
}

TEST(GenerateInstanceTest, SizesFollowSiteFactor) {
  GenerateOptions opts;
  opts.num_targets = 15;
  opts.seed = 7;
  const Instance inst = generate_instance(opts);
  EXPECT_EQ(inst.num_targets(), 15);
  EXPECT_EQ(inst.num_sites(), 75);
  EXPECT_EQ(inst.sensing_range, 35.0);
  EXPECT_EQ(inst.seed, 7);
  for (double d : inst.landmark_cost) EXPECT_EQ(d, 1.0);
  for (const Point2& p : inst.targets) {
    EXPECT_GE(p.x, 0.0);
    EXPECT_LE(p.x, 100.0);
    EXPECT_GE(p.y, 0.0);
    EXPECT_LE(p.y, 100.0);
  }
}

TEST(GenerateInstanceTest, TinyGridCoversEverything) {
  GenerateOptions opts;
  opts.num_targets = 2;
  opts.seed = 0;
  opts.grid_side = 1.0;
  const Instance inst = generate_instance(opts);
  ASSERT_EQ(inst.num_sites(), 10);
  const CoverSets cov = compute_cover_sets(inst);
  for (const auto& k : cov.per_target) EXPECT_EQ(k.size(), 10u);
  EXPECT_EQ(cov.per_edge[0].size(), 10u);
}

TEST(GenerateInstanceTest, Deterministic) {
  GenerateOptions opts;
  opts.num_targets = 20;
  opts.seed = 123;
  EXPECT_EQ(generate_instance(opts), generate_instance(opts));
  opts.seed = 124;
  GenerateOptions other = opts;
  other.seed = 123;
  EXPECT_FALSE(generate_instance(opts) == generate_instance(other));
}

TEST(GenerateInstanceTest, SiteCountDoesNotPerturbTargets) {
  GenerateOptions a;
  a.num_targets = 10;
  a.seed = 5;
  GenerateOptions b = a;
  b.site_factor = 9;
  const Instance ia = generate_instance(a);
  const Instance ib = generate_instance(b);
  EXPECT_EQ(ia.targets, ib.targets);
  EXPECT_TRUE(std::equal(ia.candidate_sites.begin(), ia.candidate_sites.end(),
                         ib.candidate_sites.begin()));
}

TEST(GenerateInstanceTest, RejectsBadParameters) {
  GenerateOptions opts;
  opts.num_targets = 1;
  EXPECT_THROW(generate_instance(opts), ParameterError);
  opts.num_targets = 5;
  opts.grid_side = 0.0;
  EXPECT_THROW(generate_instance(opts), ParameterError);
  opts.grid_side = 100.0;
  opts.sensing_range = -1.0;
  EXPECT_THROW(generate_instance(opts), ParameterError);
}

TEST(CheckInstanceTest, RejectsBrokenInvariants) {
  Instance inst = make_instance({{0, 0}, {1, 1}}, {{0, 1}}, 35.0);
  EXPECT_NO_THROW(check_instance(inst));
  Instance bad = inst;
  bad.landmark_cost = {-1.0};
  EXPECT_THROW(check_instance(bad), ParameterError);
  bad = inst;
  bad.landmark_cost.clear();
  EXPECT_THROW(check_instance(bad), ParameterError);
  bad = inst;
  bad.targets.pop_back();
  EXPECT_THROW(check_instance(bad), ParameterError);
  bad = inst;
  bad.targets[0].x = std::nan("");
  EXPECT_THROW(check_instance(bad), ParameterError);
  bad = inst;
  bad.sensing_range = 0.0;
  EXPECT_THROW(check_instance(bad), ParameterError);
}

TEST(CoverSetsTest, StrictInequalityAtRange) {
  const Instance inst =
      make_instance({{0, 0}, {100, 100}}, {{0, 30}, {0, 35}}, 35.0);
  const CoverSets cov = compute_cover_sets(inst);
  EXPECT_EQ(cov.per_target[0], std::vector<int>({0}));
}

TEST(CoverSetsTest, EdgeSetIsIntersection) {
  // Site a near target 0 only, b near both, c near target 1 only.
  const Instance inst = make_instance({{0, 0}, {10, 0}},
                                      {{-4, 0}, {5, 0}, {14, 0}}, 6.0);
  const CoverSets cov = compute_cover_sets(inst);
  EXPECT_EQ(cov.per_target[0], std::vector<int>({0, 1}));
  EXPECT_EQ(cov.per_target[1], std::vector<int>({1, 2}));
  EXPECT_EQ(cov.of_edge(EdgeIndex(2), {0, 1}), std::vector<int>({1}));
}

TEST(CoverSetsTest, EdgeSetsAreSubsetsAndShrinkWithRange) {
  GenerateOptions opts;
  opts.num_targets = 12;
  opts.seed = 3;
  Instance inst = generate_instance(opts);
  const CoverSets wide = compute_cover_sets(inst);
  inst.sensing_range = 20.0;
  const CoverSets narrow = compute_cover_sets(inst);
  const EdgeIndex index(inst.num_targets());
  for (const EdgeId& e : index.edges()) {
    const auto& ke = wide.of_edge(index, e);
    EXPECT_TRUE(std::includes(wide.per_target[e.i].begin(), wide.per_target[e.i].end(),
                              ke.begin(), ke.end()));
    EXPECT_TRUE(std::includes(wide.per_target[e.j].begin(), wide.per_target[e.j].end(),
                              ke.begin(), ke.end()));
    const auto& kn = narrow.of_edge(index, e);
    EXPECT_TRUE(std::includes(ke.begin(), ke.end(), kn.begin(), kn.end()));
  }
  for (int v = 0; v < inst.num_targets(); ++v) {
    EXPECT_TRUE(std::includes(wide.per_target[v].begin(), wide.per_target[v].end(),
                              narrow.per_target[v].begin(),
                              narrow.per_target[v].end()));
  }
}

TEST(EdgeCostsTest, Euclidean) {
  const Instance inst =
      make_instance({{0, 0}, {3, 4}, {0, 0}, {1, 1}}, {}, 35.0);
  const EdgeIndex index(4);
  const EdgeCosts c = compute_edge_costs(inst);
  EXPECT_EQ(c.cost[index.ordinal(0, 1)], 5.0);
  EXPECT_EQ(c.cost[index.ordinal(0, 2)], 0.0);
  EXPECT_NEAR(c.cost[index.ordinal(0, 3)], std::sqrt(2.0), 1e-12);
}

TEST(EdgeCostsTest, TriangleInequality) {
  GenerateOptions opts;
  opts.num_targets = 9;
  opts.seed = 11;
  const Instance inst = generate_instance(opts);
  const EdgeIndex index(9);
  const EdgeCosts c = compute_edge_costs(inst);
  for (int a = 0; a < 9; ++a) {
    for (int b = 0; b < 9; ++b) {
      for (int d = 0; d < 9; ++d) {
        if (a == b || b == d || a == d) continue;
        EXPECT_LE(c.cost[index.ordinal(a, d)],
                  c.cost[index.ordinal(a, b)] + c.cost[index.ordinal(b, d)] + 1e-12);
      }
    }
  }
}

TEST(EdgeIndexTest, OrdinalsRoundTrip) {
  const EdgeIndex index(7);
  EXPECT_EQ(index.num_edges(), 21);
  for (int o = 0; o < index.num_edges(); ++o) {
    const EdgeId e = index.edge(o);
    EXPECT_LT(e.i, e.j);
    EXPECT_EQ(index.ordinal(e), o);
    EXPECT_EQ(index.ordinal(e.j, e.i), o);
  }
}

TEST(ValidateInstanceTest, TwoTargetsWithoutCoverage) {
  const Instance inst = make_instance({{0, 0}, {100, 0}}, {{50, 50}}, 10.0);
  const ValidationReport rep = validate_instance(inst, compute_cover_sets(inst));
  EXPECT_TRUE(rep.infeasible_certain);
  EXPECT_EQ(rep.deficient_targets, std::vector<int>({0, 1}));
}

TEST(ValidateInstanceTest, FullCoverageHasNoFlags) {
  const Instance inst = make_instance({{0, 0}, {1, 0}, {0, 1}, {1, 1}},
                                      {{0.5, 0.5}, {0.2, 0.8}}, 35.0);
  const ValidationReport rep = validate_instance(inst, compute_cover_sets(inst));
  EXPECT_FALSE(rep.infeasible_certain);
  EXPECT_TRUE(rep.deficient_targets.empty());
  EXPECT_EQ(rep.coverable_degree, std::vector<int>({3, 3, 3, 3}));
}

TEST(ValidateInstanceTest, TargetWithSingleSite) {
  // Targets 0..2 share two sites; target 3 sees only one of them.
  const Instance inst = make_instance({{0, 0}, {2, 0}, {0, 2}, {30, 0}},
                                      {{1, 1}, {15, 0}}, 16.0);
  const CoverSets cov = compute_cover_sets(inst);
  ASSERT_EQ(cov.per_target[3], std::vector<int>({1}));
  const ValidationReport rep = validate_instance(inst, cov);
  // Independent count of incident edges with two shared sites.
  const EdgeIndex index(4);
  for (int v = 0; v < 4; ++v) {
    int coverable = 0;
    for (int u = 0; u < 4; ++u) {
      if (u != v && cov.of_edge(index, {std::min(u, v), std::max(u, v)}).size() >= 2) {
        ++coverable;
      }
    }
    EXPECT_EQ(rep.coverable_degree[v], coverable);
  }
  EXPECT_EQ(rep.coverable_degree[3], 0);
  EXPECT_TRUE(rep.infeasible_certain);
  EXPECT_EQ(rep.deficient_targets, std::vector<int>({3}));
}

}  // namespace
}  // namespace svrpll
