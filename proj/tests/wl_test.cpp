//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/wl.h"

#include <array>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rolekit/dataset.h"
#include "rolekit/partition.h"
#include "rolekit/unravelling.h"

namespace rolekit::wl {
namespace {
Graph random_small(Rng &rng, int max_nodes) {
  std::uniform_int_distribution<int> size(1, max_nodes);
  std::bernoulli_distribution dense(0.5);
  int n = size(rng);
  return random_gnp(n, dense(rng) ? 0.5 : 0.2, rng);
}

TEST(WlTest, RefineStepExamples) {
  Graph c6 = make_cycle(6);
  EXPECT_EQ(refine_step(c6, constant_coloring(c6)), constant_coloring(c6));

  Graph p3 = make_path(3);
  Coloring c = refine_step(p3, constant_coloring(p3));
  EXPECT_EQ(c.num_classes(), 2);
  EXPECT_EQ(c[0], c[2]);

  Graph star = make_star(3);
  Coloring s = refine_step(star, constant_coloring(star));
  EXPECT_EQ(s.num_classes(), 2);
  EXPECT_EQ(class_sizes(s), (std::vector<int> { 3, 1 }));

  EXPECT_THROW(refine_step(p3, Coloring::constant(2)), std::invalid_argument);
}

TEST(WlTest, RefineStepKeepsOwnColor) {
  // Same neighbor multiset, different own color: must stay apart.
  const EdgeList edges { { 0, 2 }, { 1, 2 } };
  Graph g = Graph::from_edges(3, edges);
  const std::vector<int> init { 0, 1, 2 };
  EXPECT_EQ(refine_step(g, Coloring::from_ids(init)).num_classes(), 3);
}

TEST(WlTest, TraceExamples) {
  auto [cycle, triangles] = make_figure1_pair();
  auto trace = wl_roles(GraphCollection({ cycle, triangles }), 5);
  ASSERT_EQ(trace.depth(), 5);
  for (const auto &c: trace.colorings) {
    EXPECT_EQ(c.size(), 12);
    EXPECT_EQ(c.num_classes(), 1);
  }

  auto p3 = wl_roles(make_path(3), 2);
  EXPECT_EQ(p3.at(0).num_classes(), 1);
  EXPECT_EQ(p3.at(1).num_classes(), 2);
  EXPECT_EQ(p3.at(2).num_classes(), 2);
  EXPECT_EQ(p3.stabilized_at, 2);

  EXPECT_THROW(wl_roles(make_path(3), -1), std::invalid_argument);
}

TEST(WlTest, StableColoringExamples) {
  auto c6 = stable_coloring(make_cycle(6));
  EXPECT_EQ(c6.coloring.num_classes(), 1);
  EXPECT_EQ(c6.iterations, 1);

  auto p3 = stable_coloring(make_path(3));
  EXPECT_EQ(p3.coloring.num_classes(), 2);
  EXPECT_EQ(p3.iterations, 2);

  auto [cycle, triangles] = make_figure1_pair();
  EXPECT_EQ(stable_coloring(triangles).coloring.num_classes(), 1);
}

TEST(WlTest, StableColoringIsEquitable) {
  Rng rng(53);
  for (int i = 0; i < 50; ++i) {
    Graph g = random_gnp(1 + i % 20, 0.2, rng);
    auto s = stable_coloring(g);
    EXPECT_LE(s.iterations, std::max(g.num_nodes(), 1));
    EXPECT_TRUE(equivalent(refine_step(g, s.coloring), s.coloring));
  }
}

TEST(WlTest, MatchesStringRefinement) {
  Rng rng(59);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_small(rng, 12);
    auto trace = wl_roles(g, 5);
    for (int d = 0; d <= 5; ++d)
      ASSERT_TRUE(oracle::same_partition(trace.at(d).colors(), oracle::wl_colors(g, d)));
  }
}

TEST(WlTest, TraceRefinesMonotonically) {
  Rng rng(61);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_small(rng, 12);
    auto trace = wl_roles(g, 6);
    for (int t = 0; t < 6; ++t)
      EXPECT_TRUE(refines(trace.at(t + 1), trace.at(t)));
    if (trace.stabilized_at) {
      for (int t = *trace.stabilized_at; t <= 6; ++t)
        EXPECT_EQ(trace.at(t), trace.at(*trace.stabilized_at - 1));
    }
  }
}

TEST(WlTest, RolesMatchUnidentifiedUnravellings) {
  Rng rng(67);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_small(rng, 10);
    auto trace = wl_roles(g, 4);
    for (int d = 0; d <= 4; ++d) {
      std::vector<int> by_tree(g.num_nodes());
      for (NodeId v = 0; v < g.num_nodes(); ++v)
        for (NodeId u = 0; u <= v; ++u)
          if (oracle::unidentified_equivalent(g, u, g, v, d)) {
            by_tree[v] = u;
            break;
          }
      ASSERT_TRUE(oracle::same_partition(trace.at(d).colors(), by_tree));
    }
  }
}

TEST(WlTest, RandomTreesAtFullDepth) {
  Rng rng(71);
  for (int i = 0; i < 30; ++i) {
    const int n = 1 + i % 12;
    Graph t = random_tree(n, rng);
    EXPECT_TRUE(equivalent(wl_roles(t, n).final(), unidentified_roles(t, n)));
  }
}

TEST(WlTest, JointRefinementComparesAcrossGraphs) {
  Graph p3 = make_path(3);
  Graph p2 = make_path(2);
  auto trace = wl_roles(GraphCollection({ p3, p2 }), 2);
  const Coloring &c = trace.final();
  // Path endpoints of P3 and P2 agree at depth 1, differ at depth 2.
  EXPECT_EQ(trace.at(1)[0], trace.at(1)[3]);
  EXPECT_NE(c[0], c[3]);
  EXPECT_EQ(c[3], c[4]);
}

TEST(WlTest, IsomorphismInvariance) {
  Rng rng(73);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_small(rng, 12);
    auto perm = random_permutation(g.num_nodes(), rng);
    Graph h = permute(g, perm);
    for (int d = 0; d <= 4; ++d)
      EXPECT_TRUE(equivalent(permute(wl_roles(g, d).final(), perm), wl_roles(h, d).final()));
  }
}

TEST(WlTest, FaultHookBreaksInjectivity) {
  Graph star = make_star(4);
  Graph path = make_path(5);
  EXPECT_FALSE(testing::non_injective_signatures());
  {
    testing::ScopedNonInjectiveSignatures fault;
    EXPECT_TRUE(testing::non_injective_signatures());
    EXPECT_LE(refine_step(path, refine_step(path, constant_coloring(path))).num_classes(), 2);
  }
  EXPECT_FALSE(testing::non_injective_signatures());
  EXPECT_EQ(refine_step(path, refine_step(path, constant_coloring(path))).num_classes(), 3);
  EXPECT_EQ(refine_step(star, constant_coloring(star)).num_classes(), 2);
}

}  // namespace
}  // namespace rolekit::wl
