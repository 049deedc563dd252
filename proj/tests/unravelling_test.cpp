//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/unravelling.h"

#include <algorithm>
#include <array>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rolekit/dataset.h"
#include "rolekit/error.h"
#include "rolekit/partition.h"
#include "rolekit/wl.h"

namespace rolekit {
namespace {
Graph random_small(Rng &rng, int max_nodes) {
  std::uniform_int_distribution<int> size(1, max_nodes);
  std::bernoulli_distribution dense(0.5);
  int n = size(rng);
  return random_gnp(n, dense(rng) ? 0.5 : 0.2, rng);
}

TEST(UnravellingTest, TreeSizes) {
  auto [cycle, triangles] = make_figure1_pair();
  EXPECT_EQ(build_unravelling(cycle, 0, 3).size(), 15u);
  EXPECT_EQ(build_unravelling(triangles, 0, 3).size(), 15u);
  EXPECT_EQ(build_unravelling(make_complete(3), 1, 2).size(), 7u);

  const Graph isolated = Graph::from_edges(1, {});
  for (int d = 0; d < 5; ++d)
    EXPECT_EQ(build_unravelling(isolated, 0, d).size(), 1u);
}

TEST(UnravellingTest, NodesAreTheWalks) {
  Rng rng(17);
  for (int i = 0; i < 30; ++i) {
    Graph g = random_small(rng, 7);
    for (int d = 0; d <= 3; ++d) {
      const NodeId v = i % g.num_nodes();
      UnravellingTree tree = build_unravelling(g, v, d);
      auto walks = oracle::enumerate_walks(g, v, d);
      ASSERT_EQ(tree.size(), walks.size());

      std::vector<oracle::Walk> got;
      for (std::size_t x = 0; x < tree.size(); ++x) {
        got.push_back(tree.walk(x));
        EXPECT_EQ(tree.node(x).id, got.back().back());
        EXPECT_EQ(tree.node(x).level, static_cast<int>(got.back().size()) - 1);
        auto [first, last] = tree.children(x);
        for (int c = first; c < last; ++c)
          EXPECT_EQ(tree.node(c).parent, static_cast<int>(x));
      }
      std::sort(got.begin(), got.end());
      std::sort(walks.begin(), walks.end());
      EXPECT_EQ(got, walks);
    }
  }
}

TEST(UnravellingTest, SizeGuard) {
  EXPECT_THROW(build_unravelling(make_complete(6), 0, 12, 1000), SizeGuardError);
}

TEST(UnravellingTest, UnidentifiedExamples) {
  auto [cycle, triangles] = make_figure1_pair();
  EXPECT_TRUE(unidentified_equivalent(cycle, 0, triangles, 0, 3));
  Graph p3 = make_path(3);
  EXPECT_TRUE(unidentified_equivalent(p3, 2, p3, 2, 4));
  EXPECT_FALSE(unidentified_equivalent(p3, 0, p3, 1, 1));
  EXPECT_TRUE(unidentified_equivalent(p3, 0, p3, 1, 0));
}

TEST(UnravellingTest, UnidentifiedMatchesTreeStrings) {
  Rng rng(19);
  for (int i = 0; i < 60; ++i) {
    Graph g1 = random_small(rng, 7);
    Graph g2 = random_small(rng, 7);
    for (int d = 0; d <= 3; ++d)
      for (NodeId u = 0; u < g1.num_nodes(); ++u)
        for (NodeId v = 0; v < g2.num_nodes(); ++v)
          ASSERT_EQ(unidentified_equivalent(g1, u, g2, v, d),
                    oracle::unidentified_equivalent(g1, u, g2, v, d));
  }
}

TEST(UnravellingTest, AhuEncoderSharesCodes) {
  AhuEncoder enc;
  const int leaf = enc.intern({});
  EXPECT_EQ(enc.intern({ leaf, leaf }), enc.intern({ leaf, leaf }));
  const int a = enc.intern({ leaf });
  EXPECT_EQ(enc.intern({ a, leaf }), enc.intern({ leaf, a }));
  EXPECT_EQ(enc.table_size(), 4u);
}

TEST(UnravellingTest, IdentifiedExamples) {
  auto [cycle, triangles] = make_figure1_pair();
  EXPECT_TRUE(identified_equivalent(cycle, 0, triangles, 0, 0));
  EXPECT_TRUE(identified_equivalent(cycle, 0, triangles, 0, 1));
  EXPECT_FALSE(identified_equivalent(cycle, 0, triangles, 0, 2));
  EXPECT_FALSE(identified_equivalent(cycle, 0, triangles, 0, 3));
  for (int d = 0; d <= 6; ++d)
    EXPECT_TRUE(identified_equivalent(cycle, 2, cycle, 2, d));
}

TEST(UnravellingTest, IdentifiedMatchesBijectionEnumeration) {
  Rng rng(23);
  int positives = 0;
  for (int i = 0; i < 80; ++i) {
    Graph g1 = random_small(rng, 5);
    Graph g2 = i % 3 == 0 ? permute(g1, random_permutation(g1.num_nodes(), rng))
                          : random_small(rng, 5);
    for (int d = 0; d <= 4; ++d) {
      for (NodeId u = 0; u < g1.num_nodes(); ++u) {
        for (NodeId v = 0; v < g2.num_nodes(); ++v) {
          const bool expected = oracle::identified_equivalent(g1, u, g2, v, d);
          ASSERT_EQ(identified_equivalent(g1, u, g2, v, d), expected)
              << "i=" << i << " d=" << d << " u=" << u << " v=" << v;
          positives += expected;
        }
      }
    }
  }
  // The suite must exercise both outcomes.
  EXPECT_GT(positives, 100);
}

TEST(UnravellingTest, IdentifiedImpliesUnidentified) {
  Rng rng(29);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_small(rng, 8);
    for (int d = 0; d <= 4; ++d)
      for (NodeId u = 0; u < g.num_nodes(); ++u)
        for (NodeId v = 0; v < g.num_nodes(); ++v)
          if (identified_equivalent(g, u, g, v, d)) {
            ASSERT_TRUE(unidentified_equivalent(g, u, g, v, d));
          }
  }
}

TEST(UnravellingTest, ExactRolesExamples) {
  auto [cycle, triangles] = make_figure1_pair();
  EXPECT_EQ(exact_roles(cycle, 6).num_classes(), 1);
  EXPECT_EQ(exact_roles(triangles, 6).num_classes(), 1);

  Graph joint = disjoint_union(std::array { cycle, triangles });
  Coloring roles = exact_roles(joint, 2);
  EXPECT_EQ(roles.num_classes(), 2);
  for (NodeId v = 0; v < 12; ++v)
    EXPECT_EQ(roles[v], v < 6 ? 0 : 1);
  EXPECT_EQ(exact_roles(joint, 1).num_classes(), 1);
}

TEST(UnravellingTest, ExactRolesSizeGuard) {
  EXPECT_THROW(exact_roles(make_cycle(40), 2), SizeGuardError);
  EXPECT_EQ(exact_roles(make_cycle(40), 2, { .max_nodes = 40 }).num_classes(), 1);
}

TEST(UnravellingTest, ExactRolesParallelMatchesSerial) {
  Rng rng(31);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_small(rng, 10);
    for (int d = 0; d <= 3; ++d)
      EXPECT_EQ(exact_roles(g, d, { .jobs = 3 }), exact_roles(g, d));
  }
}

TEST(UnravellingTest, ExactRolesRefineWithDepthAndAreInvariant) {
  Rng rng(37);
  for (int i = 0; i < 40; ++i) {
    Graph g = random_small(rng, 8);
    auto perm = random_permutation(g.num_nodes(), rng);
    Graph h = permute(g, perm);
    for (int d = 0; d <= 4; ++d) {
      const Coloring r = exact_roles(g, d);
      EXPECT_TRUE(refines(exact_roles(g, d + 1), r));
      EXPECT_TRUE(equivalent(permute(r, perm), exact_roles(h, d)));
      EXPECT_TRUE(refines(r, wl::wl_roles(g, d).final()));
    }
  }
}

TEST(OrbitTest, Examples) {
  EXPECT_EQ(automorphism_orbits(make_cycle(6)).num_classes(), 1);

  Coloring p3 = automorphism_orbits(make_path(3));
  EXPECT_EQ(p3.num_classes(), 2);
  EXPECT_EQ(p3[0], p3[2]);
  EXPECT_NE(p3[0], p3[1]);

  auto [cycle, triangles] = make_figure1_pair();
  Coloring joint = automorphism_orbits(disjoint_union(std::array { cycle, triangles }),
                                       { .max_nodes = 12 });
  EXPECT_EQ(joint.num_classes(), 2);
  EXPECT_THROW(automorphism_orbits(make_cycle(11)), SizeGuardError);
}

TEST(OrbitTest, MatchesPermutationEnumeration) {
  // C6 plus one triangle: 9! candidate permutations, 2 orbits.
  Graph union9 = disjoint_union(std::array { make_cycle(6), make_complete(3) });
  EXPECT_TRUE(oracle::same_partition(automorphism_orbits(union9).colors(), oracle::orbits(union9)));
  EXPECT_EQ(Coloring::from_ids(oracle::orbits(union9)).num_classes(), 2);

  Rng rng(41);
  for (int i = 0; i < 150; ++i) {
    Graph g = random_small(rng, 8);
    ASSERT_TRUE(oracle::same_partition(automorphism_orbits(g).colors(), oracle::orbits(g)))
        << "graph " << i;
  }
}

TEST(OrbitTest, IdentifiedRolesAtFullDepthAreOrbits) {
  Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    Graph g1 = random_small(rng, 5);
    Graph g2 = random_small(rng, 5);
    const int d = std::max(g1.num_nodes(), g2.num_nodes());
    const auto orb = oracle::orbits(disjoint_union(std::array { g1, g2 }));
    for (NodeId u = 0; u < g1.num_nodes(); ++u)
      for (NodeId v = 0; v < g2.num_nodes(); ++v)
        ASSERT_EQ(identified_equivalent(g1, u, g2, v, d), orb[u] == orb[g1.num_nodes() + v]);
  }
}

}  // namespace
}  // namespace rolekit
