//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/snp.h"

#include <array>
#include <cstdint>
#include <map>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rolekit/dataset.h"
#include "rolekit/error.h"
#include "rolekit/partition.h"
#include "rolekit/unravelling.h"
#include "rolekit/wl.h"

namespace rolekit {
namespace {
Graph random_small(Rng &rng, int max_nodes) {
  std::uniform_int_distribution<int> size(1, max_nodes);
  std::bernoulli_distribution dense(0.5);
  int n = size(rng);
  return random_gnp(n, dense(rng) ? 0.5 : 0.2, rng);
}

// Nonzero entries of one level as target -> count, with 1-based targets.
std::map<int, long long> level(const Graph &g, NodeId v, int d, int k) {
  auto rows = walk_count_rows(g, v, d);
  std::map<int, long long> out;
  for (Eigen::Index u = 0; u < rows.cols(); ++u)
    if (rows(k, u) != WalkCount(0))
      out[static_cast<int>(u) + 1] = static_cast<long long>(rows(k, u).value());
  return out;
}

std::vector<std::vector<long long>> columns_of(const SnpEmbedding &e) {
  std::vector<std::vector<long long>> out;
  for (Eigen::Index j = 0; j < e.num_columns(); ++j) {
    std::vector<long long> col;
    for (Eigen::Index k = 0; k < e.columns().rows(); ++k)
      col.push_back(static_cast<long long>(e.columns()(k, j).value()));
    out.push_back(col);
  }
  return out;
}

TEST(SnpTest, WalkCountsOfWorkedExample) {
  auto [cycle, triangles] = make_figure1_pair();
  using Counts = std::map<int, long long>;
  EXPECT_EQ(level(cycle, 0, 3, 2), (Counts { { 1, 2 }, { 4, 1 }, { 6, 1 } }));
  EXPECT_EQ(level(cycle, 0, 3, 3), (Counts { { 2, 3 }, { 3, 3 }, { 5, 2 } }));
  EXPECT_EQ(level(triangles, 0, 3, 3), (Counts { { 4, 3 }, { 5, 3 }, { 1, 2 } }));
}

TEST(SnpTest, IsolatedNode) {
  const Graph g = Graph::from_edges(1, {});
  auto rows = walk_count_rows(g, 0, 5);
  ASSERT_EQ(rows.rows(), 6);
  EXPECT_EQ(rows(0, 0), WalkCount(1));
  for (int k = 1; k <= 5; ++k)
    EXPECT_EQ(rows(k, 0), WalkCount(0));
  EXPECT_THROW(walk_count_rows(g, 1, 2), std::out_of_range);
  EXPECT_THROW(walk_count_rows(g, 0, -1), std::invalid_argument);
}

TEST(SnpTest, WalkCountsMatchWalkEnumeration) {
  Rng rng(79);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_small(rng, 8);
    for (NodeId v = 0; v < g.num_nodes(); ++v) {
      const auto expected = oracle::walk_counts(g, v, 4);
      const auto rows = walk_count_rows(g, v, 4);
      for (int k = 0; k <= 4; ++k)
        for (NodeId u = 0; u < g.num_nodes(); ++u)
          ASSERT_EQ(static_cast<long long>(rows(k, u).value()), expected[k][u]);

      // Same numbers as the per-id census of the unravelling levels.
      UnravellingTree tree = build_unravelling(g, v, 4);
      std::vector<std::vector<long long>> census(5, std::vector<long long>(g.num_nodes()));
      for (const auto &node: tree.nodes())
        ++census[node.level][node.id];
      EXPECT_EQ(census, expected);
    }
  }
}

TEST(SnpTest, EmbeddingMatchesSortedColumns) {
  Rng rng(83);
  for (int i = 0; i < 80; ++i) {
    Graph g = random_small(rng, 8);
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      for (int d = 0; d <= 3; ++d)
        ASSERT_EQ(columns_of(snp_embedding(g, v, d)), oracle::snp_columns(g, v, d));
  }
}

TEST(SnpTest, K2Embedding) {
  // Walk counts on K2 by hand: self (1,0,1), other (0,1,0).
  Graph k2 = make_path(2);
  const std::vector<std::vector<long long>> expected { { 0, 1, 0 }, { 1, 0, 1 } };
  EXPECT_EQ(oracle::snp_columns(k2, 0, 2), expected);
  EXPECT_EQ(columns_of(snp_embedding(k2, 0, 2)), expected);
  EXPECT_EQ(columns_of(snp_embedding(k2, 1, 2)), expected);
  EXPECT_EQ(snp_embedding(k2, 0, 2).serialize(), "0,1,0;1,0,1");
}

TEST(SnpTest, Figure1Embeddings) {
  auto [cycle, triangles] = make_figure1_pair();
  EXPECT_EQ(snp_embedding(cycle, 0, 1), snp_embedding(triangles, 0, 1));
  EXPECT_FALSE(snp_embedding(cycle, 0, 2) == snp_embedding(triangles, 0, 2));
  // The cycle reaches a node at distance 2; the triangle does not.
  EXPECT_EQ(snp_embedding(cycle, 0, 2).num_columns(), 5);
  EXPECT_EQ(snp_embedding(triangles, 0, 2).num_columns(), 3);
}

TEST(SnpTest, RolesExamples) {
  auto [cycle, triangles] = make_figure1_pair();
  EXPECT_EQ(snp_roles(GraphCollection({ make_cycle(6) }), 4).num_classes(), 1);
  const GraphCollection pair({ cycle, triangles });
  EXPECT_EQ(snp_roles(pair, 1).num_classes(), 1);
  Coloring two = snp_roles(pair, 2);
  EXPECT_EQ(two.num_classes(), 2);
  for (NodeId v = 0; v < 12; ++v)
    EXPECT_EQ(two[v], v < 6 ? 0 : 1);
  for (int d = 0; d <= 6; ++d)
    EXPECT_EQ(wl::wl_roles(pair, d).final().num_classes(), 1);
}

TEST(SnpTest, RolesCompareEmbeddingsAsValues) {
  Rng rng(89);
  std::vector<Graph> graphs;
  for (int i = 0; i < 12; ++i)
    graphs.push_back(random_small(rng, 7));
  const GraphCollection col(graphs);
  for (int d = 0; d <= 3; ++d) {
    Coloring roles = snp_roles(col, d);
    std::vector<std::vector<std::vector<long long>>> emb;
    for (const auto &g: graphs)
      for (NodeId v = 0; v < g.num_nodes(); ++v)
        emb.push_back(oracle::snp_columns(g, v, d));
    for (std::size_t a = 0; a < emb.size(); ++a)
      for (std::size_t b = 0; b < emb.size(); ++b)
        ASSERT_EQ(roles[a] == roles[b], emb[a] == emb[b]);
    EXPECT_EQ(snp_roles(col, d, 4), roles);
  }
}

TEST(SnpTest, Invariance) {
  Rng rng(97);
  for (int i = 0; i < 100; ++i) {
    Graph g = random_small(rng, 9);
    auto perm = random_permutation(g.num_nodes(), rng);
    Graph h = permute(g, perm);
    for (int d = 0; d <= 4; ++d) {
      for (NodeId v = 0; v < g.num_nodes(); ++v)
        ASSERT_EQ(snp_embedding(g, v, d), snp_embedding(h, perm[v], d));
      EXPECT_TRUE(equivalent(permute(snp_roles(g, d), perm), snp_roles(h, d)));
    }
  }
}

TEST(SnpTest, Hierarchy) {
  Rng rng(101);
  for (int i = 0; i < 60; ++i) {
    Graph g = random_small(rng, 8);
    for (int d = 0; d <= 4; ++d) {
      EXPECT_TRUE(refines(snp_roles(g, d + 1), snp_roles(g, d)));
      EXPECT_TRUE(refines(exact_roles(g, d), snp_roles(g, d)));
    }
  }
}

TEST(SnpTest, OverflowIsReported) {
  // On K10 walks of length k to another node number (9^k + (-1)^(k+1)) / 10:
  // 73 at k = 3 fits in int8, 656 at k = 4 does not.
  Graph k10 = make_complete(10);
  auto fits = walk_count_rows<Checked<std::int8_t>>(k10, 0, 3);
  EXPECT_EQ(fits(3, 1).value(), 73);
  EXPECT_EQ(oracle::walk_counts(k10, 0, 3)[3][1], 73);
  EXPECT_THROW((walk_count_rows<Checked<std::int8_t>>(k10, 0, 4)), OverflowError);
  // The default scalar is wide enough for long walks on large degrees.
  auto rows = walk_count_rows(make_complete(30), 0, 20);
  EXPECT_GT(rows(20, 1), WalkCount(0));
  EXPECT_THROW(walk_count_rows(make_complete(30), 0, 40), OverflowError);
}

TEST(SnpTest, EmbeddingDump) {
  const GraphCollection col({ make_path(2) });
  std::ostringstream os;
  write_embedding_dump(os, col, 2);
  EXPECT_EQ(os.str(), "1,1,0,1,0;1,0,1\n1,2,0,1,0;1,0,1\n");
}

}  // namespace
}  // namespace rolekit
