//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/partition.h"

#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.h"
#include "rolekit/dataset.h"

namespace rolekit {
namespace {
Coloring of(std::vector<int> ids) {
  return Coloring::from_ids(ids);
}

Coloring random_coloring(int n, int max_classes, Rng &rng) {
  std::uniform_int_distribution<int> pick(0, max_classes - 1);
  std::vector<int> ids(n);
  for (int &x: ids)
    x = pick(rng);
  return Coloring::from_ids(ids);
}

TEST(PartitionTest, RefinesExamples) {
  const Coloring any = of({ 0, 0, 1, 2, 1 });
  EXPECT_TRUE(refines(Coloring::discrete(5), any));
  EXPECT_TRUE(refines(any, Coloring::constant(5)));
  EXPECT_TRUE(refines(of({ 0, 1, 2 }), of({ 0, 0, 1 })));
  EXPECT_FALSE(refines(of({ 0, 0, 1 }), of({ 0, 1, 2 })));
  EXPECT_THROW(refines(of({ 0, 1 }), of({ 0, 1, 2 })), std::invalid_argument);
}

TEST(PartitionTest, EquivalentExamples) {
  const Coloring c = of({ 0, 1, 1, 2 });
  EXPECT_TRUE(equivalent(c, c));
  EXPECT_TRUE(equivalent(c, of({ 5, 3, 3, 9 })));
  EXPECT_FALSE(equivalent(of({ 0, 0, 1 }), of({ 0, 1, 1 })));
  EXPECT_THROW(equivalent(of({ 0 }), of({ 0, 1 })), std::invalid_argument);
}

TEST(PartitionTest, ClassSizesExamples) {
  EXPECT_EQ(class_sizes(Coloring::constant(6)), std::vector<int> { 6 });
  EXPECT_EQ(num_classes(Coloring::constant(6)), 1);
  EXPECT_EQ(class_sizes(Coloring::discrete(3)), (std::vector<int> { 1, 1, 1 }));
  EXPECT_EQ(num_classes(Coloring::discrete(3)), 3);
  const Coloring p3_degrees = of({ 1, 2, 1 });
  EXPECT_EQ(class_sizes(p3_degrees), (std::vector<int> { 2, 1 }));
  EXPECT_EQ(num_classes(p3_degrees), 2);
}

TEST(PartitionTest, RefinesIsPartialOrder) {
  Rng rng(3);
  for (int i = 0; i < 300; ++i) {
    const int n = 1 + i % 9;
    const Coloring a = random_coloring(n, 4, rng);
    const Coloring b = random_coloring(n, 3, rng);
    const Coloring c = random_coloring(n, 2, rng);

    EXPECT_TRUE(refines(a, a));
    EXPECT_EQ(refines(a, b), oracle::pair_refines(a.colors(), b.colors()));
    if (refines(a, b) && refines(b, a)) {
      EXPECT_TRUE(equivalent(a, b));
    }
    if (refines(a, b) && refines(b, c)) {
      EXPECT_TRUE(refines(a, c));
    }
    // Colorings are canonical, so equivalence is plain equality.
    EXPECT_EQ(equivalent(a, b), a == b);
    EXPECT_EQ(equivalent(a, b), oracle::same_partition(a.colors(), b.colors()));
  }
}

TEST(PartitionTest, MeetIsCoarsestCommonRefinement) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 8;
    const Coloring a = random_coloring(n, 3, rng);
    const Coloring b = random_coloring(n, 3, rng);
    const Coloring m = meet(a, b);
    EXPECT_TRUE(refines(m, a));
    EXPECT_TRUE(refines(m, b));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        EXPECT_EQ(m[u] == m[v], a[u] == a[v] && b[u] == b[v]);
  }
}

}  // namespace
}  // namespace rolekit
