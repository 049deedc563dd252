//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_UNRAVELLING_H_
#define ROLEKIT_UNRAVELLING_H_

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "rolekit/graph.h"

namespace rolekit {

/**
 * @brief Tree of all walks of length at most `depth` from a root vertex.
 *
 * Tree nodes are stored level by level; the node for walk (v, x1, ..., xk)
 * keeps its parent (the walk without xk) and its identifier xk. Children of a
 * tree node are contiguous and appear in ascending identifier order.
 */
class UnravellingTree {
public:
  struct Node {
    int parent;  // -1 for the root
    NodeId id;   // last vertex of the walk
    int level;   // walk length
  };

  int depth() const { return depth_; }
  std::size_t size() const { return nodes_.size(); }
  NodeId root_id() const { return nodes_.front().id; }

  const Node &node(std::size_t i) const { return nodes_[i]; }
  std::span<const Node> nodes() const { return nodes_; }

  // Indices of the children of tree node i.
  std::pair<int, int> children(std::size_t i) const {
    return { first_child_[i], first_child_[i + 1] };
  }

  // The walk ending at tree node i, root vertex first.
  std::vector<NodeId> walk(std::size_t i) const;

private:
  friend UnravellingTree build_unravelling(const Graph &, NodeId, int, std::size_t);

  std::vector<Node> nodes_;
  std::vector<int> first_child_;
  int depth_ = 0;
};

/**
 * @brief Materialize the depth-d unravelling rooted at v.
 *
 * The tree has as many nodes as there are walks of length <= d, which grows
 * like deg^d; SizeGuardError is thrown once `max_nodes` would be exceeded.
 */
UnravellingTree build_unravelling(const Graph &g, NodeId v, int depth,
                                  std::size_t max_nodes = std::size_t { 1 } << 22);

/**
 * @brief AHU canonical codes for rooted unordered trees.
 *
 * A leaf gets the code of the empty child list; an inner node the code of its
 * sorted child-code list. Codes are interned in this table, so two trees
 * encoded by the same encoder are isomorphic iff their root codes match.
 */
class AhuEncoder {
public:
  // Root code of the tree, ignoring identifiers.
  int encode(const UnravellingTree &tree);

  // Code of the sorted multiset `children`.
  int intern(std::vector<int> children);

  std::size_t table_size() const { return table_.size(); }

private:
  std::map<std::vector<int>, int> table_;
};

// Unravellings U^d(u) in g1 and U^d(v) in g2 isomorphic as unlabelled rooted
// trees. Uses materialized trees and AHU codes.
bool unidentified_equivalent(const Graph &g1, NodeId u, const Graph &g2, NodeId v, int depth);

// Partition of V(g) by unidentified equivalence at depth d.
Coloring unidentified_roles(const Graph &g, int depth);

/**
 * @brief Identified equivalence at depth d.
 *
 * True iff some isomorphism between the unravellings rooted at u and v maps
 * identifiers consistently, i.e. induces a bijection between the vertex sets
 * they mention. Because siblings always carry distinct identifiers, such a
 * tree isomorphism is determined by its identifier map. The search therefore
 * walks both trees level by level, matching children of already-matched tree
 * nodes, grouping candidates by subtree code and extending a partial id
 * bijection; it backtracks on conflicts. Tree nodes whose (identifier,
 * remaining depth) has already been expanded are not expanded again.
 */
bool identified_equivalent(const Graph &g1, NodeId u, const Graph &g2, NodeId v, int depth);

struct ExactOptions {
  int max_nodes = 32;
  int jobs = 1;
};

/**
 * @brief Exact depth-d roles: partition of V(g) by identified equivalence.
 *
 * Throws SizeGuardError when g has more than `max_nodes` nodes.
 */
Coloring exact_roles(const Graph &g, int depth, const ExactOptions &options = {});

struct OrbitOptions {
  int max_nodes = 10;
};

using OrbitPartition = Coloring;

/**
 * @brief Automorphism orbits by backtracking over vertex maps.
 *
 * Candidate images are restricted to vertices with the same stable refinement
 * color and consistent adjacency to the vertices mapped so far. Throws
 * SizeGuardError above `max_nodes`.
 */
OrbitPartition automorphism_orbits(const Graph &g, const OrbitOptions &options = {});

}  // namespace rolekit

#endif  // ROLEKIT_UNRAVELLING_H_
