//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_GRAPH_H_
#define ROLEKIT_GRAPH_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <Eigen/SparseCore>

namespace rolekit {

using NodeId = int;
using EdgeList = std::vector<std::pair<NodeId, NodeId>>;

/**
 * @brief Immutable undirected simple graph in compressed adjacency form.
 *
 * Neighbor lists are sorted ascending. Optional per-node integer labels and a
 * per-node attribute matrix (one row per node) ride along as metadata; none of
 * the role algorithms read them unless asked to.
 */
class Graph {
public:
  Graph() = default;

  /**
   * @brief Build a graph from an undirected edge list.
   *
   * Each edge must appear once, in either orientation. Self-loops, duplicate
   * edges and out-of-range endpoints throw std::invalid_argument.
   */
  static Graph from_edges(int num_nodes, std::span<const std::pair<NodeId, NodeId>> edges,
                          std::vector<int> node_labels = {},
                          std::optional<Eigen::MatrixXd> node_attributes = std::nullopt);

  int num_nodes() const { return static_cast<int>(offsets_.size()) - 1; }
  int num_edges() const { return static_cast<int>(adj_.size() / 2); }
  bool empty() const { return num_nodes() == 0; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return { adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1] };
  }

  int degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  int max_degree() const;
  bool has_edge(NodeId u, NodeId v) const;

  // Edges as (u, v) with u < v, ascending.
  EdgeList edges() const;

  bool has_node_labels() const { return !labels_.empty(); }
  std::span<const int> node_labels() const { return labels_; }

  const std::optional<Eigen::MatrixXd> &node_attributes() const { return attributes_; }

  std::span<const int> offsets() const { return offsets_; }
  std::span<const NodeId> adjacency() const { return adj_; }

  friend bool operator==(const Graph &a, const Graph &b);

private:
  std::vector<int> offsets_ = { 0 };
  std::vector<NodeId> adj_;
  std::vector<int> labels_;
  std::optional<Eigen::MatrixXd> attributes_;
};

template <class Scalar>
Eigen::SparseMatrix<Scalar, Eigen::RowMajor> adjacency_matrix(const Graph &g) {
  std::vector<Eigen::Triplet<Scalar>> triplets;
  triplets.reserve(g.adjacency().size());
  for (NodeId u = 0; u < g.num_nodes(); ++u)
    for (NodeId v: g.neighbors(u))
      triplets.emplace_back(u, v, Scalar(1));

  Eigen::SparseMatrix<Scalar, Eigen::RowMajor> a(g.num_nodes(), g.num_nodes());
  a.setFromTriplets(triplets.begin(), triplets.end());
  return a;
}

/**
 * @brief A node coloring with dense, canonical color ids.
 *
 * Ids run over 0..num_classes()-1 and are assigned in order of first
 * occurrence when scanning nodes by ascending index, so two colorings induce
 * the same partition iff they compare equal.
 */
class Coloring {
public:
  Coloring() = default;

  // Relabel arbitrary integer ids into canonical first-occurrence order.
  static Coloring from_ids(std::span<const int> ids);

  // Same, for any key type; `index` is a scratch map (ordered or hashed)
  // from key to provisional id.
  template <class Key, class Map>
  static Coloring from_keys(std::span<const Key> keys, Map &&index) {
    std::vector<int> colors(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      auto [it, _] = index.try_emplace(keys[i], static_cast<int>(index.size()));
      colors[i] = it->second;
    }
    return from_ids(colors);
  }

  static Coloring constant(int num_nodes);
  static Coloring discrete(int num_nodes);

  int size() const { return static_cast<int>(colors_.size()); }
  int num_classes() const { return num_classes_; }
  int operator[](NodeId v) const { return colors_[v]; }
  std::span<const int> colors() const { return colors_; }

  friend bool operator==(const Coloring &, const Coloring &) = default;

private:
  std::vector<int> colors_;
  int num_classes_ = 0;
};

/**
 * @brief Ordered set of graphs addressed through one contiguous global node
 *        index (graph 0 first, then graph 1, ...).
 */
class GraphCollection {
public:
  GraphCollection() = default;
  explicit GraphCollection(std::vector<Graph> graphs, std::vector<int> graph_labels = {});

  int num_graphs() const { return static_cast<int>(graphs_.size()); }
  int total_nodes() const { return node_offsets_.back(); }

  const Graph &graph(int i) const { return graphs_[i]; }
  std::span<const Graph> graphs() const { return graphs_; }
  std::span<const int> graph_labels() const { return graph_labels_; }
  bool has_graph_labels() const { return !graph_labels_.empty(); }

  int global_index(int graph_id, NodeId local) const;
  // (graph id, local node) of a global index.
  std::pair<int, NodeId> locate(int global) const;
  int graph_offset(int graph_id) const { return node_offsets_[graph_id]; }

  // True iff every graph carries node labels.
  bool has_node_labels() const;
  // Node labels in global order; empty if any graph lacks them.
  std::vector<int> node_labels() const;

  // All graphs as one graph, nodes in global order.
  Graph union_graph() const;

  friend bool operator==(const GraphCollection &, const GraphCollection &) = default;

private:
  std::vector<Graph> graphs_;
  std::vector<int> graph_labels_;
  std::vector<int> node_offsets_ = { 0 };
};

// Nodes reachable from v in at most k steps (v included), sorted ascending.
std::vector<NodeId> k_hop_neighborhood(const Graph &g, NodeId v, int k);

// Subgraph induced by `nodes`; relabels to 0..|nodes|-1 in ascending original
// order. Labels and attributes are carried over.
Graph induced_subgraph(const Graph &g, std::span<const NodeId> nodes);

Graph disjoint_union(std::span<const Graph> graphs);

inline Coloring constant_coloring(const Graph &g) {
  return Coloring::constant(g.num_nodes());
}

// Relabel: node v of g becomes perm[v] of the result.
Graph permute(const Graph &g, std::span<const NodeId> perm);

// Coloring c' with c'[perm[v]] = c[v].
Coloring permute(const Coloring &c, std::span<const NodeId> perm);

}  // namespace rolekit

#endif  // ROLEKIT_GRAPH_H_
