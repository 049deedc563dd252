//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/graph.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace rolekit {
namespace {
void check_node(const Graph &g, NodeId v) {
  if (v < 0 || v >= g.num_nodes())
    throw std::out_of_range("node index " + std::to_string(v) + " out of range [0, "
                            + std::to_string(g.num_nodes()) + ")");
}
}  // namespace

Graph Graph::from_edges(int num_nodes, std::span<const std::pair<NodeId, NodeId>> edges,
                        std::vector<int> node_labels,
                        std::optional<Eigen::MatrixXd> node_attributes) {
  if (num_nodes < 0)
    throw std::invalid_argument("negative node count");
  if (!node_labels.empty() && static_cast<int>(node_labels.size()) != num_nodes)
    throw std::invalid_argument("node label count does not match node count");
  if (node_attributes && node_attributes->rows() != num_nodes)
    throw std::invalid_argument("node attribute rows do not match node count");

  std::vector<int> degree(num_nodes, 0);
  for (auto [u, v]: edges) {
    if (u < 0 || u >= num_nodes || v < 0 || v >= num_nodes)
      throw std::invalid_argument("edge (" + std::to_string(u) + ", " + std::to_string(v)
                                  + ") references a node out of range");
    if (u == v)
      throw std::invalid_argument("self-loop on node " + std::to_string(u));
    ++degree[u];
    ++degree[v];
  }

  Graph g;
  g.offsets_.assign(num_nodes + 1, 0);
  std::inclusive_scan(degree.begin(), degree.end(), g.offsets_.begin() + 1);
  g.adj_.resize(g.offsets_.back());

  std::vector<int> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v]: edges) {
    g.adj_[fill[u]++] = v;
    g.adj_[fill[v]++] = u;
  }

  for (NodeId v = 0; v < num_nodes; ++v) {
    auto first = g.adj_.begin() + g.offsets_[v], last = g.adj_.begin() + g.offsets_[v + 1];
    std::sort(first, last);
    if (auto dup = std::adjacent_find(first, last); dup != last)
      throw std::invalid_argument("duplicate edge (" + std::to_string(v) + ", "
                                  + std::to_string(*dup) + ")");
  }

  g.labels_ = std::move(node_labels);
  g.attributes_ = std::move(node_attributes);
  return g;
}

int Graph::max_degree() const {
  int d = 0;
  for (NodeId v = 0; v < num_nodes(); ++v)
    d = std::max(d, degree(v));
  return d;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  auto nu = neighbors(u);
  return std::binary_search(nu.begin(), nu.end(), v);
}

EdgeList Graph::edges() const {
  EdgeList out;
  out.reserve(num_edges());
  for (NodeId u = 0; u < num_nodes(); ++u)
    for (NodeId v: neighbors(u))
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

bool operator==(const Graph &a, const Graph &b) {
  if (a.offsets_ != b.offsets_ || a.adj_ != b.adj_ || a.labels_ != b.labels_)
    return false;
  if (a.attributes_.has_value() != b.attributes_.has_value())
    return false;
  if (!a.attributes_)
    return true;
  const auto &x = *a.attributes_, &y = *b.attributes_;
  return x.rows() == y.rows() && x.cols() == y.cols() && x == y;
}

Coloring Coloring::from_ids(std::span<const int> ids) {
  Coloring c;
  c.colors_.resize(ids.size());

  // Small non-negative ids (the common case) are remapped through an array.
  const auto [lo, hi] = std::minmax_element(ids.begin(), ids.end());
  if (ids.empty() || (*lo >= 0 && static_cast<std::size_t>(*hi) < 4 * ids.size() + 16)) {
    std::vector<int> remap(ids.empty() ? 0 : *hi + 1, -1);
    int next = 0;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      int &r = remap[ids[i]];
      if (r < 0)
        r = next++;
      c.colors_[i] = r;
    }
    c.num_classes_ = next;
    return c;
  }

  std::unordered_map<int, int> remap;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    auto [it, _] = remap.try_emplace(ids[i], static_cast<int>(remap.size()));
    c.colors_[i] = it->second;
  }
  c.num_classes_ = static_cast<int>(remap.size());
  return c;
}

Coloring Coloring::constant(int num_nodes) {
  Coloring c;
  c.colors_.assign(num_nodes, 0);
  c.num_classes_ = num_nodes > 0 ? 1 : 0;
  return c;
}

Coloring Coloring::discrete(int num_nodes) {
  Coloring c;
  c.colors_.resize(num_nodes);
  std::iota(c.colors_.begin(), c.colors_.end(), 0);
  c.num_classes_ = num_nodes;
  return c;
}

GraphCollection::GraphCollection(std::vector<Graph> graphs, std::vector<int> graph_labels)
    : graphs_(std::move(graphs)), graph_labels_(std::move(graph_labels)) {
  if (!graph_labels_.empty() && graph_labels_.size() != graphs_.size())
    throw std::invalid_argument("graph label count does not match graph count");

  node_offsets_.reserve(graphs_.size() + 1);
  for (const Graph &g: graphs_)
    node_offsets_.push_back(node_offsets_.back() + g.num_nodes());
}

int GraphCollection::global_index(int graph_id, NodeId local) const {
  if (graph_id < 0 || graph_id >= num_graphs())
    throw std::out_of_range("graph index out of range");
  if (local < 0 || local >= graphs_[graph_id].num_nodes())
    throw std::out_of_range("local node index out of range");
  return node_offsets_[graph_id] + local;
}

std::pair<int, NodeId> GraphCollection::locate(int global) const {
  if (global < 0 || global >= total_nodes())
    throw std::out_of_range("global node index out of range");
  auto it = std::upper_bound(node_offsets_.begin(), node_offsets_.end(), global);
  int graph_id = static_cast<int>(it - node_offsets_.begin()) - 1;
  return { graph_id, global - node_offsets_[graph_id] };
}

bool GraphCollection::has_node_labels() const {
  return std::all_of(graphs_.begin(), graphs_.end(), [](const Graph &g) {
    return g.empty() || g.has_node_labels();
  });
}

std::vector<int> GraphCollection::node_labels() const {
  std::vector<int> out;
  if (!has_node_labels())
    return out;
  out.reserve(total_nodes());
  for (const Graph &g: graphs_)
    out.insert(out.end(), g.node_labels().begin(), g.node_labels().end());
  return out;
}

Graph GraphCollection::union_graph() const {
  return disjoint_union(graphs_);
}

std::vector<NodeId> k_hop_neighborhood(const Graph &g, NodeId v, int k) {
  check_node(g, v);
  if (k < 0)
    throw std::invalid_argument("negative hop count");

  std::vector<int> dist(g.num_nodes(), -1);
  std::vector<NodeId> reached { v };
  dist[v] = 0;
  for (std::size_t head = 0; head < reached.size(); ++head) {
    NodeId x = reached[head];
    if (dist[x] == k)
      continue;
    for (NodeId y: g.neighbors(x)) {
      if (dist[y] < 0) {
        dist[y] = dist[x] + 1;
        reached.push_back(y);
      }
    }
  }
  std::sort(reached.begin(), reached.end());
  return reached;
}

Graph induced_subgraph(const Graph &g, std::span<const NodeId> nodes) {
  std::vector<NodeId> keep(nodes.begin(), nodes.end());
  for (NodeId v: keep)
    check_node(g, v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());

  std::vector<int> local(g.num_nodes(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    local[keep[i]] = i;

  EdgeList edges;
  for (NodeId u: keep)
    for (NodeId v: g.neighbors(u))
      if (u < v && local[v] >= 0)
        edges.emplace_back(local[u], local[v]);

  std::vector<int> labels;
  if (g.has_node_labels())
    for (NodeId u: keep)
      labels.push_back(g.node_labels()[u]);

  std::optional<Eigen::MatrixXd> attrs;
  if (g.node_attributes()) {
    attrs.emplace(static_cast<Eigen::Index>(keep.size()), g.node_attributes()->cols());
    for (Eigen::Index i = 0; i < attrs->rows(); ++i)
      attrs->row(i) = g.node_attributes()->row(keep[i]);
  }

  return Graph::from_edges(static_cast<int>(keep.size()), edges, std::move(labels),
                           std::move(attrs));
}

Graph disjoint_union(std::span<const Graph> graphs) {
  int n = 0;
  bool labeled = true, attributed = true;
  Eigen::Index attr_cols = -1;
  for (const Graph &g: graphs) {
    n += g.num_nodes();
    if (g.empty())
      continue;
    labeled = labeled && g.has_node_labels();
    if (!g.node_attributes()) {
      attributed = false;
    } else if (attr_cols < 0) {
      attr_cols = g.node_attributes()->cols();
    } else if (attr_cols != g.node_attributes()->cols()) {
      attributed = false;
    }
  }
  attributed = attributed && attr_cols >= 0;

  EdgeList edges;
  std::vector<int> labels;
  std::optional<Eigen::MatrixXd> attrs;
  if (attributed)
    attrs.emplace(n, attr_cols);

  int offset = 0;
  for (const Graph &g: graphs) {
    for (auto [u, v]: g.edges())
      edges.emplace_back(u + offset, v + offset);
    if (labeled && n > 0)
      labels.insert(labels.end(), g.node_labels().begin(), g.node_labels().end());
    if (attributed && !g.empty())
      attrs->middleRows(offset, g.num_nodes()) = *g.node_attributes();
    offset += g.num_nodes();
  }
  return Graph::from_edges(n, edges, std::move(labels), std::move(attrs));
}

Graph permute(const Graph &g, std::span<const NodeId> perm) {
  if (static_cast<int>(perm.size()) != g.num_nodes())
    throw std::invalid_argument("permutation size does not match node count");
  std::vector<char> seen(perm.size(), 0);
  for (NodeId p: perm) {
    if (p < 0 || p >= g.num_nodes() || seen[p])
      throw std::invalid_argument("not a permutation");
    seen[p] = 1;
  }

  EdgeList edges;
  for (auto [u, v]: g.edges())
    edges.emplace_back(perm[u], perm[v]);

  std::vector<int> labels;
  if (g.has_node_labels()) {
    labels.resize(perm.size());
    for (std::size_t v = 0; v < perm.size(); ++v)
      labels[perm[v]] = g.node_labels()[v];
  }

  std::optional<Eigen::MatrixXd> attrs;
  if (g.node_attributes()) {
    attrs.emplace(g.node_attributes()->rows(), g.node_attributes()->cols());
    for (std::size_t v = 0; v < perm.size(); ++v)
      attrs->row(perm[v]) = g.node_attributes()->row(static_cast<Eigen::Index>(v));
  }
  return Graph::from_edges(g.num_nodes(), edges, std::move(labels), std::move(attrs));
}

Coloring permute(const Coloring &c, std::span<const NodeId> perm) {
  if (static_cast<int>(perm.size()) != c.size())
    throw std::invalid_argument("permutation size does not match coloring size");
  std::vector<int> ids(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v)
    ids[perm[v]] = c[static_cast<NodeId>(v)];
  return Coloring::from_ids(ids);
}

}  // namespace rolekit
