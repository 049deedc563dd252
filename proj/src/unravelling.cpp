//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/unravelling.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rolekit/error.h"
#include "rolekit/parallel.h"
#include "rolekit/wl.h"

namespace rolekit {
namespace {
void check_node(const Graph &g, NodeId v) {
  if (v < 0 || v >= g.num_nodes())
    throw std::out_of_range("node index " + std::to_string(v) + " out of range");
}

void check_depth(int depth) {
  if (depth < 0)
    throw std::invalid_argument("negative depth");
}

// Identified-equivalence search between two (possibly identical) graphs at a
// fixed depth. Subtree codes of U^r(x) are shared between both graphs.
class IdentifiedMatcher {
public:
  IdentifiedMatcher(const Graph &g1, const Graph &g2, int depth)
      : g1_(g1), g2_(g2), depth_(depth) {
    AhuEncoder encoder;
    codes1_ = subtree_codes(g1, encoder);
    codes2_ = &g1 == &g2 ? codes1_ : subtree_codes(g2, encoder);
  }

  // Code of U^depth(x); equal codes are necessary for equivalence.
  int root_code1(NodeId x) const { return codes1_[depth_][x]; }

  bool match(NodeId u, NodeId v) const {
    if (codes1_[depth_][u] != codes2_[depth_][v])
      return false;

    State s;
    s.map12.assign(g1_.num_nodes(), -1);
    s.map21.assign(g2_.num_nodes(), -1);
    s.expanded.assign(g1_.num_nodes(), -1);
    s.map12[u] = v;
    s.map21[v] = u;
    s.queue.push_back({ u, v, depth_ });
    return run(s);
  }

private:
  struct Item {
    NodeId x, y;
    int remaining;
  };

  struct State {
    std::vector<int> map12, map21;
    // Largest remaining depth at which a g1 vertex has been expanded.
    std::vector<int> expanded;
    std::vector<Item> queue;
    std::size_t head = 0;
  };

  // codes[r][x] = AHU code of U^r(x). The subtree under a walk ending at x
  // with r levels left is U^r(x), so this is AHU on the unravelling with
  // identical subtrees shared.
  std::vector<std::vector<int>> subtree_codes(const Graph &g, AhuEncoder &encoder) const {
    std::vector<std::vector<int>> codes(depth_ + 1, std::vector<int>(g.num_nodes()));
    const int leaf = encoder.intern({});
    std::fill(codes[0].begin(), codes[0].end(), leaf);
    for (int r = 1; r <= depth_; ++r) {
      for (NodeId x = 0; x < g.num_nodes(); ++x) {
        std::vector<int> children;
        children.reserve(g.degree(x));
        for (NodeId y: g.neighbors(x))
          children.push_back(codes[r - 1][y]);
        codes[r][x] = encoder.intern(std::move(children));
      }
    }
    return codes;
  }

  bool run(State &s) const {
    while (s.head < s.queue.size()) {
      const Item item = s.queue[s.head];
      if (item.remaining == 0 || s.expanded[item.x] >= item.remaining) {
        ++s.head;
        continue;
      }

      const int r = item.remaining - 1;
      auto nx = g1_.neighbors(item.x), ny = g2_.neighbors(item.y);
      if (nx.size() != ny.size())
        return false;

      // Already-mapped children must land on children of the image, with
      // isomorphic subtrees; collect the unmapped ones on both sides.
      std::vector<NodeId> free1, free2;
      for (NodeId a: nx) {
        int b = s.map12[a];
        if (b < 0) {
          free1.push_back(a);
          continue;
        }
        if (!std::binary_search(ny.begin(), ny.end(), b) || codes1_[r][a] != codes2_[r][b])
          return false;
      }
      for (NodeId b: ny) {
        int a = s.map21[b];
        if (a < 0)
          free2.push_back(b);
        else if (!std::binary_search(nx.begin(), nx.end(), a))
          return false;
      }
      if (free1.size() != free2.size())
        return false;

      if (!free1.empty()) {
        // Branch on the first free child: try every free child of the image
        // with the same subtree code, then revisit this item.
        NodeId a = free1.front();
        for (NodeId b: free2) {
          if (codes1_[r][a] != codes2_[r][b])
            continue;
          State next = s;
          next.map12[a] = b;
          next.map21[b] = a;
          if (run(next))
            return true;
        }
        return false;
      }

      s.expanded[item.x] = item.remaining;
      for (NodeId a: nx)
        s.queue.push_back({ a, s.map12[a], r });
      ++s.head;
    }
    return true;
  }

  const Graph &g1_, &g2_;
  int depth_;
  std::vector<std::vector<int>> codes1_, codes2_;
};
}  // namespace

std::vector<NodeId> UnravellingTree::walk(std::size_t i) const {
  std::vector<NodeId> out;
  for (int k = static_cast<int>(i); k >= 0; k = nodes_[k].parent)
    out.push_back(nodes_[k].id);
  std::reverse(out.begin(), out.end());
  return out;
}

UnravellingTree build_unravelling(const Graph &g, NodeId v, int depth, std::size_t max_nodes) {
  check_node(g, v);
  check_depth(depth);

  UnravellingTree tree;
  tree.depth_ = depth;
  tree.nodes_.push_back({ -1, v, 0 });
  for (std::size_t i = 0; i < tree.nodes_.size(); ++i) {
    tree.first_child_.push_back(static_cast<int>(tree.nodes_.size()));
    const auto parent = tree.nodes_[i];
    if (parent.level == depth)
      continue;
    auto nbrs = g.neighbors(parent.id);
    if (tree.nodes_.size() + nbrs.size() > max_nodes)
      throw SizeGuardError("unravelling of node " + std::to_string(v) + " at depth "
                           + std::to_string(depth) + " exceeds " + std::to_string(max_nodes)
                           + " tree nodes");
    for (NodeId x: nbrs)
      tree.nodes_.push_back({ static_cast<int>(i), x, parent.level + 1 });
  }
  tree.first_child_.push_back(static_cast<int>(tree.nodes_.size()));
  return tree;
}

int AhuEncoder::intern(std::vector<int> children) {
  std::sort(children.begin(), children.end());
  auto [it, _] = table_.try_emplace(std::move(children), static_cast<int>(table_.size()));
  return it->second;
}

int AhuEncoder::encode(const UnravellingTree &tree) {
  std::vector<int> code(tree.size());
  // Children always follow their parent, so a reverse scan sees every
  // subtree before its root.
  for (std::size_t i = tree.size(); i-- > 0;) {
    auto [first, last] = tree.children(i);
    std::vector<int> children;
    children.reserve(last - first);
    for (int c = first; c < last; ++c)
      children.push_back(code[c]);
    code[i] = intern(std::move(children));
  }
  return code[0];
}

bool unidentified_equivalent(const Graph &g1, NodeId u, const Graph &g2, NodeId v, int depth) {
  AhuEncoder encoder;
  return encoder.encode(build_unravelling(g1, u, depth))
         == encoder.encode(build_unravelling(g2, v, depth));
}

Coloring unidentified_roles(const Graph &g, int depth) {
  check_depth(depth);
  AhuEncoder encoder;
  std::vector<int> codes(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    codes[v] = encoder.encode(build_unravelling(g, v, depth));
  return Coloring::from_ids(codes);
}

bool identified_equivalent(const Graph &g1, NodeId u, const Graph &g2, NodeId v, int depth) {
  check_node(g1, u);
  check_node(g2, v);
  check_depth(depth);
  return IdentifiedMatcher(g1, g2, depth).match(u, v);
}

Coloring exact_roles(const Graph &g, int depth, const ExactOptions &options) {
  check_depth(depth);
  if (g.num_nodes() > options.max_nodes)
    throw SizeGuardError("exact roles limited to " + std::to_string(options.max_nodes)
                         + " nodes, graph has " + std::to_string(g.num_nodes()));

  const IdentifiedMatcher matcher(g, g, depth);

  // rep[v] = smallest u equivalent to v. The relation is an equivalence, so
  // this labels each class by its first member.
  std::vector<int> rep(g.num_nodes());
  parallel_for(rep.size(), options.jobs, [&](std::size_t i) {
    NodeId v = static_cast<NodeId>(i);
    rep[v] = v;
    for (NodeId u = 0; u < v; ++u) {
      if (matcher.root_code1(u) == matcher.root_code1(v) && matcher.match(u, v)) {
        rep[v] = u;
        break;
      }
    }
  });

#ifndef NDEBUG
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    assert(rep[rep[v]] == rep[v]);
#endif
  return Coloring::from_ids(rep);
}

OrbitPartition automorphism_orbits(const Graph &g, const OrbitOptions &options) {
  const int n = g.num_nodes();
  if (n > options.max_nodes)
    throw SizeGuardError("automorphism orbits limited to " + std::to_string(options.max_nodes)
                         + " nodes, graph has " + std::to_string(n));

  const Coloring color = wl::stable_coloring(g).coloring;
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (auto [a, b]: g.edges())
    adj[a][b] = adj[b][a] = 1;

  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x)
      x = parent[x] = parent[parent[x]];
    return x;
  };

  // Search order: BFS from the anchored vertex, then the remaining vertices,
  // so each new vertex tends to have mapped neighbors to check against.
  auto search_order = [&](NodeId start) {
    std::vector<NodeId> order;
    std::vector<char> seen(n, 0);
    std::vector<NodeId> seeds { start };
    for (NodeId k = 0; k < n; ++k)
      seeds.push_back(k);
    for (NodeId s: seeds) {
      if (seen[s])
        continue;
      seen[s] = 1;
      std::size_t head = order.size();
      order.push_back(s);
      for (; head < order.size(); ++head)
        for (NodeId y: g.neighbors(order[head]))
          if (!seen[y]) {
            seen[y] = 1;
            order.push_back(y);
          }
    }
    return order;
  };

  std::vector<int> image(n), used(n);
  auto extend = [&](auto &&self, const std::vector<NodeId> &order, std::size_t k) -> bool {
    if (k == order.size())
      return true;
    NodeId x = order[k];
    for (NodeId y = 0; y < n; ++y) {
      if (used[y] || color[y] != color[x])
        continue;
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        ok = adj[x][order[j]] == adj[y][image[order[j]]];
      if (!ok)
        continue;
      image[x] = y;
      used[y] = 1;
      if (self(self, order, k + 1))
        return true;
      used[y] = 0;
    }
    return false;
  };

  for (NodeId u = 0; u < n; ++u) {
    const auto order = search_order(u);
    for (NodeId w = u + 1; w < n; ++w) {
      if (color[u] != color[w] || find(u) == find(w))
        continue;
      std::fill(used.begin(), used.end(), 0);
      image[u] = w;
      used[w] = 1;
      if (extend(extend, order, 1))
        for (NodeId x = 0; x < n; ++x)
          parent[find(x)] = find(image[x]);
    }
  }

  std::vector<int> roots(n);
  for (NodeId x = 0; x < n; ++x)
    roots[x] = find(x);
  return Coloring::from_ids(roots);
}

}  // namespace rolekit
