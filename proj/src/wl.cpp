//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/wl.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace rolekit::wl {
namespace {
std::atomic<bool> g_non_injective { false };
constexpr int kPrefetchDistance = 16;

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// splitmix64 finalizer, so the low bits index the table well.
std::uint64_t finalize(std::uint64_t h) {
  h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ULL;
  h = (h ^ (h >> 27)) * 0x94d049bb133111ebULL;
  return h ^ (h >> 31);
}

// Per-node signature: own color plus the neighbor colors in ascending order,
// stored in one flat array laid out like the adjacency list.
struct Signatures {
  std::span<const int> offsets;
  std::vector<int> neighbor_colors;
  std::vector<std::uint64_t> hashes;

  std::span<const int> of(NodeId v) const {
    return { neighbor_colors.data() + offsets[v], neighbor_colors.data() + offsets[v + 1] };
  }
};

Signatures build_signatures(const Graph &g, const Coloring &c) {
  const int n = g.num_nodes();
  const auto adj = g.adjacency();
  Signatures sig { g.offsets(), std::vector<int>(adj.size()), std::vector<std::uint64_t>(n) };

  for (NodeId v = 0; v < n; ++v) {
    const int first = sig.offsets[v], last = sig.offsets[v + 1];
    if (v + kPrefetchDistance < n)
      for (int i = sig.offsets[v + kPrefetchDistance]; i < sig.offsets[v + kPrefetchDistance + 1];
           ++i)
        __builtin_prefetch(&c.colors()[adj[i]]);
    for (int i = first; i < last; ++i)
      sig.neighbor_colors[i] = c[adj[i]];
    std::sort(sig.neighbor_colors.begin() + first, sig.neighbor_colors.begin() + last);

    std::uint64_t h = mix(0x51ed27f1u, static_cast<std::uint64_t>(c[v]));
    for (int i = first; i < last; ++i)
      h = mix(h, static_cast<std::uint64_t>(sig.neighbor_colors[i]));
    sig.hashes[v] = finalize(h);
  }
  return sig;
}
}  // namespace

void testing::set_non_injective_signatures(bool enabled) {
  g_non_injective.store(enabled);
}

bool testing::non_injective_signatures() {
  return g_non_injective.load();
}

Coloring refine_step(const Graph &g, const Coloring &c) {
  if (c.size() != g.num_nodes())
    throw std::invalid_argument("coloring covers " + std::to_string(c.size())
                                + " nodes but graph has " + std::to_string(g.num_nodes()));

  const Signatures sig = build_signatures(g, c);
  auto same = [&](NodeId a, NodeId b) {
    if (c[a] != c[b] || sig.hashes[a] != sig.hashes[b])
      return false;
    auto sa = sig.of(a), sb = sig.of(b);
    return std::equal(sa.begin(), sa.end(), sb.begin(), sb.end());
  };

  // Open addressing with linear probing. A slot keeps the first node seen
  // with a signature plus 32 hash bits, so most probes stay inside the table.
  struct Slot {
    std::uint32_t tag;
    NodeId node;
  };
  const int n = g.num_nodes();
  const std::size_t capacity = std::bit_ceil(2 * static_cast<std::size_t>(n) + 2);
  const std::size_t mask = capacity - 1;
  std::vector<Slot> slots(capacity, Slot { 0, -1 });

  const bool fold = testing::non_injective_signatures();
  std::vector<int> ids(n);
  int next_id = 0;
  for (NodeId v = 0; v < n; ++v) {
    // Random probes dominate on large graphs; fetch a few nodes ahead.
    if (v + kPrefetchDistance < n)
      __builtin_prefetch(&slots[static_cast<std::size_t>(sig.hashes[v + kPrefetchDistance]) & mask]);
    const std::uint64_t h = sig.hashes[v];
    const auto tag = static_cast<std::uint32_t>(h >> 32);
    std::size_t i = static_cast<std::size_t>(h) & mask;
    while (slots[i].node >= 0 && !(slots[i].tag == tag && same(slots[i].node, v)))
      i = (i + 1) & mask;
    if (slots[i].node < 0) {
      slots[i] = { tag, v };
      ids[v] = next_id++;
    } else {
      ids[v] = ids[slots[i].node];
    }
  }
  if (fold)
    for (int &id: ids)
      id %= 2;
  return Coloring::from_ids(ids);
}

RefinementTrace wl_roles(const Graph &g, const Coloring &initial, int depth) {
  if (depth < 0)
    throw std::invalid_argument("negative depth");
  if (initial.size() != g.num_nodes())
    throw std::invalid_argument("initial coloring does not match graph");

  RefinementTrace trace;
  trace.colorings.reserve(depth + 1);
  trace.colorings.push_back(Coloring::from_ids(initial.colors()));
  for (int t = 1; t <= depth; ++t) {
    if (trace.stabilized_at) {
      trace.colorings.push_back(trace.colorings.back());
      continue;
    }
    Coloring next = refine_step(g, trace.colorings.back());
    // Refinement only splits classes, so equal class counts mean the
    // partition did not change.
    if (next.num_classes() == trace.colorings.back().num_classes())
      trace.stabilized_at = t;
    trace.colorings.push_back(std::move(next));
  }
  return trace;
}

RefinementTrace wl_roles(const Graph &g, int depth) {
  return wl_roles(g, constant_coloring(g), depth);
}

RefinementTrace wl_roles(const GraphCollection &collection, int depth) {
  return wl_roles(collection.union_graph(), depth);
}

StableColoring stable_coloring(const Graph &g, const Coloring &initial) {
  Coloring current = Coloring::from_ids(initial.colors());
  for (int t = 1;; ++t) {
    Coloring next = refine_step(g, current);
    if (next.num_classes() == current.num_classes())
      return { std::move(next), t };
    current = std::move(next);
  }
}

StableColoring stable_coloring(const Graph &g) {
  return stable_coloring(g, constant_coloring(g));
}

}  // namespace rolekit::wl
