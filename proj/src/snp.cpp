//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/snp.h"

#include <string>
#include <unordered_map>

#include "rolekit/parallel.h"

namespace rolekit {
namespace {
std::vector<std::string> serialized_embeddings(const Graph &g, int depth) {
  const auto adjacency = adjacency_matrix<WalkCount>(g);
  std::vector<std::string> out(g.num_nodes());
  for (NodeId v = 0; v < g.num_nodes(); ++v)
    out[v] = SnpEmbedding::from_walk_counts(walk_count_rows<WalkCount>(adjacency, v, depth))
                 .serialize();
  return out;
}

std::vector<std::vector<std::string>> serialized_embeddings(const GraphCollection &collection,
                                                            int depth, int jobs) {
  if (depth < 0)
    throw std::invalid_argument("negative depth");
  std::vector<std::vector<std::string>> per_graph(collection.num_graphs());
  parallel_for(per_graph.size(), jobs, [&](std::size_t i) {
    per_graph[i] = serialized_embeddings(collection.graph(static_cast<int>(i)), depth);
  });
  return per_graph;
}
}  // namespace

std::vector<SnpEmbedding> snp_embeddings(const Graph &g, int depth, int jobs) {
  if (depth < 0)
    throw std::invalid_argument("negative depth");
  const auto adjacency = adjacency_matrix<WalkCount>(g);
  std::vector<SnpEmbedding> out(g.num_nodes());
  parallel_for(out.size(), jobs, [&](std::size_t v) {
    out[v] = SnpEmbedding::from_walk_counts(
        walk_count_rows<WalkCount>(adjacency, static_cast<NodeId>(v), depth));
  });
  return out;
}

Coloring snp_roles(const GraphCollection &collection, int depth, int jobs) {
  const auto per_graph = serialized_embeddings(collection, depth, jobs);

  std::unordered_map<std::string_view, int> index;
  std::vector<int> ids;
  ids.reserve(collection.total_nodes());
  for (const auto &graph: per_graph) {
    for (const std::string &key: graph) {
      auto [it, _] = index.try_emplace(key, static_cast<int>(index.size()));
      ids.push_back(it->second);
    }
  }
  return Coloring::from_ids(ids);
}

Coloring snp_roles(const Graph &g, int depth, int jobs) {
  return snp_roles(GraphCollection({ g }), depth, jobs);
}

void write_embedding_dump(std::ostream &out, const GraphCollection &collection, int depth,
                          int jobs) {
  const auto per_graph = serialized_embeddings(collection, depth, jobs);
  for (std::size_t g = 0; g < per_graph.size(); ++g)
    for (std::size_t v = 0; v < per_graph[g].size(); ++v)
      out << g + 1 << ',' << v + 1 << ',' << per_graph[g][v] << '\n';
}

}  // namespace rolekit
