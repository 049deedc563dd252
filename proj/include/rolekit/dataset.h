//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_DATASET_H_
#define ROLEKIT_DATASET_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rolekit/graph.h"

namespace rolekit {

/**
 * @brief Load a graph collection stored in the TUDataset text layout.
 *
 * Reads `<prefix>_A.txt` and `<prefix>_graph_indicator.txt` from `dir`, plus
 * `<prefix>_node_labels.txt`, `<prefix>_graph_labels.txt` and
 * `<prefix>_node_attributes.txt` when present. Ids in the files are 1-based.
 * Every undirected edge must be listed in both directions exactly once.
 *
 * Throws IoError for missing required files and ParseError for malformed
 * lines, out-of-range ids, self-loops, duplicate or asymmetric rows, edges
 * crossing graphs and non-contiguous graph ids.
 */
GraphCollection load_tudataset(const std::filesystem::path &dir, const std::string &prefix);

// Writes the same layout (LF line endings, "u, v" adjacency rows, both
// directions). Creates `dir` if needed.
void write_tudataset(const GraphCollection &collection, const std::filesystem::path &dir,
                     const std::string &prefix);

Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_path(int n);
Graph make_star(int leaves);

/**
 * @brief The two 2-regular six-node graphs used as the running example for
 *        depth-dependent roles.
 *
 * First: the cycle 1-2-4-5-6-3-1. Second: triangles {1,4,5} and {2,3,6}.
 * Node k in this 1-based description is node k-1 here.
 */
std::pair<Graph, Graph> make_figure1_pair();

using Rng = std::mt19937_64;

// G(n, p).
Graph random_gnp(int n, double p, Rng &rng);
// Uniform random labelled tree via a Pruefer sequence.
Graph random_tree(int n, Rng &rng);
// About n * max_degree / 2 random edge proposals, each accepted only while
// both endpoints are below `max_degree`.
Graph random_bounded_degree(int n, int max_degree, Rng &rng);
std::vector<NodeId> random_permutation(int n, Rng &rng);

}  // namespace rolekit

#endif  // ROLEKIT_DATASET_H_
