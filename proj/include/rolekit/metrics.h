//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_METRICS_H_
#define ROLEKIT_METRICS_H_

#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rolekit/graph.h"

namespace rolekit {

enum class RoleMethod { kWl, kSnp, kExact };

std::string_view to_string(RoleMethod method);
std::optional<RoleMethod> parse_role_method(std::string_view name);

struct RoleOptions {
  int jobs = 1;
  // Node bound for the exact method (applies to the whole collection).
  int max_exact_nodes = 32;
};

// Roles of every node of the collection, in global node order.
Coloring compute_roles(const GraphCollection &collection, RoleMethod method, int depth,
                       const RoleOptions &options = {});

// Fraction of nodes whose label equals the most frequent label of their role
// class.
double majority_accuracy(const Coloring &roles, std::span<const int> labels);

// Frequency of the most common label: the accuracy of the constant coloring.
double majority_baseline(std::span<const int> labels);

/**
 * @brief Improvement over the baseline, (a - b) / (1 - b).
 *
 * Returns nullopt when b == 1 (every node has the same label) since the score
 * is undefined there. Throws std::invalid_argument if b is outside [0, 1].
 */
std::optional<double> overlap_score(const Coloring &roles, std::span<const int> labels,
                                    double baseline);

struct DepthSweepRow {
  int depth;
  RoleMethod method;
  int num_roles;
  double roles_per_node;
  std::optional<double> overlap;
};

// Rows for depth = 0..max_depth. Overlap is measured against node labels and
// left empty when the collection has none.
std::vector<DepthSweepRow> depth_sweep(const GraphCollection &collection, RoleMethod method,
                                       int max_depth, const RoleOptions &options = {});

// CSV with header `dataset,method,depth,num_roles,roles_per_node,overlap`;
// fractions with 6 decimals, undefined overlap as `NA`.
void write_sweep_csv(std::ostream &out, std::string_view dataset,
                     std::span<const DepthSweepRow> rows);
// Array of objects keyed by the CSV header names; undefined overlap is null.
void write_sweep_json(std::ostream &out, std::string_view dataset,
                      std::span<const DepthSweepRow> rows);

struct SweepRecord {
  std::string dataset;
  DepthSweepRow row;
};
std::vector<SweepRecord> read_sweep_csv(std::istream &in);

struct RoleAssignment {
  int graph_id;  // 1-based
  int node_id;   // 1-based, local to the graph
  int role_id;
};

// CSV with header `graph_id,node_id,role_id`.
void write_roles_csv(std::ostream &out, const GraphCollection &collection, const Coloring &roles);
std::vector<RoleAssignment> read_roles_csv(std::istream &in);

}  // namespace rolekit

#endif  // ROLEKIT_METRICS_H_
