//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/metrics.h"

#include <algorithm>
#include <cassert>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include <json.hpp>

#include "rolekit/error.h"
#include "rolekit/snp.h"
#include "rolekit/unravelling.h"
#include "rolekit/wl.h"

namespace rolekit {
namespace {
std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::vector<std::string> split_csv(const std::string &line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  for (std::string field; std::getline(ss, field, ',');)
    out.push_back(field);
  if (!line.empty() && line.back() == ',')
    out.emplace_back();
  return out;
}

int to_int(const std::string &s) {
  std::size_t pos = 0;
  int v = std::stoi(s, &pos);
  if (pos != s.size())
    throw ParseError("malformed integer '" + s + "'");
  return v;
}

double to_double(const std::string &s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size())
    throw ParseError("malformed number '" + s + "'");
  return v;
}

void check_labels(const Coloring &roles, std::span<const int> labels) {
  if (static_cast<std::size_t>(roles.size()) != labels.size())
    throw std::invalid_argument("role and label counts differ");
  if (labels.empty())
    throw std::invalid_argument("empty label set");
}
}  // namespace

std::string_view to_string(RoleMethod method) {
  switch (method) {
  case RoleMethod::kWl:
    return "wl";
  case RoleMethod::kSnp:
    return "snp";
  case RoleMethod::kExact:
    return "exact";
  }
  return "?";
}

std::optional<RoleMethod> parse_role_method(std::string_view name) {
  if (name == "wl")
    return RoleMethod::kWl;
  if (name == "snp")
    return RoleMethod::kSnp;
  if (name == "exact")
    return RoleMethod::kExact;
  return std::nullopt;
}

Coloring compute_roles(const GraphCollection &collection, RoleMethod method, int depth,
                       const RoleOptions &options) {
  if (depth < 0)
    throw std::invalid_argument("negative depth");
  switch (method) {
  case RoleMethod::kWl:
    return wl::wl_roles(collection, depth).final();
  case RoleMethod::kSnp:
    return snp_roles(collection, depth, options.jobs);
  case RoleMethod::kExact:
    if (collection.total_nodes() > options.max_exact_nodes)
      throw SizeGuardError("exact roles limited to " + std::to_string(options.max_exact_nodes)
                           + " nodes, collection has "
                           + std::to_string(collection.total_nodes()));
    return exact_roles(collection.union_graph(), depth,
                       { .max_nodes = options.max_exact_nodes, .jobs = options.jobs });
  }
  throw std::invalid_argument("unknown role method");
}

double majority_accuracy(const Coloring &roles, std::span<const int> labels) {
  check_labels(roles, labels);
  std::vector<std::unordered_map<int, int>> counts(roles.num_classes());
  for (std::size_t v = 0; v < labels.size(); ++v)
    ++counts[roles[static_cast<NodeId>(v)]][labels[v]];

  long hits = 0;
  for (const auto &cls: counts) {
    int best = 0;
    for (auto [label, count]: cls)
      best = std::max(best, count);
    hits += best;
  }
  return static_cast<double>(hits) / static_cast<double>(labels.size());
}

double majority_baseline(std::span<const int> labels) {
  return majority_accuracy(Coloring::constant(static_cast<int>(labels.size())), labels);
}

std::optional<double> overlap_score(const Coloring &roles, std::span<const int> labels,
                                    double baseline) {
  if (!(baseline >= 0.0 && baseline <= 1.0))
    throw std::invalid_argument("baseline must lie in [0, 1]");
  const double a = majority_accuracy(roles, labels);
  if (baseline == 1.0)
    return std::nullopt;
  return (a - baseline) / (1.0 - baseline);
}

std::vector<DepthSweepRow> depth_sweep(const GraphCollection &collection, RoleMethod method,
                                       int max_depth, const RoleOptions &options) {
  if (max_depth < 0)
    throw std::invalid_argument("negative depth");
  if (method == RoleMethod::kExact && collection.total_nodes() > options.max_exact_nodes)
    throw SizeGuardError("exact roles limited to " + std::to_string(options.max_exact_nodes)
                         + " nodes, collection has " + std::to_string(collection.total_nodes()));

  const std::vector<int> labels = collection.node_labels();
  const bool scored = !labels.empty() && collection.total_nodes() > 0;
  const double baseline = scored ? majority_baseline(labels) : 0.0;
  const double n = std::max(collection.total_nodes(), 1);

  // The WL trace is shared across depths.
  std::optional<wl::RefinementTrace> trace;
  if (method == RoleMethod::kWl)
    trace = wl::wl_roles(collection, max_depth);

  std::vector<DepthSweepRow> rows;
  for (int d = 0; d <= max_depth; ++d) {
    Coloring roles = trace ? trace->at(d) : compute_roles(collection, method, d, options);
    DepthSweepRow row { d, method, roles.num_classes(), roles.num_classes() / n, std::nullopt };
    if (scored) {
      row.overlap = overlap_score(roles, labels, baseline);
      // Every partition refines the constant one, so a >= b.
      assert(!row.overlap || *row.overlap >= -1e-12);
    }
    rows.push_back(row);
  }
  return rows;
}

void write_sweep_csv(std::ostream &out, std::string_view dataset,
                     std::span<const DepthSweepRow> rows) {
  out << "dataset,method,depth,num_roles,roles_per_node,overlap\n";
  for (const auto &r: rows) {
    out << dataset << ',' << to_string(r.method) << ',' << r.depth << ',' << r.num_roles << ','
        << fixed6(r.roles_per_node) << ',' << (r.overlap ? fixed6(*r.overlap) : "NA") << '\n';
  }
}

void write_sweep_json(std::ostream &out, std::string_view dataset,
                      std::span<const DepthSweepRow> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const auto &r: rows) {
    nlohmann::ordered_json obj;
    obj["dataset"] = dataset;
    obj["method"] = to_string(r.method);
    obj["depth"] = r.depth;
    obj["num_roles"] = r.num_roles;
    // Same rounding as the CSV.
    obj["roles_per_node"] = std::stod(fixed6(r.roles_per_node));
    if (r.overlap)
      obj["overlap"] = std::stod(fixed6(*r.overlap));
    else
      obj["overlap"] = nullptr;
    doc.push_back(std::move(obj));
  }
  out << doc.dump(2) << '\n';
}

std::vector<SweepRecord> read_sweep_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != "dataset,method,depth,num_roles,roles_per_node,overlap")
    throw ParseError("missing or unexpected sweep CSV header");

  std::vector<SweepRecord> out;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    auto f = split_csv(line);
    if (f.size() != 6)
      throw ParseError("sweep CSV row needs 6 fields: '" + line + "'");
    auto method = parse_role_method(f[1]);
    if (!method)
      throw ParseError("unknown method '" + f[1] + "'");
    try {
      DepthSweepRow row { to_int(f[2]), *method, to_int(f[3]), to_double(f[4]), std::nullopt };
      if (f[5] != "NA")
        row.overlap = to_double(f[5]);
      out.push_back({ f[0], row });
    } catch (const std::logic_error &) {
      throw ParseError("malformed sweep CSV row '" + line + "'");
    }
  }
  return out;
}

void write_roles_csv(std::ostream &out, const GraphCollection &collection,
                     const Coloring &roles) {
  if (roles.size() != collection.total_nodes())
    throw std::invalid_argument("role count does not match collection size");
  out << "graph_id,node_id,role_id\n";
  for (int g = 0; g < collection.num_graphs(); ++g)
    for (NodeId v = 0; v < collection.graph(g).num_nodes(); ++v)
      out << g + 1 << ',' << v + 1 << ',' << roles[collection.global_index(g, v)] << '\n';
}

std::vector<RoleAssignment> read_roles_csv(std::istream &in) {
  std::string line;
  if (!std::getline(in, line) || line != "graph_id,node_id,role_id")
    throw ParseError("missing or unexpected roles CSV header");

  std::vector<RoleAssignment> out;
  while (std::getline(in, line)) {
    if (line.empty())
      continue;
    auto f = split_csv(line);
    if (f.size() != 3)
      throw ParseError("roles CSV row needs 3 fields: '" + line + "'");
    try {
      out.push_back({ to_int(f[0]), to_int(f[1]), to_int(f[2]) });
    } catch (const std::logic_error &) {
      throw ParseError("malformed roles CSV row '" + line + "'");
    }
  }
  return out;
}

}  // namespace rolekit
