//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/dataset.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string_view>

#include "rolekit/error.h"

namespace rolekit {
namespace fs = std::filesystem;

namespace {
struct LineReader {
  fs::path path;
  std::ifstream in;
  int line_no = 0;

  explicit LineReader(fs::path p): path(std::move(p)), in(path) {
    if (!in)
      throw IoError("cannot open " + path.string());
  }

  bool next(std::string &line) {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      if (line.find_first_not_of(" \t") != std::string::npos)
        return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &what) const {
    throw ParseError(path.filename().string() + ":" + std::to_string(line_no) + ": " + what);
  }
};

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos)
    return {};
  auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

// Comma separated fields, whitespace around each field ignored.
std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto comma = line.find(',', start);
    out.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

template <class T>
bool parse_number(std::string_view s, T &out) {
  if (s.empty())
    return false;
  if (s.front() == '+')
    s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

int parse_single_int(LineReader &reader, const std::string &line) {
  auto fields = split_fields(line);
  int v;
  if (fields.size() != 1 || !parse_number(fields[0], v))
    reader.fail("expected a single integer, got '" + line + "'");
  return v;
}

std::vector<int> read_int_column(const fs::path &path) {
  LineReader reader(path);
  std::vector<int> out;
  std::string line;
  while (reader.next(line))
    out.push_back(parse_single_int(reader, line));
  return out;
}

void write_text(const fs::path &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw IoError("cannot write " + path.string());
  out << text;
  if (!out)
    throw IoError("write failed for " + path.string());
}

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  // Prefer the shortest form that still round-trips.
  for (int prec = 1; prec < 17; ++prec) {
    char shorter[32];
    std::snprintf(shorter, sizeof(shorter), "%.*g", prec, x);
    if (std::strtod(shorter, nullptr) == x)
      return shorter;
  }
  return buf;
}
}  // namespace

GraphCollection load_tudataset(const fs::path &dir, const std::string &prefix) {
  auto file = [&](const char *suffix) { return dir / (prefix + suffix); };

  // Graph indicator: one 1-based graph id per node.
  std::vector<int> graph_of;
  {
    LineReader reader(file("_graph_indicator.txt"));
    std::string line;
    int expected = 1;
    while (reader.next(line)) {
      int gid = parse_single_int(reader, line);
      if (gid == expected + 1) {
        ++expected;
      } else if (gid != expected) {
        reader.fail("graph ids must be contiguous, ascending and start at 1; got "
                    + std::to_string(gid) + " after " + std::to_string(expected));
      }
      graph_of.push_back(gid - 1);
    }
  }
  const int total_nodes = static_cast<int>(graph_of.size());
  const int num_graphs = graph_of.empty() ? 0 : graph_of.back() + 1;

  std::vector<int> first_node(num_graphs + 1, total_nodes);
  for (int v = total_nodes - 1; v >= 0; --v)
    first_node[graph_of[v]] = v;

  // Adjacency rows, one direction per line.
  std::set<std::pair<int, int>> rows;
  {
    LineReader reader(file("_A.txt"));
    std::string line;
    while (reader.next(line)) {
      auto fields = split_fields(line);
      int u, v;
      if (fields.size() != 2 || !parse_number(fields[0], u) || !parse_number(fields[1], v))
        reader.fail("expected 'u, v', got '" + line + "'");
      if (u < 1 || u > total_nodes || v < 1 || v > total_nodes)
        reader.fail("node id out of range in '" + line + "'");
      if (u == v)
        reader.fail("self-loop on node " + std::to_string(u));
      --u, --v;
      if (graph_of[u] != graph_of[v])
        reader.fail("edge '" + line + "' connects different graphs");
      if (!rows.emplace(u, v).second)
        reader.fail("duplicate adjacency row '" + line + "'");
    }
  }

  std::vector<EdgeList> edges(num_graphs);
  for (auto [u, v]: rows) {
    if (!rows.contains({ v, u }))
      throw ParseError(prefix + "_A.txt: edge (" + std::to_string(u + 1) + ", "
                       + std::to_string(v + 1) + ") is listed in one direction only");
    if (u < v) {
      int g = graph_of[u];
      edges[g].emplace_back(u - first_node[g], v - first_node[g]);
    }
  }

  std::vector<int> node_labels;
  if (fs::exists(file("_node_labels.txt"))) {
    node_labels = read_int_column(file("_node_labels.txt"));
    if (static_cast<int>(node_labels.size()) != total_nodes)
      throw ParseError(prefix + "_node_labels.txt: expected " + std::to_string(total_nodes)
                       + " lines, got " + std::to_string(node_labels.size()));
  }

  std::vector<int> graph_labels;
  if (fs::exists(file("_graph_labels.txt"))) {
    graph_labels = read_int_column(file("_graph_labels.txt"));
    if (static_cast<int>(graph_labels.size()) != num_graphs)
      throw ParseError(prefix + "_graph_labels.txt: expected " + std::to_string(num_graphs)
                       + " lines, got " + std::to_string(graph_labels.size()));
  }

  std::optional<Eigen::MatrixXd> attributes;
  if (fs::exists(file("_node_attributes.txt"))) {
    LineReader reader(file("_node_attributes.txt"));
    std::vector<std::vector<double>> rows_read;
    std::string line;
    while (reader.next(line)) {
      auto fields = split_fields(line);
      std::vector<double> row;
      for (auto f: fields) {
        double x;
        if (!parse_number(f, x))
          reader.fail("malformed attribute '" + std::string(f) + "'");
        row.push_back(x);
      }
      if (!rows_read.empty() && row.size() != rows_read.front().size())
        reader.fail("attribute row width differs from first row");
      rows_read.push_back(std::move(row));
    }
    if (static_cast<int>(rows_read.size()) != total_nodes)
      throw ParseError(prefix + "_node_attributes.txt: expected " + std::to_string(total_nodes)
                       + " lines, got " + std::to_string(rows_read.size()));
    Eigen::Index cols = rows_read.empty() ? 0 : static_cast<Eigen::Index>(rows_read[0].size());
    attributes.emplace(total_nodes, cols);
    for (int v = 0; v < total_nodes; ++v)
      for (Eigen::Index j = 0; j < cols; ++j)
        (*attributes)(v, j) = rows_read[v][j];
  }

  std::vector<Graph> graphs;
  graphs.reserve(num_graphs);
  for (int g = 0; g < num_graphs; ++g) {
    int lo = first_node[g], hi = first_node[g + 1];
    std::vector<int> labels;
    if (!node_labels.empty())
      labels.assign(node_labels.begin() + lo, node_labels.begin() + hi);
    std::optional<Eigen::MatrixXd> attrs;
    if (attributes)
      attrs = attributes->middleRows(lo, hi - lo);
    graphs.push_back(Graph::from_edges(hi - lo, edges[g], std::move(labels), std::move(attrs)));
  }
  return GraphCollection(std::move(graphs), std::move(graph_labels));
}

void write_tudataset(const GraphCollection &collection, const fs::path &dir,
                     const std::string &prefix) {
  fs::create_directories(dir);
  auto file = [&](const char *suffix) { return dir / (prefix + suffix); };

  std::string adjacency, indicator;
  for (int g = 0; g < collection.num_graphs(); ++g) {
    const Graph &graph = collection.graph(g);
    int offset = collection.graph_offset(g) + 1;
    for (NodeId u = 0; u < graph.num_nodes(); ++u) {
      indicator += std::to_string(g + 1) + '\n';
      for (NodeId v: graph.neighbors(u))
        adjacency += std::to_string(u + offset) + ", " + std::to_string(v + offset) + '\n';
    }
  }
  write_text(file("_A.txt"), adjacency);
  write_text(file("_graph_indicator.txt"), indicator);

  if (collection.has_node_labels() && collection.total_nodes() > 0) {
    std::string text;
    for (int label: collection.node_labels())
      text += std::to_string(label) + '\n';
    write_text(file("_node_labels.txt"), text);
  }

  if (collection.has_graph_labels()) {
    std::string text;
    for (int label: collection.graph_labels())
      text += std::to_string(label) + '\n';
    write_text(file("_graph_labels.txt"), text);
  }

  bool attributed = collection.total_nodes() > 0;
  for (const Graph &g: collection.graphs())
    attributed = attributed && (g.empty() || g.node_attributes());
  if (attributed) {
    std::string text;
    for (const Graph &g: collection.graphs()) {
      if (g.empty())
        continue;
      const Eigen::MatrixXd &a = *g.node_attributes();
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
          if (j > 0)
            text += ", ";
          text += format_double(a(i, j));
        }
        text += '\n';
      }
    }
    write_text(file("_node_attributes.txt"), text);
  }
}

Graph make_cycle(int n) {
  if (n < 3)
    throw std::invalid_argument("cycle needs at least 3 nodes");
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph make_complete(int n) {
  if (n < 3)
    throw std::invalid_argument("complete graph needs at least 3 nodes");
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph make_path(int n) {
  if (n < 1)
    throw std::invalid_argument("path needs at least 1 node");
  EdgeList edges;
  for (int i = 0; i + 1 < n; ++i)
    edges.emplace_back(i, i + 1);
  return Graph::from_edges(n, edges);
}

Graph make_star(int leaves) {
  if (leaves < 1)
    throw std::invalid_argument("star needs at least 1 leaf");
  EdgeList edges;
  for (int i = 1; i <= leaves; ++i)
    edges.emplace_back(0, i);
  return Graph::from_edges(leaves + 1, edges);
}

std::pair<Graph, Graph> make_figure1_pair() {
  auto build = [](std::initializer_list<std::pair<int, int>> one_based) {
    EdgeList edges;
    for (auto [u, v]: one_based)
      edges.emplace_back(u - 1, v - 1);
    return Graph::from_edges(6, edges);
  };
  Graph cycle = build({ { 1, 2 }, { 2, 4 }, { 4, 5 }, { 5, 6 }, { 6, 3 }, { 3, 1 } });
  Graph triangles = build({ { 1, 4 }, { 4, 5 }, { 5, 1 }, { 2, 3 }, { 3, 6 }, { 6, 2 } });
  return { std::move(cycle), std::move(triangles) };
}

Graph random_gnp(int n, double p, Rng &rng) {
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng))
        edges.emplace_back(i, j);
  return Graph::from_edges(n, edges);
}

Graph random_tree(int n, Rng &rng) {
  if (n <= 1)
    return Graph::from_edges(std::max(n, 0), {});
  if (n == 2)
    return make_path(2);

  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(n - 2);
  for (int &c: code)
    c = pick(rng);

  std::vector<int> degree(n, 1);
  for (int c: code)
    ++degree[c];

  EdgeList edges;
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (degree[v] == 1)
      leaves.insert(v);
  for (int c: code) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1)
      leaves.insert(c);
  }
  int a = *leaves.begin(), b = *std::next(leaves.begin());
  edges.emplace_back(a, b);
  return Graph::from_edges(n, edges);
}

Graph random_bounded_degree(int n, int max_degree, Rng &rng) {
  if (n < 2 || max_degree < 1)
    return Graph::from_edges(std::max(n, 0), {});

  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> degree(n, 0);
  std::set<std::pair<int, int>> seen;
  EdgeList edges;
  const long attempts = static_cast<long>(n) * max_degree / 2;
  for (long k = 0; k < attempts; ++k) {
    int u = pick(rng), v = pick(rng);
    if (u == v || degree[u] >= max_degree || degree[v] >= max_degree)
      continue;
    auto key = std::minmax(u, v);
    if (seen.insert(key).second) {
      edges.emplace_back(key.first, key.second);
      ++degree[u];
      ++degree[v];
    }
  }
  return Graph::from_edges(n, edges);
}

std::vector<NodeId> random_permutation(int n, Rng &rng) {
  std::vector<NodeId> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace rolekit
