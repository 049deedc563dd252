//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/verify.h"

#include <array>
#include <map>
#include <sstream>

#include "rolekit/dataset.h"
#include "rolekit/partition.h"
#include "rolekit/snp.h"
#include "rolekit/unravelling.h"
#include "rolekit/wl.h"

namespace rolekit::verify {
namespace {
constexpr std::array<double, 2> kEdgeProbabilities { 0.2, 0.5 };

class Recorder {
public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string &what) {
    ++result_.cases;
    if (ok)
      return;
    if (result_.failures++ == 0)
      result_.first_failure = what;
  }

  CheckResult take() { return std::move(result_); }

private:
  CheckResult result_;
};

Graph random_small_graph(Rng &rng, int max_nodes) {
  std::uniform_int_distribution<int> size(1, max_nodes);
  std::uniform_int_distribution<std::size_t> pick(0, kEdgeProbabilities.size() - 1);
  int n = size(rng);
  return random_gnp(n, kEdgeProbabilities[pick(rng)], rng);
}

std::string describe(const Graph &g) {
  std::ostringstream os;
  os << "n=" << g.num_nodes() << " edges=[";
  for (auto [u, v]: g.edges())
    os << '(' << u << ',' << v << ')';
  os << ']';
  return os.str();
}

// Level-k walk counts from v as target -> count, nonzero entries only.
std::map<NodeId, long> level_counts(const Graph &g, NodeId v, int level) {
  auto rows = walk_count_rows<WalkCount>(g, v, level);
  std::map<NodeId, long> out;
  for (Eigen::Index u = 0; u < rows.cols(); ++u)
    if (rows(level, u) != WalkCount(0))
      out[static_cast<NodeId>(u)] = static_cast<long>(rows(level, u).value());
  return out;
}
}  // namespace

CheckResult check_figure1(int max_depth) {
  Recorder rec("figure1");
  auto [cycle, triangles] = make_figure1_pair();
  const GraphCollection both({ cycle, triangles });
  const Graph joint = both.union_graph();

  std::vector<int> side(12, 0);
  std::fill(side.begin() + 6, side.end(), 1);
  const Coloring split = Coloring::from_ids(side);
  const Coloring one = Coloring::constant(12);

  const auto trace = wl::wl_roles(both, max_depth);
  for (int d = 0; d <= max_depth; ++d) {
    const std::string at = " at d=" + std::to_string(d);
    rec.expect(trace.at(d) == one, "wl roles not a single class" + at);

    const Coloring &expected = d < 2 ? one : split;
    rec.expect(snp_roles(both, d) == expected, "snp roles wrong" + at);
    rec.expect(exact_roles(joint, d) == expected, "exact roles wrong" + at);
  }

  // Node k of the 1-based fixture description is node k-1 here.
  using Counts = std::map<NodeId, long>;
  rec.expect(level_counts(cycle, 0, 2) == Counts { { 0, 2 }, { 3, 1 }, { 5, 1 } },
             "cycle level-2 walk counts");
  rec.expect(level_counts(cycle, 0, 3) == Counts { { 1, 3 }, { 2, 3 }, { 4, 2 } },
             "cycle level-3 walk counts");
  rec.expect(level_counts(triangles, 0, 3) == Counts { { 3, 3 }, { 4, 3 }, { 0, 2 } },
             "triangles level-3 walk counts");
  return rec.take();
}

CheckResult check_wl_matches_unravelling(std::uint64_t seed, int graphs, int max_nodes,
                                         int max_depth) {
  Recorder rec("wl-vs-unidentified-unravelling");
  Rng rng(seed);
  for (int i = 0; i < graphs; ++i) {
    const Graph g = random_small_graph(rng, max_nodes);
    const auto trace = wl::wl_roles(g, max_depth);
    for (int d = 0; d <= max_depth; ++d)
      rec.expect(equivalent(trace.at(d), unidentified_roles(g, d)),
                 "graph " + std::to_string(i) + " d=" + std::to_string(d) + ": " + describe(g));
  }
  return rec.take();
}

CheckResult check_identified_matches_orbits(std::uint64_t seed, int pairs, int max_nodes) {
  Recorder rec("identified-vs-orbits");
  Rng rng(seed);
  for (int i = 0; i < pairs; ++i) {
    const Graph g1 = random_small_graph(rng, max_nodes);
    const Graph g2 = random_small_graph(rng, max_nodes);
    const int d = std::max(g1.num_nodes(), g2.num_nodes());
    const Graph joint = disjoint_union(std::array { g1, g2 });
    const Coloring orbits = automorphism_orbits(joint, { .max_nodes = 2 * max_nodes });

    for (NodeId u = 0; u < g1.num_nodes(); ++u) {
      for (NodeId v = 0; v < g2.num_nodes(); ++v) {
        bool same_orbit = orbits[u] == orbits[g1.num_nodes() + v];
        rec.expect(identified_equivalent(g1, u, g2, v, d) == same_orbit,
                   "pair " + std::to_string(i) + " u=" + std::to_string(u) + " v="
                       + std::to_string(v) + ": " + describe(g1) + " / " + describe(g2));
      }
    }
  }
  return rec.take();
}

CheckResult check_refinement_hierarchy(std::uint64_t seed, int graphs, int max_nodes,
                                       int max_depth) {
  Recorder rec("refinement-hierarchy");
  Rng rng(seed);
  for (int i = 0; i < graphs; ++i) {
    const Graph g = random_small_graph(rng, max_nodes);
    const auto trace = wl::wl_roles(g, max_depth);
    std::vector<Coloring> snp, exact;
    for (int d = 0; d <= max_depth; ++d) {
      snp.push_back(snp_roles(g, d));
      exact.push_back(exact_roles(g, d));
    }

    for (int d = 0; d <= max_depth; ++d) {
      const std::string at = "graph " + std::to_string(i) + " d=" + std::to_string(d) + ": ";
      rec.expect(refines(exact[d], trace.at(d)), at + "exact does not refine wl");
      rec.expect(refines(exact[d], snp[d]), at + "exact does not refine snp");
      if (d == max_depth)
        continue;
      rec.expect(refines(trace.at(d + 1), trace.at(d)), at + "wl depth monotonicity");
      rec.expect(refines(snp[d + 1], snp[d]), at + "snp depth monotonicity");
      rec.expect(refines(exact[d + 1], exact[d]), at + "exact depth monotonicity");
    }
  }
  return rec.take();
}

CheckResult check_isomorphism_invariance(std::uint64_t seed, int trials, int max_nodes,
                                         int max_depth) {
  Recorder rec("isomorphism-invariance");
  Rng rng(seed);
  std::uniform_int_distribution<int> depth(0, max_depth);
  for (int i = 0; i < trials; ++i) {
    const Graph g = random_small_graph(rng, max_nodes);
    const auto perm = random_permutation(g.num_nodes(), rng);
    const Graph h = permute(g, perm);
    const int d = depth(rng);
    const std::string at = "trial " + std::to_string(i) + " d=" + std::to_string(d) + ": ";

    const auto eg = snp_embeddings(g, d), eh = snp_embeddings(h, d);
    bool same = true;
    for (NodeId v = 0; v < g.num_nodes(); ++v)
      same = same && eg[v] == eh[perm[v]];
    rec.expect(same, at + "snp embedding changed under relabelling");

    rec.expect(equivalent(permute(wl::wl_roles(g, d).final(), perm), wl::wl_roles(h, d).final()),
               at + "wl roles not permuted");
    rec.expect(equivalent(permute(snp_roles(g, d), perm), snp_roles(h, d)),
               at + "snp roles not permuted");
    rec.expect(equivalent(permute(exact_roles(g, d), perm), exact_roles(h, d)),
               at + "exact roles not permuted");
  }
  return rec.take();
}

std::vector<CheckResult> run_all(const VerifyOptions &options) {
  const int trials = std::max(options.trials, 1);
  return {
    check_figure1(),
    check_wl_matches_unravelling(options.seed, trials),
    check_identified_matches_orbits(options.seed + 1, std::max(trials / 4, 1)),
    check_refinement_hierarchy(options.seed + 2, std::max(trials / 2, 1)),
    check_isomorphism_invariance(options.seed + 3, std::max(trials / 2, 1)),
  };
}

void print_report(std::ostream &out, std::span<const CheckResult> results) {
  for (const auto &r: results) {
    out << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.cases - r.failures << '/'
        << r.cases << " cases passed";
    if (!r.ok())
      out << "; first failure: " << r.first_failure;
    out << '\n';
  }
}

}  // namespace rolekit::verify
