//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_VERIFY_H_
#define ROLEKIT_VERIFY_H_

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace rolekit::verify {

// Outcome of one randomized property check.
struct CheckResult {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

// Cycle vs. two triangles: WL never separates them; SNP and exact roles do
// from depth 2 on; walk counts from node 1 match hand-computed values.
CheckResult check_figure1(int max_depth = 6);

// WL partition at depth d equals the partition by unidentified unravelling
// isomorphism, for random G(n, p) with n <= max_nodes, p in {0.2, 0.5}.
CheckResult check_wl_matches_unravelling(std::uint64_t seed, int graphs, int max_nodes = 10,
                                         int max_depth = 4);

// For random pairs (n <= max_nodes each) and d = max(n1, n2): identified
// equivalence of u in g1 and v in g2 iff u, v share an automorphism orbit of
// the disjoint union.
CheckResult check_identified_matches_orbits(std::uint64_t seed, int pairs, int max_nodes = 6);

// Exact roles refine WL and SNP roles, and each method refines itself one
// level shallower.
CheckResult check_refinement_hierarchy(std::uint64_t seed, int graphs, int max_nodes = 8,
                                       int max_depth = 4);

// Relabelling a graph permutes SNP embeddings and all three partitions.
CheckResult check_isomorphism_invariance(std::uint64_t seed, int trials, int max_nodes = 8,
                                         int max_depth = 4);

struct VerifyOptions {
  std::uint64_t seed = 42;
  int trials = 200;
};

// All checks; per-check trial counts scale with `trials`.
std::vector<CheckResult> run_all(const VerifyOptions &options);

void print_report(std::ostream &out, std::span<const CheckResult> results);

}  // namespace rolekit::verify

#endif  // ROLEKIT_VERIFY_H_
