//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_WL_H_
#define ROLEKIT_WL_H_

#include <optional>
#include <vector>

#include "rolekit/graph.h"

namespace rolekit::wl {

/**
 * @brief One round of color refinement.
 *
 * The new color of v is determined by the pair (c(v), sorted multiset of c over
 * N(v)). Distinct pairs always receive distinct colors: ids come from a
 * signature dictionary filled in ascending node order, so the result is
 * canonical and collision-free. Runs in O(|V| + |E| log deg) expected time.
 */
Coloring refine_step(const Graph &g, const Coloring &c);

struct RefinementTrace {
  // colorings[t] is the coloring after t rounds, t = 0..depth.
  std::vector<Coloring> colorings;
  // First t with colorings[t] equivalent to colorings[t - 1], if reached.
  std::optional<int> stabilized_at;

  int depth() const { return static_cast<int>(colorings.size()) - 1; }
  const Coloring &at(int t) const { return colorings.at(t); }
  const Coloring &final() const { return colorings.back(); }
};

// Rounds 0..depth from `initial`. Entries after stabilization repeat the
// stable partition.
RefinementTrace wl_roles(const Graph &g, const Coloring &initial, int depth);

// Same, from the constant coloring.
RefinementTrace wl_roles(const Graph &g, int depth);

// Joint refinement on the disjoint union, colors indexed by global node id so
// that ids are comparable across graphs.
RefinementTrace wl_roles(const GraphCollection &collection, int depth);

struct StableColoring {
  Coloring coloring;
  // Number of rounds run: the first t with c^t equivalent to c^{t-1}.
  int iterations;
};

// Refine from the constant coloring until the partition stops changing.
StableColoring stable_coloring(const Graph &g);
StableColoring stable_coloring(const Graph &g, const Coloring &initial);

namespace testing {
// Fault injection for the verification harness: while enabled, signature ids
// are folded modulo 2, making the recoloring non-injective.
void set_non_injective_signatures(bool enabled);
bool non_injective_signatures();

class ScopedNonInjectiveSignatures {
public:
  ScopedNonInjectiveSignatures(): previous_(non_injective_signatures()) {
    set_non_injective_signatures(true);
  }
  ~ScopedNonInjectiveSignatures() { set_non_injective_signatures(previous_); }

  ScopedNonInjectiveSignatures(const ScopedNonInjectiveSignatures &) = delete;
  ScopedNonInjectiveSignatures &operator=(const ScopedNonInjectiveSignatures &) = delete;

private:
  bool previous_;
};
}  // namespace testing

}  // namespace rolekit::wl

#endif  // ROLEKIT_WL_H_
