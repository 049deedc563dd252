//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#ifndef ROLEKIT_PARTITION_H_
#define ROLEKIT_PARTITION_H_

#include <vector>

#include "rolekit/graph.h"

namespace rolekit {

// True iff every class of `fine` lies inside a class of `coarse`. Throws
// std::invalid_argument on size mismatch.
bool refines(const Coloring &fine, const Coloring &coarse);

// Mutual refinement, i.e. the two colorings induce the same partition.
bool equivalent(const Coloring &a, const Coloring &b);

// Class sizes, largest first.
std::vector<int> class_sizes(const Coloring &c);

inline int num_classes(const Coloring &c) {
  return c.num_classes();
}

// Coarsest common refinement: u, v share a class iff they do in both inputs.
Coloring meet(const Coloring &a, const Coloring &b);

}  // namespace rolekit

#endif  // ROLEKIT_PARTITION_H_
