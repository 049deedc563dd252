//
// rolekit - scale-dependent node roles
// SPDX-License-Identifier: Apache-2.0
//

#include "rolekit/partition.h"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <utility>

namespace rolekit {
namespace {
void check_sizes(const Coloring &a, const Coloring &b) {
  if (a.size() != b.size())
    throw std::invalid_argument("colorings cover different node counts");
}
}  // namespace

bool refines(const Coloring &fine, const Coloring &coarse) {
  check_sizes(fine, coarse);

  // Each fine class must map to exactly one coarse class.
  std::vector<int> image(fine.num_classes(), -1);
  for (NodeId v = 0; v < fine.size(); ++v) {
    int &target = image[fine[v]];
    if (target < 0)
      target = coarse[v];
    else if (target != coarse[v])
      return false;
  }
  return true;
}

bool equivalent(const Coloring &a, const Coloring &b) {
  check_sizes(a, b);
  return a.num_classes() == b.num_classes() && refines(a, b);
}

std::vector<int> class_sizes(const Coloring &c) {
  std::vector<int> sizes(c.num_classes(), 0);
  for (int color: c.colors())
    ++sizes[color];
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return sizes;
}

Coloring meet(const Coloring &a, const Coloring &b) {
  check_sizes(a, b);
  std::vector<std::pair<int, int>> keys(a.size());
  for (NodeId v = 0; v < a.size(); ++v)
    keys[v] = { a[v], b[v] };
  return Coloring::from_keys(std::span<const std::pair<int, int>>(keys),
                             std::map<std::pair<int, int>, int>());
}

}  // namespace rolekit
