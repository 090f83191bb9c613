#pragma once

#include <vector>

#include "matroidfix/common.hpp"

namespace mfx {

// Family of subsets of {0..n-1}, deduplicated and sorted by (cardinality,
// numeric value).
struct SetFamily {
  int n = 0;
  std::vector<Mask> sets;

  static SetFamily of(int n, std::vector<Mask> sets);

  std::size_t size() const { return sets.size(); }
  bool contains(Mask m) const;
  bool operator==(const SetFamily&) const = default;
};

}  // namespace mfx
