#include "matroidfix/set_family.hpp"

#include <algorithm>

namespace mfx {

namespace {
bool canonical_less(Mask a, Mask b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  return a < b;
}
}  // namespace

SetFamily SetFamily::of(int n, std::vector<Mask> sets) {
  if (n < 0 || n > kMaxGroundSize) fail(Errc::BadParams, "bad universe size");
  const Mask universe = bit(n) - 1;
  for (Mask s : sets) {
    if ((s & ~universe) != 0) fail(Errc::UnknownElement, "set member outside universe");
  }
  std::sort(sets.begin(), sets.end(), canonical_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return SetFamily{n, std::move(sets)};
}

bool SetFamily::contains(Mask m) const {
  return std::binary_search(sets.begin(), sets.end(), m, canonical_less);
}

}  // namespace mfx
