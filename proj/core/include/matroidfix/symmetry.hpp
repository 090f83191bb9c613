#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "matroidfix/matroid.hpp"
#include "matroidfix/perm.hpp"

namespace mfx {

bool is_automorphism(const Matroid& m, const Perm& p);

// Complete automorphism group by class-respecting backtracking: elements are
// colored by iterated circuit/cocircuit signature refinement, partial maps
// are pruned by requiring fully-mapped circuits (and cocircuits) to land on
// circuits, and every leaf is accepted only after mapping the basis family.
PermGroup automorphism_group(const Matroid& m, std::size_t cap = kDefaultGroupCap);

std::vector<std::uint64_t> stabilizer_chain(const PermGroup& g,
                                            const std::vector<int>& seq);

struct BaseSearch {
  int size = 0;
  Mask witness = 0;
};

// Exact minimum base size (= fixing number when g is an automorphism group).
// Greedy max-orbit descent gives the upper bound; the exact search branches
// on one representative per orbit of the current stabilizer, smallest id
// first, pruned by the best found and an orbit-size logarithm bound.
BaseSearch min_base(const PermGroup& g);
BaseSearch greedy_base(const PermGroup& g);

// Partition by "the transposition (x y) lies in g", as masks ordered by
// smallest member.
std::vector<Mask> group_clone_classes(const PermGroup& g);

// Same partition from the matroid; asserts transitivity of the relation.
std::vector<Mask> clone_classes(const Matroid& m);

// Partition by equality of the sets of cyclic flats containing an element
// (n <= 16).
std::vector<Mask> clone_classes_via_cyclic_flats(const Matroid& m);

struct BoundsReport {
  int n = 0;
  int fix = 0;
  int max_orbit = 1;
  std::uint64_t aut_order = 1;
  std::uint64_t n_falling_k = 1;  // (n)_k
  std::uint64_t s_pow_k = 1;      // s^k
  std::uint64_t two_pow_k = 1;    // 2^k
  int clone_class_count = 0;
  bool upper_falling = false;  // |Aut| <= (n)_k
  bool upper_orbit = false;    // |Aut| <= s^k
  bool lower_two = false;      // 2^k <= |Aut|
  bool clone_lower = false;    // fix >= n - #clone classes
  bool all_hold = false;
};

struct FixReport {
  int fix = 0;
  std::vector<std::string> witness;
  std::uint64_t aut_order = 1;
  std::vector<std::vector<std::string>> orbits;
  int max_orbit = 1;
  std::vector<std::vector<std::string>> clone_classes;
  BoundsReport bounds;
  std::vector<std::uint64_t> chain;  // stabilizer orders along the witness
};

BoundsReport bounds_report(int n, int fix, int max_orbit, std::uint64_t aut_order,
                           int clone_class_count);

// Full invariants bundle for a group acting on labeled points.
FixReport analyze(const PermGroup& g, const std::vector<std::string>& labels);

// Same, with the group computed from the matroid.
FixReport analyze(const Matroid& m, std::size_t cap = kDefaultGroupCap);

// Theorem check for simple binary matroids: a basis must be a fixing set.
bool binary_basis_fixing_check(const Matroid& m, Mask basis, const PermGroup& aut);

}  // namespace mfx
