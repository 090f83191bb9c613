#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "matroidfix/common.hpp"

namespace mfx {

inline constexpr std::size_t kDefaultGroupCap = 1'000'000;

// A bijection on {0..n-1}. Degrees up to 31 are supported so that induced
// edge actions (e.g. 30 edges of a dodecahedron) fit the mask type.
class Perm {
 public:
  explicit Perm(std::vector<std::uint8_t> images);
  static Perm identity(int degree);
  static Perm transposition(int degree, int a, int b);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  bool is_identity() const;

  // compose(a, b)(i) = a(b(i))
  static Perm compose(const Perm& a, const Perm& b);
  Perm inverse() const;
  Mask apply(Mask m) const;

  auto operator<=>(const Perm&) const = default;

 private:
  std::vector<std::uint8_t> img_;
};

// Permutation group stored as an explicit, deduplicated element list
// (always including the identity), bounded by a configurable cap.
class PermGroup {
 public:
  static PermGroup trivial(int degree);
  static PermGroup closure(int degree, const std::vector<Perm>& generators,
                           std::size_t cap = kDefaultGroupCap);
  // verify=true checks the group axioms: exhaustively for order <= 10000,
  // by sampling 10000 random pairs above that.
  static PermGroup from_elements(int degree, std::vector<Perm> elements,
                                 bool verify = true);

  int degree() const { return degree_; }
  std::uint64_t order() const { return elements_.size(); }
  bool is_trivial() const { return elements_.size() == 1; }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& p) const;

  // Pointwise stabilizer of the given point set.
  PermGroup stabilizer(Mask fixed) const;

  // Orbit partition, ordered by smallest member.
  std::vector<Mask> orbits() const;
  int max_orbit_size() const;

 private:
  PermGroup(int degree, std::vector<Perm> elements);

  int degree_ = 0;
  std::vector<Perm> elements_;  // sorted
};

}  // namespace mfx
