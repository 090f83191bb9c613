#pragma once

#include <vector>

#include "matroidfix/ground_set.hpp"
#include "matroidfix/set_family.hpp"

namespace mfx {

// Canonical matroid representation: ground set plus the explicit family of
// bases. Every constructor normalizes to this form; a permutation is an
// automorphism iff it maps the basis family onto itself.
class Matroid {
 public:
  // validate=true runs the exhaustive basis-exchange check; trusted builders
  // (uniform, spanning-tree enumeration, ...) may skip it.
  static Matroid from_bases(GroundSet ground, std::vector<Mask> bases,
                            bool validate = true);
  static Matroid from_circuits(GroundSet ground, const SetFamily& circuits);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const std::vector<Mask>& bases() const { return bases_; }

  bool is_basis(Mask s) const;
  bool is_independent(Mask s) const;
  int rank_of(Mask s) const;
  bool is_loop(int id) const;
  bool is_coloop(int id) const;

  SetFamily circuits() const;
  SetFamily cocircuits() const;

  Matroid dual() const;
  Matroid deleted(const std::string& x) const;
  Matroid contracted(const std::string& x) const;

  // True iff every pair of elements lies in a common circuit (n >= 2).
  bool is_connected() const;

  // Flats whose restriction is coloop-free, i.e. unions of circuits.
  // The empty set counts as a cyclic flat of a loopless matroid.
  SetFamily cyclic_flats() const;

  // Same matroid with labels replaced positionally (ids are re-sorted).
  Matroid with_labels(std::vector<std::string> new_labels) const;

  bool operator==(const Matroid&) const = default;

 private:
  Matroid(GroundSet ground, int rank, std::vector<Mask> bases);

  GroundSet ground_;
  int rank_ = 0;
  std::vector<Mask> bases_;  // sorted ascending
};

Matroid direct_sum(const Matroid& a, const Matroid& b);

// Adds one point in general position without raising rank (rank >= 1). An
// empty new_label picks the first unused name "p", "p1", "p2", ...
Matroid free_extension(const Matroid& m, std::string new_label = "");

bool is_uniform(const Matroid& m);

}  // namespace mfx
