#pragma once

#include <vector>

#include "matroidfix/common.hpp"

namespace mfx {

// Labeled ground set. Element ids 0..n-1 follow sorted label order, so
// canonical sorts are deterministic across runs.
class GroundSet {
 public:
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int id) const { return labels_[id]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int id_of(const std::string& label) const;  // throws UnknownElement
  bool contains(const std::string& label) const;

  Mask full() const { return bit(size()) - 1; }

  std::vector<std::string> labels_of(Mask m) const;
  Mask mask_of(const std::vector<std::string>& labels) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;  // sorted, unique
};

// "a", "b", ... for n <= 22.
GroundSet default_ground(int n);
std::vector<std::string> default_labels(int n);

}  // namespace mfx
