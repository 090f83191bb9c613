#include "matroidfix/ground_set.hpp"

#include <algorithm>

namespace mfx {

GroundSet::GroundSet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) fail(Errc::TooSmall, "ground set must have at least 1 element");
  if (static_cast<int>(labels_.size()) > kMaxGroundSize) {
    fail(Errc::LimitError, "ground set larger than " + std::to_string(kMaxGroundSize) +
                               " elements: " + std::to_string(labels_.size()));
  }
  std::sort(labels_.begin(), labels_.end());
  auto dup = std::adjacent_find(labels_.begin(), labels_.end());
  if (dup != labels_.end()) {
    fail(Errc::LabelCollision, "duplicate element label '" + *dup + "'");
  }
}

int GroundSet::id_of(const std::string& label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) {
    fail(Errc::UnknownElement, "unknown element '" + label + "'");
  }
  return static_cast<int>(it - labels_.begin());
}

bool GroundSet::contains(const std::string& label) const {
  return std::binary_search(labels_.begin(), labels_.end(), label);
}

std::vector<std::string> GroundSet::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i) {
    if (has(m, i)) out.push_back(labels_[i]);
  }
  return out;
}

Mask GroundSet::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) m |= bit(id_of(l));
  return m;
}

std::vector<std::string> default_labels(int n) {
  if (n < 1 || n > kMaxGroundSize) fail(Errc::BadParams, "element count out of range");
  std::vector<std::string> labels;
  labels.reserve(n);
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return labels;
}

GroundSet default_ground(int n) { return GroundSet(default_labels(n)); }

}  // namespace mfx
