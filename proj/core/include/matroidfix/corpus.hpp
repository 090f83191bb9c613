#pragma once

#include <string>
#include <vector>

#include "matroidfix/theorems.hpp"

namespace mfx {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_ms = 0.0;
};

// The full acceptance corpus, in fixed order. Every result carries the
// computed values so failures are diagnosable from the output alone.
std::vector<CriterionResult> run_corpus(std::size_t cap = kDefaultGroupCap);

// Brute-force minimum base size: tries every point subset by increasing
// cardinality until one has a trivial pointwise stabilizer. Exponential;
// used as the independent oracle for the pruned search.
int naive_min_base(const PermGroup& g);

}  // namespace mfx
