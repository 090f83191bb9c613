#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mfx {

// Subsets of a ground set are bit masks; ground sets are capped at 22
// elements so every subset fits a single word.
using Mask = std::uint32_t;

constexpr int kMaxGroundSize = 22;

inline int popcount(Mask m) { return std::popcount(m); }
inline Mask bit(int i) { return Mask{1} << i; }
inline bool has(Mask m, int i) { return (m >> i) & 1u; }

enum class Errc {
  EmptyFamily,
  UnequalCardinality,
  ExchangeViolation,
  CircuitContainment,
  EmptyCircuit,
  UnknownElement,
  LabelCollision,
  TooSmall,
  TooLarge,
  TooManyEdges,
  BadParams,
  CapExceeded,
  DegreeMismatch,
  NotABasis,
  NotAGroup,
  NotTransitive,
  RankDeficient,
  UnknownName,
  HypothesisFail,
  SyntaxError,
  SchemaError,
  LimitError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string what)
      : std::runtime_error(std::move(what)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) {
  throw Error(c, msg);
}

const char* errc_name(Errc c);

std::uint64_t binomial(int n, int k);

// Visits every k-subset of {0..n-1} in ascending numeric mask order.
template <typename F>
void for_each_subset_of_size(int n, int k, F&& f) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    f(Mask{0});
    return;
  }
  Mask m = bit(k) - 1;
  const Mask limit = bit(n);
  while (m < limit) {
    f(m);
    Mask c = m & (~m + 1);
    Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
}

}  // namespace mfx
