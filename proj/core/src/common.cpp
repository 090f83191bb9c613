#include "matroidfix/common.hpp"

namespace mfx {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::UnequalCardinality: return "UnequalCardinality";
    case Errc::ExchangeViolation: return "ExchangeViolation";
    case Errc::CircuitContainment: return "CircuitContainment";
    case Errc::EmptyCircuit: return "EmptyCircuit";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::LabelCollision: return "LabelCollision";
    case Errc::TooSmall: return "TooSmall";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooManyEdges: return "TooManyEdges";
    case Errc::BadParams: return "BadParams";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::DegreeMismatch: return "DegreeMismatch";
    case Errc::NotABasis: return "NotABasis";
    case Errc::NotAGroup: return "NotAGroup";
    case Errc::NotTransitive: return "NotTransitive";
    case Errc::RankDeficient: return "RankDeficient";
    case Errc::UnknownName: return "UnknownName";
    case Errc::HypothesisFail: return "HypothesisFail";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::SchemaError: return "SchemaError";
    case Errc::LimitError: return "LimitError";
  }
  return "Unknown";
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

}  // namespace mfx
