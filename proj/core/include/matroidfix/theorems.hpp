#pragma once

#include <string>
#include <utility>
#include <vector>

#include "matroidfix/builders.hpp"
#include "matroidfix/engine.hpp"

namespace mfx {

enum class CheckStatus { Pass, Fail, Skip };

std::string to_string(CheckStatus s);

struct TheoremReport {
  std::string id;
  std::vector<std::pair<std::string, bool>> hypotheses;
  CheckStatus status = CheckStatus::Skip;
  std::string detail;  // computed values, witnesses, counterexample data
  double elapsed_ms = 0.0;

  bool hypotheses_hold() const;
};

// fix(M(G)) = fix(B(G)) for 3-connected G with at least 5 vertices.
TheoremReport check_samefix(const Graph& g, std::size_t cap = kDefaultGroupCap);

// The induced edge action of Aut(G) equals the matroid automorphism group,
// as permutation sets. Cycle side needs 3-connectivity; bicircular side
// needs 2-connectivity, minimum degree 3 and at least 5 vertices.
TheoremReport check_autogps(const Graph& g, MatroidKind which,
                            std::size_t cap = kDefaultGroupCap);

// Wheel invariants: |Aut(B(W_n))| = 2n and equal to the edge action of the
// vertex symmetries, exactly n size-3 cocircuits (the rim-vertex stars),
// fix(B(W_n)) = 2. Needs 4 <= n <= 8.
TheoremReport check_wheels(int n, std::size_t cap = kDefaultGroupCap);

// fix(M(K_n)) = floor(2n/3), fix(B(K_4)) = 5, fix(B(K_n)) = floor(2n/3)
// for n >= 5. Needs 2 <= n <= 7; the formula is checked for n >= 3.
TheoremReport check_complete_graphs(int n, std::size_t cap = kDefaultGroupCap);

// fix(M(K_{m,n})) = fix(B(K_{m,n})) = n-1 for m < n, = n for m = n > 2,
// = 3 for K_{2,2}; also validates the matching-based witness set of size
// n-1. Needs m <= n and mn <= 21.
TheoremReport check_complete_bipartite(int m, int n,
                                       std::size_t cap = kDefaultGroupCap);

// fix(M) = fix(M*).
TheoremReport check_planar_duality(const Matroid& m,
                                   std::size_t cap = kDefaultGroupCap);

// B(G) is connected iff G has no degree-1 vertex, for connected G with more
// than one edge that is not a cycle.
TheoremReport check_matthews(const Graph& g);

// M_{n,k} is uniform iff k = 1 or n - k <= 2, over all (n, k) with
// C(n, k) <= 22 and n <= n_max.
TheoremReport check_mnk_uniformity(int n_max);

// The fixed suite behind `theorems`: every checker over the shipped corpus.
std::vector<TheoremReport> default_theorem_suite(std::size_t cap = kDefaultGroupCap);

}  // namespace mfx
