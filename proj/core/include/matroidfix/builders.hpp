#pragma once

#include <variant>

#include "matroidfix/graph.hpp"
#include "matroidfix/matroid.hpp"

namespace mfx {

Matroid uniform(int r, int n);

struct BinaryMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Mask> columns;  // bit i of columns[j] = entry (i, j)

  bool is_simple() const;  // no zero column, no repeated column
};

// Column matroid over GF(2). Default labels "a", "b", ...
Matroid from_binary(const BinaryMatrix& mat, std::vector<std::string> labels = {});

Matroid fano();
Matroid pg32();  // PG(3,2): the 15 nonzero vectors of GF(2)^4
Matroid vamos();
Matroid p6();

// Bipartite presentation of a transversal matroid. X carries the matroid
// elements; adjacency masks are over Y (bit i = y_labels[i]).
struct TransversalPresentation {
  std::vector<std::string> x_labels;
  std::vector<std::string> y_labels;
  std::vector<Mask> adjacency;  // aligned with x_labels

  Mask adjacency_of(const std::string& x_label) const;
};

struct TransversalResult {
  Matroid matroid;
  // true when the maximum matching of X into Y fell short of |Y|, i.e. the
  // presentation violates the |Y| = r(M) assumption; the matroid itself is
  // still returned with its true rank.
  bool rank_deficient;
};

TransversalResult transversal(const TransversalPresentation& p);

// The presentation behind p6(); exposed so maximality can be tested.
TransversalPresentation p6_presentation();

// Adds every bipartite edge that leaves the basis family unchanged, testing
// candidates in (x, y) label order and restarting after each acceptance.
TransversalPresentation maximal_presentation(const TransversalPresentation& p);

// Transversal matroid of the family of all k-subsets of [n]; needs
// C(n,k) <= 22.
Matroid m_n_k(int n, int k);

using CatalogEntry = std::variant<Graph, Matroid>;

// Catalog names: fano, pg32, vamos, p6, uniform:r,n (aliases u:r,n and
// u_r_n:r,n), mnk:n,k, theta, wheel:n, complete:n, complete_bipartite:m,n,
// icosahedron, dodecahedron, two_k4e, k4_minus_e.
CatalogEntry named(const std::string& name);

Graph theta_graph();
Graph wheel(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int m, int n);
Graph icosahedron();
Graph dodecahedron();
Graph two_k4e();
Graph k4_minus_e();
Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace mfx
