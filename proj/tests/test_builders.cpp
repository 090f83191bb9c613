#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <functional>

#include "matroidfix/builders.hpp"

using namespace mfx;

namespace {

// rank over GF(2) by gaussian elimination, independent of the matroid code
int gf2_rank(std::vector<Mask> cols, int rows) {
  int r = 0;
  for (int bit = 0; bit < rows; ++bit) {
    auto it = std::find_if(cols.begin() + r, cols.end(),
                           [&](Mask c) { return (c >> bit) & 1u; });
    if (it == cols.end()) continue;
    std::swap(cols[r], *it);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (j != static_cast<std::size_t>(r) && ((cols[j] >> bit) & 1u)) {
        cols[j] ^= cols[r];
      }
    }
    ++r;
  }
  return r;
}

// independence oracle for a binary column matroid, straight from the matrix
bool gf2_independent(const BinaryMatrix& m, Mask subset) {
  std::vector<Mask> picked;
  for (int j = 0; j < m.cols; ++j) {
    if ((subset >> j) & 1u) picked.push_back(m.columns[j]);
  }
  return gf2_rank(picked, m.rows) == static_cast<int>(picked.size());
}

BinaryMatrix fano_matrix() {
  // columns: all nonzero vectors of GF(2)^3
  BinaryMatrix m;
  m.rows = 3;
  m.cols = 7;
  m.columns = {1, 2, 3, 4, 5, 6, 7};
  return m;
}

// matching oracle: does the bipartite presentation have a transversal of
// `subset` into Y? (augmenting paths)
bool has_matching(const TransversalPresentation& p, Mask subset) {
  const int ny = static_cast<int>(p.y_labels.size());
  std::vector<int> match_y(ny, -1);
  std::vector<int> xs;
  for (std::size_t i = 0; i < p.x_labels.size(); ++i) {
    if ((subset >> i) & 1u) xs.push_back(static_cast<int>(i));
  }
  for (int x : xs) {
    std::vector<bool> seen(ny, false);
    std::function<bool(int)> aug = [&](int xv) {
      for (int y = 0; y < ny; ++y) {
        if (!((p.adjacency[xv] >> y) & 1u) || seen[y]) continue;
        seen[y] = true;
        if (match_y[y] == -1 || aug(match_y[y])) {
          match_y[y] = xv;
          return true;
        }
      }
      return false;
    };
    if (!aug(x)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("uniform matroids") {
  Matroid u = uniform(3, 6);
  CHECK(u.size() == 6);
  CHECK(u.rank() == 3);
  CHECK(u.bases().size() == 20);
  CHECK(is_uniform(u));
  CHECK(uniform(0, 3).bases().size() == 1);
  CHECK(uniform(3, 3).bases().size() == 1);
  CHECK_THROWS_AS(uniform(4, 3), Error);
  CHECK_THROWS_AS(uniform(2, 23), Error);
}

TEST_CASE("from_binary agrees with a GF(2) rank oracle") {
  const BinaryMatrix mat = fano_matrix();
  Matroid m = from_binary(mat);
  CHECK(m.size() == 7);
  CHECK(m.rank() == 3);
  for (Mask s = 0; s < (1u << 7); ++s) {
    CHECK(m.is_independent(s) == gf2_independent(mat, s));
  }
}

TEST_CASE("from_binary handles loops and parallel columns") {
  BinaryMatrix zero{3, 2, {0, 5}};
  CHECK_FALSE(zero.is_simple());
  Matroid mz = from_binary(zero);
  CHECK(mz.is_loop(0));
  CHECK(mz.rank() == 1);
  BinaryMatrix rep{3, 3, {5, 5, 1}};
  CHECK_FALSE(rep.is_simple());
  Matroid mr = from_binary(rep);
  CHECK(mr.rank() == 2);
  CHECK_FALSE(mr.is_independent(0b011));  // the equal columns
  CHECK(fano_matrix().is_simple());
  CHECK_THROWS_AS(from_binary(BinaryMatrix{0, 0, {}}), Error);
}

TEST_CASE("fano invariants") {
  Matroid f = fano();
  CHECK(f.size() == 7);
  CHECK(f.rank() == 3);
  CHECK(f.bases().size() == 28);  // 35 triples minus 7 lines
  const SetFamily c = f.circuits();
  int lines = 0;
  for (Mask s : c.sets) {
    if (popcount(s) == 3) ++lines;
  }
  CHECK(lines == 7);
}

TEST_CASE("pg32 invariants") {
  Matroid m = pg32();
  CHECK(m.size() == 15);
  CHECK(m.rank() == 4);
  CHECK(m.bases().size() == 840);
}

TEST_CASE("vamos invariants") {
  Matroid v = vamos();
  CHECK(v.size() == 8);
  CHECK(v.rank() == 4);
  CHECK(v.bases().size() == 65);  // 70 quadruples minus 5 circuit planes
  const SetFamily c = v.circuits();
  int planes = 0;
  for (Mask s : c.sets) {
    if (popcount(s) == 4) ++planes;
  }
  CHECK(planes == 5);
}

TEST_CASE("transversal matroid agrees with a matching oracle") {
  const TransversalPresentation p = p6_presentation();
  TransversalResult r = transversal(p);
  CHECK_FALSE(r.rank_deficient);
  const Matroid& m = r.matroid;
  CHECK(m.size() == 6);
  CHECK(m.rank() == 3);
  for (Mask s = 0; s < (1u << 6); ++s) {
    CHECK(m.is_independent(s) == has_matching(p, s));
  }
}

TEST_CASE("rank-deficient presentation is flagged") {
  TransversalPresentation p;
  p.x_labels = {"a", "b"};
  p.y_labels = {"1", "2", "3"};
  p.adjacency = {0b001, 0b001};  // both only meet y1
  TransversalResult r = transversal(p);
  CHECK(r.rank_deficient);
  CHECK(r.matroid.rank() == 1);
}

TEST_CASE("p6 is every 3-subset except one triple") {
  Matroid m = p6();
  CHECK(m.size() == 6);
  CHECK(m.rank() == 3);
  CHECK(m.bases().size() == 19);
  CHECK_FALSE(m.is_independent(m.ground().mask_of({"a", "b", "c"})));
  CHECK(m.is_independent(m.ground().mask_of({"d", "e", "f"})));
}

TEST_CASE("p6 presentation is maximal") {
  const TransversalPresentation p = p6_presentation();
  const TransversalPresentation q = maximal_presentation(p);
  CHECK(q.adjacency == p.adjacency);
  CHECK(q.x_labels == p.x_labels);
}

TEST_CASE("maximal_presentation adds only basis-preserving edges") {
  // U_{2,3} from a sparse presentation: maximality should fill the bipartite
  // graph completely (every x can see both y's without changing U_{2,3}).
  TransversalPresentation p;
  p.x_labels = {"a", "b", "c"};
  p.y_labels = {"1", "2"};
  p.adjacency = {0b01, 0b10, 0b11};
  const Matroid before = transversal(p).matroid;
  const TransversalPresentation q = maximal_presentation(p);
  CHECK(transversal(q).matroid == before);
  CHECK(q.adjacency == std::vector<Mask>{0b11, 0b11, 0b11});
}

TEST_CASE("m_n_k on small parameters") {
  // subsets of [4] of size 2: 6 elements, rank 4... but rank = n only when
  // the set system has a transversal of Y; here |Y| = n = 4.
  Matroid m = m_n_k(4, 2);
  CHECK(m.size() == 6);
  CHECK(m.rank() == 4);
  CHECK_THROWS_AS(m_n_k(10, 5), Error);  // C(10,5) = 252 > 22
}

TEST_CASE("graph builders have the right shape") {
  Graph t = theta_graph();
  CHECK(t.vertex_count() == 6);
  CHECK(t.edge_count() == 7);
  CHECK(cycle_matroid(t).bases().size() == 15);

  Graph w = wheel(5);
  CHECK(w.vertex_count() == 6);
  CHECK(w.edge_count() == 10);

  Graph k5 = complete_graph(5);
  CHECK(k5.edge_count() == 10);
  CHECK(cycle_matroid(k5).bases().size() == 125);  // Cayley: 5^3

  Graph k23 = complete_bipartite(2, 3);
  CHECK(k23.vertex_count() == 5);
  CHECK(k23.edge_count() == 6);

  CHECK(icosahedron().vertex_count() == 12);
  CHECK(icosahedron().edge_count() == 30);
  CHECK(dodecahedron().vertex_count() == 20);
  CHECK(dodecahedron().edge_count() == 30);
  for (int v = 0; v < 12; ++v) CHECK(icosahedron().degree(v) == 5);
  for (int v = 0; v < 20; ++v) CHECK(dodecahedron().degree(v) == 3);

  Graph g2 = two_k4e();
  CHECK(g2.vertex_count() == 6);
  CHECK(g2.edge_count() == 10);

  Graph ke = k4_minus_e();
  CHECK(ke.vertex_count() == 4);
  CHECK(ke.edge_count() == 5);

  CHECK(path_graph(4).edge_count() == 3);
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(is_cycle_graph(cycle_graph(5)));
  CHECK_FALSE(is_cycle_graph(path_graph(4)));
}

TEST_CASE("named catalog resolves every documented name") {
  CHECK(std::holds_alternative<Matroid>(named("fano")));
  CHECK(std::holds_alternative<Matroid>(named("pg32")));
  CHECK(std::holds_alternative<Matroid>(named("vamos")));
  CHECK(std::holds_alternative<Matroid>(named("p6")));
  CHECK(std::get<Matroid>(named("uniform:2,4")) == uniform(2, 4));
  CHECK(std::get<Matroid>(named("u:2,4")) == uniform(2, 4));
  CHECK(std::get<Matroid>(named("u_r_n:3,6")) == uniform(3, 6));
  CHECK(std::holds_alternative<Matroid>(named("mnk:4,2")));
  CHECK(std::holds_alternative<Graph>(named("theta")));
  CHECK(std::get<Graph>(named("wheel:5")).edge_count() == 10);
  CHECK(std::get<Graph>(named("complete:4")).edge_count() == 6);
  CHECK(std::get<Graph>(named("complete_bipartite:2,3")).edge_count() == 6);
  CHECK(std::holds_alternative<Graph>(named("icosahedron")));
  CHECK(std::holds_alternative<Graph>(named("dodecahedron")));
  CHECK(std::holds_alternative<Graph>(named("two_k4e")));
  CHECK(std::holds_alternative<Graph>(named("k4_minus_e")));
  CHECK_THROWS_AS(named("nonesuch"), Error);
  CHECK_THROWS_AS(named("wheel:bogus"), Error);
  CHECK_THROWS_AS(named("uniform:9,3"), Error);
}
