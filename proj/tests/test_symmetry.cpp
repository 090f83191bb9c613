#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "matroidfix/builders.hpp"
#include "matroidfix/corpus.hpp"
#include "matroidfix/engine.hpp"
#include "matroidfix/symmetry.hpp"

using namespace mfx;

namespace {

// exhaustive oracle: every permutation of the ground set, basis family check
PermGroup brute_automorphisms(const Matroid& m) {
  const int n = m.size();
  std::vector<std::uint8_t> p(n);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  std::vector<Perm> elems;
  do {
    Perm perm(p);
    bool ok = true;
    for (Mask b : m.bases()) {
      if (!m.is_basis(perm.apply(b))) {
        ok = false;
        break;
      }
    }
    if (ok) elems.push_back(perm);
  } while (std::next_permutation(p.begin(), p.end()));
  return PermGroup::from_elements(n, std::move(elems), /*verify=*/false);
}

bool same_elements(const PermGroup& a, const PermGroup& b) {
  return a.elements() == b.elements();
}

}  // namespace

TEST_CASE("is_automorphism matches the definition") {
  Matroid f = fano();
  CHECK(is_automorphism(f, Perm::identity(7)));
  // fano line {a,b,c}: swapping a,b preserves the lines through c
  const PermGroup g = automorphism_group(f);
  for (const Perm& p : g.elements()) CHECK(is_automorphism(f, p));
  int hits = 0;
  for (int i = 1; i < 7; ++i) {
    if (is_automorphism(f, Perm::transposition(7, 0, i))) ++hits;
  }
  CHECK(hits == 0);  // fano has no clone pairs
}

TEST_CASE("automorphism search agrees with brute force on n <= 7") {
  for (const Matroid& m :
       {fano(), p6(), uniform(2, 5), uniform(3, 6), uniform(1, 4),
        cycle_matroid(complete_graph(4)),
        bicircular_matroid(k4_minus_e()), m_n_k(4, 2),
        direct_sum(uniform(1, 2), uniform(2, 3).with_labels({"x", "y", "z"}))}) {
    CHECK(same_elements(automorphism_group(m), brute_automorphisms(m)));
  }
}

TEST_CASE("known automorphism orders") {
  CHECK(automorphism_group(fano()).order() == 168);
  CHECK(automorphism_group(vamos()).order() == 64);
  CHECK(automorphism_group(p6()).order() == 36);
  CHECK(automorphism_group(uniform(2, 5)).order() == 120);
  CHECK(automorphism_group(pg32()).order() == 20160);
}

TEST_CASE("automorphism cap is honored") {
  CHECK_THROWS_AS(automorphism_group(uniform(2, 5), 100), Error);
}

TEST_CASE("min_base matches the exhaustive oracle") {
  std::vector<PermGroup> groups;
  groups.push_back(automorphism_group(fano()));
  groups.push_back(automorphism_group(p6()));
  groups.push_back(automorphism_group(uniform(3, 6)));
  groups.push_back(automorphism_group(vamos()));
  groups.push_back(graph_automorphisms(two_k4e()));
  groups.push_back(PermGroup::trivial(4));
  for (const PermGroup& g : groups) {
    BaseSearch b = min_base(g);
    CHECK(b.size == naive_min_base(g));
    CHECK(g.stabilizer(b.witness).order() == 1);
    CHECK(popcount(b.witness) == b.size);
    CHECK(greedy_base(g).size >= b.size);
  }
}

TEST_CASE("fixing numbers from the paper examples") {
  CHECK(min_base(automorphism_group(fano())).size == 3);
  CHECK(min_base(automorphism_group(vamos())).size == 4);
  CHECK(min_base(automorphism_group(p6())).size == 4);
  for (auto [r, n] : {std::pair{1, 3}, {2, 4}, {2, 5}, {3, 6}, {4, 6}}) {
    CHECK(min_base(automorphism_group(uniform(r, n))).size == n - 1);
  }
}

TEST_CASE("clone classes: three methods agree") {
  for (const Matroid& m : {fano(), p6(), vamos(), uniform(2, 4),
                           cycle_matroid(theta_graph())}) {
    const std::vector<Mask> via_group = group_clone_classes(automorphism_group(m));
    const std::vector<Mask> direct = clone_classes(m);
    const std::vector<Mask> via_flats = clone_classes_via_cyclic_flats(m);
    CHECK(direct == via_group);
    CHECK(direct == via_flats);
  }
}

TEST_CASE("clone classes of specific matroids") {
  // vamos: pairs {e_i, f_i}
  std::vector<Mask> v = clone_classes(vamos());
  CHECK(v.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(v[i] == (bit(i) | bit(i + 4)));
  // p6: {a,b,c} and {d,e,f}
  std::vector<Mask> p = clone_classes(p6());
  CHECK(p == std::vector<Mask>{0b000111, 0b111000});
  // uniform: a single class
  CHECK(clone_classes(uniform(2, 5)) == std::vector<Mask>{0b11111});
  // fano: all singletons
  CHECK(clone_classes(fano()).size() == 7);
}

TEST_CASE("stabilizer chain along a witness") {
  const PermGroup g = automorphism_group(fano());
  FixReport r = analyze(fano());
  CHECK(r.fix == 3);
  CHECK(r.aut_order == 168);
  CHECK(r.chain.size() == 4);
  CHECK(r.chain.front() == 168);
  CHECK(r.chain.back() == 1);
  // each step divides the previous order
  for (std::size_t i = 1; i < r.chain.size(); ++i) {
    CHECK(r.chain[i - 1] % r.chain[i] == 0);
  }
  // recompute directly
  std::vector<int> seq;
  for (const auto& lbl : r.witness) seq.push_back(fano().ground().id_of(lbl));
  CHECK(stabilizer_chain(g, seq) == r.chain);
}

TEST_CASE("vamos chain matches the halving pattern") {
  FixReport r = analyze(vamos());
  CHECK(r.chain == std::vector<std::uint64_t>{64, 16, 4, 2, 1});
}

TEST_CASE("bounds_report arithmetic") {
  BoundsReport b = bounds_report(7, 3, 7, 168, 7);
  CHECK(b.n_falling_k == 210);  // 7*6*5
  CHECK(b.s_pow_k == 343);      // 7^3
  CHECK(b.two_pow_k == 8);
  CHECK(b.upper_falling);
  CHECK(b.upper_orbit);
  CHECK(b.lower_two);
  CHECK(b.clone_lower);
  CHECK(b.all_hold);
}

TEST_CASE("bounds hold across the catalog") {
  for (const Matroid& m : {fano(), vamos(), p6(), uniform(3, 6),
                           cycle_matroid(complete_graph(5))}) {
    CHECK(analyze(m).bounds.all_hold);
  }
}

TEST_CASE("analyze of a trivial group") {
  FixReport r = analyze(PermGroup::trivial(3), {"a", "b", "c"});
  CHECK(r.fix == 0);
  CHECK(r.witness.empty());
  CHECK(r.aut_order == 1);
  CHECK(r.chain == std::vector<std::uint64_t>{1});
  CHECK(r.orbits.size() == 3);
}

TEST_CASE("binary basis fixing check") {
  Matroid f = fano();
  const PermGroup aut = automorphism_group(f);
  for (Mask b : f.bases()) CHECK(binary_basis_fixing_check(f, b, aut));
  CHECK_THROWS_AS(binary_basis_fixing_check(f, 0b111, aut), Error);  // a line
}

TEST_CASE("graph analysis routes") {
  // small graph: generic engine
  GraphAnalysis small = analyze_graph(complete_graph(4), MatroidKind::Cycle);
  CHECK(small.engine == "generic");
  CHECK(small.report.fix == 2);  // floor(8/3)
  // large graph: edge action
  GraphAnalysis big = analyze_graph(complete_graph(6), MatroidKind::Cycle);
  CHECK(big.engine == "edge-action");
  CHECK(big.report.fix == 4);  // floor(12/3)
  // both: routes agree on a 3-connected graph
  GraphAnalysis both =
      analyze_graph(complete_graph(4), MatroidKind::Cycle, EngineMode::Both);
  CHECK(both.routes_agree);
  CHECK(both.generic_aut_order == both.edge_action_order);
  // wheel bicircular
  GraphAnalysis wb = analyze_graph(wheel(5), MatroidKind::Bicircular,
                                   EngineMode::Both);
  CHECK(wb.routes_agree);
  CHECK(wb.report.aut_order == 10);
  CHECK(wb.report.fix == 2);
}

TEST_CASE("edge action misses Whitney twists on K_{2,3}") {
  GraphAnalysis a = analyze_graph(complete_bipartite(2, 3), MatroidKind::Cycle,
                                  EngineMode::Both);
  CHECK_FALSE(a.routes_agree);
  CHECK(*a.generic_aut_order > *a.edge_action_order);
}
