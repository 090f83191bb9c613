#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "matroidfix/matroid.hpp"
#include "matroidfix/perm.hpp"

using namespace mfx;

TEST_CASE("ground set sorts labels and resolves ids") {
  GroundSet g({"c", "a", "b"});
  CHECK(g.size() == 3);
  CHECK(g.label(0) == "a");
  CHECK(g.label(2) == "c");
  CHECK(g.id_of("b") == 1);
  CHECK(g.contains("c"));
  CHECK_FALSE(g.contains("z"));
  CHECK(g.mask_of({"a", "c"}) == 0b101);
  CHECK(g.labels_of(0b110) == std::vector<std::string>{"b", "c"});
}

TEST_CASE("ground set rejects bad input") {
  CHECK_THROWS_AS(GroundSet({}), Error);
  CHECK_THROWS_AS(GroundSet({"a", "a"}), Error);
  CHECK_THROWS_AS(GroundSet(default_labels(23)), Error);
  GroundSet g({"a"});
  CHECK_THROWS_AS(g.id_of("b"), Error);
}

TEST_CASE("set family dedupes and orders by size then value") {
  SetFamily f = SetFamily::of(4, {0b1100, 0b0001, 0b1100, 0b0011});
  CHECK(f.sets == std::vector<Mask>{0b0001, 0b0011, 0b1100});
  CHECK(f.contains(0b1100));
  CHECK_FALSE(f.contains(0b0010));
}

TEST_CASE("binomial") {
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(22, 11) == 705432);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 6) == 0);
}

TEST_CASE("subset enumeration visits every k-subset once") {
  int count = 0;
  Mask seen = 0;
  for_each_subset_of_size(6, 3, [&](Mask m) {
    CHECK(popcount(m) == 3);
    ++count;
    seen |= m;
  });
  CHECK(count == 20);
  CHECK(seen == 0b111111);
}

TEST_CASE("from_bases validates the exchange axiom") {
  GroundSet g(default_labels(4));
  CHECK_NOTHROW(Matroid::from_bases(g, {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100}));
  // two disjoint pairs with no intermediate basis
  CHECK_THROWS_AS(Matroid::from_bases(g, {0b0011, 0b1100}), Error);
  CHECK_THROWS_AS(Matroid::from_bases(g, {0b0011, 0b0111}), Error);  // sizes differ
  CHECK_THROWS_AS(Matroid::from_bases(g, {}), Error);
}

TEST_CASE("rank independence and loops") {
  // rank-2 matroid on 4 elements where d is a loop
  GroundSet g(default_labels(4));
  Matroid m = Matroid::from_bases(g, {0b011, 0b101, 0b110});
  CHECK(m.rank() == 2);
  CHECK(m.is_independent(0b001));
  CHECK(m.is_independent(0));
  CHECK_FALSE(m.is_independent(0b1000));
  CHECK(m.is_loop(3));
  CHECK_FALSE(m.is_coloop(0));
  CHECK(m.rank_of(0b111) == 2);
  CHECK(m.rank_of(0b1000) == 0);
}

TEST_CASE("circuits are the minimal dependent sets") {
  Matroid m = Matroid::from_bases(GroundSet(default_labels(4)),
                                  {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  // U_{2,4}: circuits are the four 3-subsets
  const SetFamily c = m.circuits();
  CHECK(c.sets.size() == 4);
  for (Mask s : c.sets) {
    CHECK(popcount(s) == 3);
    CHECK_FALSE(m.is_independent(s));
    // every proper subset is independent
    for (Mask x = s; x != 0; x &= x - 1) {
      CHECK(m.is_independent(s & ~(x & (~x + 1))));
    }
  }
}

TEST_CASE("from_circuits reconstructs the basis family") {
  GroundSet g(default_labels(3));
  Matroid m = Matroid::from_circuits(g, SetFamily::of(3, {0b111}));
  CHECK(m.rank() == 2);
  CHECK(m.bases().size() == 3);
  CHECK(m.circuits().sets == std::vector<Mask>{0b111});
}

TEST_CASE("from_circuits rejects containment and empty circuits") {
  GroundSet g(default_labels(3));
  CHECK_THROWS_AS(Matroid::from_circuits(g, SetFamily{3, {0}}), Error);
  CHECK_THROWS_AS(Matroid::from_circuits(g, SetFamily{3, {0b011, 0b111}}), Error);
}

TEST_CASE("dual is an involution and ranks are complementary") {
  Matroid m = Matroid::from_bases(GroundSet(default_labels(4)),
                                  {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  Matroid d = m.dual();
  CHECK(d.rank() == m.size() - m.rank());
  CHECK(d.dual() == m);
}

TEST_CASE("deletion and contraction against hand-computed minors") {
  // U_{2,4} delete d -> U_{2,3}; contract d -> U_{1,3}
  Matroid m = Matroid::from_bases(GroundSet(default_labels(4)),
                                  {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  Matroid del = m.deleted("d");
  CHECK(del.size() == 3);
  CHECK(del.rank() == 2);
  CHECK(del.bases().size() == 3);
  Matroid con = m.contracted("d");
  CHECK(con.rank() == 1);
  CHECK(con.bases().size() == 3);
  CHECK_THROWS_AS(m.deleted("z"), Error);
}

TEST_CASE("deleting a coloop keeps the rest intact") {
  // a is a coloop: bases {a,b}, {a,c}
  Matroid m = Matroid::from_bases(GroundSet(default_labels(3)), {0b011, 0b101});
  Matroid del = m.deleted("a");
  CHECK(del.rank() == 1);
  CHECK(del.bases().size() == 2);
}

TEST_CASE("connectivity via circuit coverage") {
  Matroid u24 = Matroid::from_bases(GroundSet(default_labels(4)),
                                    {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(u24.is_connected());
  Matroid sum = direct_sum(
      u24, Matroid::from_bases(GroundSet({"x", "y", "z"}), {0b011, 0b101, 0b110}));
  CHECK_FALSE(sum.is_connected());
}

TEST_CASE("cyclic flats of a uniform matroid are the ends") {
  Matroid u24 = Matroid::from_bases(GroundSet(default_labels(4)),
                                    {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  CHECK(u24.cyclic_flats().sets == std::vector<Mask>{0, 0b1111});
}

TEST_CASE("direct sum multiplies bases and adds ranks") {
  Matroid a = Matroid::from_bases(GroundSet(default_labels(3)), {0b011, 0b101, 0b110});
  Matroid b = Matroid::from_bases(GroundSet({"x", "y"}), {0b01, 0b10});
  Matroid s = direct_sum(a, b);
  CHECK(s.rank() == a.rank() + b.rank());
  CHECK(s.bases().size() == a.bases().size() * b.bases().size());
  CHECK_THROWS_AS(direct_sum(a, a), Error);
}

TEST_CASE("free extension of a uniform matroid stays uniform") {
  Matroid u24 = Matroid::from_bases(GroundSet(default_labels(4)),
                                    {0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100});
  Matroid ext = free_extension(u24);
  CHECK(ext.size() == 5);
  CHECK(ext.rank() == 2);
  CHECK(is_uniform(ext));
  CHECK(ext.ground().contains("p"));
  CHECK_THROWS_AS(free_extension(u24, "a"), Error);
}

TEST_CASE("with_labels relabels consistently") {
  Matroid m = Matroid::from_bases(GroundSet(default_labels(3)), {0b011, 0b101, 0b110});
  Matroid r = m.with_labels({"z", "y", "x"});
  CHECK(r.ground().labels() == std::vector<std::string>{"x", "y", "z"});
  CHECK(r.bases().size() == 3);
  CHECK(r.rank() == 2);
}

TEST_CASE("permutation basics") {
  Perm p{{1, 2, 0}};
  CHECK(p(0) == 1);
  CHECK(p.apply(0b001) == 0b010);
  CHECK(Perm::compose(p, p.inverse()) == Perm::identity(3));
  CHECK(Perm::transposition(4, 1, 3).apply(0b0010) == 0b1000);
  CHECK_THROWS_AS(Perm({0, 0, 1}), Error);
}

TEST_CASE("closure generates the symmetric group from transpositions") {
  PermGroup s4 = PermGroup::closure(
      4, {Perm::transposition(4, 0, 1), Perm{{1, 2, 3, 0}}});
  CHECK(s4.order() == 24);
  CHECK(s4.contains(Perm{{3, 2, 1, 0}}));
  CHECK(s4.stabilizer(0b0001).order() == 6);
  CHECK(s4.orbits() == std::vector<Mask>{0b1111});
  CHECK(s4.max_orbit_size() == 4);
}

TEST_CASE("closure respects the cap") {
  CHECK_THROWS_AS(PermGroup::closure(
                      4, {Perm::transposition(4, 0, 1), Perm{{1, 2, 3, 0}}}, 10),
                  Error);
}

TEST_CASE("from_elements verifies group axioms") {
  std::vector<Perm> not_closed{Perm::identity(3), Perm{{1, 2, 0}}};
  CHECK_THROWS_AS(PermGroup::from_elements(3, not_closed, /*verify=*/true), Error);
  std::vector<Perm> z3{Perm::identity(3), Perm{{1, 2, 0}}, Perm{{2, 0, 1}}};
  CHECK(PermGroup::from_elements(3, z3, /*verify=*/true).order() == 3);
}

TEST_CASE("orbit partition of an intransitive group") {
  PermGroup g = PermGroup::closure(5, {Perm::transposition(5, 0, 1),
                                       Perm::transposition(5, 2, 3)});
  CHECK(g.orbits() == std::vector<Mask>{0b00011, 0b01100, 0b10000});
}
