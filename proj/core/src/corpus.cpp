#include "matroidfix/corpus.hpp"

#include <chrono>
#include <sstream>

#include "matroidfix/io.hpp"

namespace mfx {

namespace {

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// accumulates pass/fail plus a readable value trail
struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (detail.tellp() > 0) detail << "; ";
      detail << "FAILED: " << what;
    }
  }

  void note(const std::string& what) {
    if (detail.tellp() > 0) detail << "; ";
    detail << what;
  }

  void absorb(const TheoremReport& r) {
    expect(r.status == CheckStatus::Pass, r.id + " not PASS");
    note(r.id + ": " + r.detail);
  }
};

CriterionResult finish(int index, const std::string& name, Check& c, const Timer& t) {
  return CriterionResult{index, name, c.ok, c.detail.str(), t.ms()};
}

std::vector<std::pair<std::string, Matroid>> catalog_matroids() {
  std::vector<std::pair<std::string, Matroid>> out;
  out.emplace_back("fano", fano());
  out.emplace_back("pg32", pg32());
  out.emplace_back("vamos", vamos());
  out.emplace_back("p6", p6());
  out.emplace_back("u24", uniform(2, 4));
  out.emplace_back("u36", uniform(3, 6));
  out.emplace_back("m52", m_n_k(5, 2));
  out.emplace_back("m-k4", cycle_matroid(complete_graph(4)));
  out.emplace_back("b-k4", bicircular_matroid(complete_graph(4)));
  out.emplace_back("m-theta", cycle_matroid(theta_graph()));
  out.emplace_back("b-theta", bicircular_matroid(theta_graph()));
  out.emplace_back("b-w5", bicircular_matroid(wheel(5)));
  out.emplace_back("m-two_k4e", cycle_matroid(two_k4e()));
  out.emplace_back("b-two_k4e", bicircular_matroid(two_k4e()));
  return out;
}

std::string masks_to_text(const GroundSet& g, const std::vector<Mask>& sets) {
  std::string out;
  for (Mask s : sets) {
    out += "{";
    bool first = true;
    for (const std::string& l : g.labels_of(s)) {
      if (!first) out += ",";
      out += l;
      first = false;
    }
    out += "}";
  }
  return out;
}

CriterionResult criterion_fano(std::size_t cap) {
  Timer t;
  Check c;
  const FixReport r = analyze(fano(), cap);
  c.note("fix=" + std::to_string(r.fix) + " aut=" + std::to_string(r.aut_order) +
         " bounds=" + std::to_string(r.bounds.n_falling_k) + "/" +
         std::to_string(r.bounds.s_pow_k) + "/" + std::to_string(r.bounds.two_pow_k));
  c.expect(r.fix == 3, "fix != 3");
  c.expect(r.aut_order == 168, "|Aut| != 168");
  c.expect(r.bounds.n_falling_k == 210, "(n)_k != 210");
  c.expect(r.bounds.s_pow_k == 343, "s^k != 343");
  c.expect(r.bounds.two_pow_k == 8, "2^k != 8");
  return finish(1, "rank-3 binary 7-point geometry", c, t);
}

CriterionResult criterion_vamos(std::size_t cap) {
  Timer t;
  Check c;
  const Matroid m = vamos();
  const PermGroup g = automorphism_group(m, cap);
  const FixReport r = analyze(g, m.ground().labels());
  c.note("fix=" + std::to_string(r.fix) + " aut=" + std::to_string(r.aut_order));
  c.expect(r.fix == 4, "fix != 4");
  c.expect(r.aut_order == 64, "|Aut| != 64");
  const auto chain = stabilizer_chain(g, {0, 1, 2, 3});
  std::string chain_text;
  for (auto v : chain) chain_text += std::to_string(v) + " ";
  c.note("chain(a,b,c,d)= " + chain_text);
  c.expect(chain == std::vector<std::uint64_t>{64, 16, 4, 2, 1},
           "chain != 64,16,4,2,1");
  const auto clones = clone_classes(m);
  c.note("clones=" + masks_to_text(m.ground(), clones));
  std::vector<Mask> expected;
  for (int i = 0; i < 4; ++i) expected.push_back(bit(i) | bit(i + 4));
  c.expect(clones == expected, "clone classes are not the four opposite pairs");
  return finish(2, "rank-4 eight-point non-representable matroid", c, t);
}

CriterionResult criterion_p6(std::size_t cap) {
  Timer t;
  Check c;
  const Matroid m = p6();
  const FixReport r = analyze(m, cap);
  c.note("fix=" + std::to_string(r.fix) + " aut=" + std::to_string(r.aut_order));
  c.expect(r.fix == 4, "fix != 4");
  c.expect(r.aut_order == 36, "|Aut| != 36");
  const auto clones = clone_classes(m);
  c.note("clones=" + masks_to_text(m.ground(), clones));
  c.expect(clones == std::vector<Mask>{0b000111, 0b111000},
           "clone classes != {a,b,c},{d,e,f}");
  const TransversalPresentation pres = p6_presentation();
  const TransversalPresentation maximal = maximal_presentation(pres);
  c.expect(maximal.adjacency == pres.adjacency, "presentation not maximal");
  return finish(3, "six-point rank-3 transversal matroid", c, t);
}

CriterionResult criterion_uniform(std::size_t cap) {
  Timer t;
  Check c;
  const std::vector<std::pair<int, int>> cases = {
      {1, 3}, {2, 4}, {2, 5}, {3, 6}, {4, 6}};
  for (auto [r, n] : cases) {
    const int fix = analyze(uniform(r, n), cap).fix;
    c.note("U(" + std::to_string(r) + "," + std::to_string(n) +
           ") fix=" + std::to_string(fix));
    c.expect(fix == n - 1, "fix(U_{" + std::to_string(r) + "," + std::to_string(n) +
                               "}) != " + std::to_string(n - 1));
  }
  return finish(4, "uniform matroids", c, t);
}

CriterionResult criterion_theta(std::size_t cap) {
  Timer t;
  Check c;
  const Graph g = theta_graph();
  const auto aut_g = graph_automorphisms(g, cap).order();
  const GraphAnalysis am = analyze_graph(g, MatroidKind::Cycle, EngineMode::Generic, cap);
  const GraphAnalysis ab =
      analyze_graph(g, MatroidKind::Bicircular, EngineMode::Generic, cap);
  c.note("autG=" + std::to_string(aut_g) + " fixM=" + std::to_string(am.report.fix) +
         " autM=" + std::to_string(am.report.aut_order) +
         " fixB=" + std::to_string(ab.report.fix) +
         " autB=" + std::to_string(ab.report.aut_order));
  c.expect(aut_g == 4, "|Aut(G)| != 4");
  c.expect(am.report.fix == 4, "fix(M) != 4");
  c.expect(am.report.aut_order == 72, "|Aut(M)| != 72");
  c.expect(ab.report.fix == 6, "fix(B) != 6");
  c.expect(ab.report.aut_order == 5040, "|Aut(B)| != 5040");
  return finish(5, "theta graph", c, t);
}

CriterionResult criterion_wheels(std::size_t cap) {
  Timer t;
  Check c;
  for (int n = 4; n <= 6; ++n) c.absorb(check_wheels(n, cap));
  return finish(6, "wheel bicircular matroids", c, t);
}

CriterionResult criterion_complete(std::size_t cap) {
  Timer t;
  Check c;
  for (int n = 4; n <= 7; ++n) c.absorb(check_complete_graphs(n, cap));
  return finish(7, "complete graphs", c, t);
}

CriterionResult criterion_bipartite(std::size_t cap) {
  Timer t;
  Check c;
  const std::vector<std::pair<int, int>> cases = {
      {2, 3}, {2, 4}, {3, 4}, {3, 3}, {2, 2}};
  for (auto [m, n] : cases) c.absorb(check_complete_bipartite(m, n, cap));
  return finish(8, "complete bipartite graphs", c, t);
}

CriterionResult criterion_two_k4e(std::size_t cap) {
  Timer t;
  Check c;
  const Graph g = two_k4e();
  const auto aut_g = graph_automorphisms(g, cap).order();
  const GraphAnalysis am = analyze_graph(g, MatroidKind::Cycle, EngineMode::Generic, cap);
  const GraphAnalysis ab =
      analyze_graph(g, MatroidKind::Bicircular, EngineMode::Generic, cap);
  const GraphFix gf = graph_fixing_number(g);
  c.note("autG=" + std::to_string(aut_g) + " autB=" + std::to_string(ab.report.aut_order) +
         " autM=" + std::to_string(am.report.aut_order) +
         " fixM=" + std::to_string(am.report.fix) +
         " fixB=" + std::to_string(ab.report.fix) +
         " graph fix=" + std::to_string(gf.fix));
  c.expect(aut_g == 16, "|Aut(G)| != 16");
  c.expect(ab.report.aut_order == 16, "|Aut(B)| != 16");
  c.expect(am.report.aut_order == 128, "|Aut(M)| != 128");
  c.expect(am.report.fix == 2, "fix(M) != 2");
  c.expect(ab.report.fix == 2, "fix(B) != 2");
  c.expect(gf.fix == 3, "graph fixing number != 3");
  return finish(9, "two triangles sharing a vertex pair", c, t);
}

CriterionResult criterion_mnk(std::size_t) {
  Timer t;
  Check c;
  c.absorb(check_mnk_uniformity(kMaxGroundSize));
  return finish(10, "subset-family transversal uniformity", c, t);
}

CriterionResult criterion_binary(std::size_t cap) {
  Timer t;
  Check c;
  for (const auto& [name, m] : {std::pair{"fano", fano()}, {"pg32", pg32()}}) {
    const PermGroup aut = automorphism_group(m, cap);
    bool all_trivial = true;
    for (Mask b : m.bases()) {
      if (!binary_basis_fixing_check(m, b, aut)) all_trivial = false;
    }
    c.note(std::string(name) + ": " + std::to_string(m.bases().size()) +
           " bases, all stabilizers trivial: " + (all_trivial ? "yes" : "no"));
    c.expect(all_trivial, std::string(name) + " has a basis with nontrivial stabilizer");
    if (std::string(name) == "pg32") {
      const FixReport r = analyze(aut, m.ground().labels());
      c.note("pg32 fix=" + std::to_string(r.fix) +
             " aut=" + std::to_string(r.aut_order));
      c.expect(r.fix == 4, "fix(pg32) != 4");
    }
  }
  return finish(11, "binary matroid basis stabilizers", c, t);
}

CriterionResult criterion_solids(std::size_t cap) {
  Timer t;
  Check c;
  std::vector<int> fixes;
  for (const auto& [name, g] :
       {std::pair{"icosahedron", icosahedron()}, {"dodecahedron", dodecahedron()}}) {
    const auto aut_g = graph_automorphisms(g, cap).order();
    const GraphAnalysis a =
        analyze_graph(g, MatroidKind::Cycle, EngineMode::EdgeAction, cap);
    c.note(std::string(name) + ": autG=" + std::to_string(aut_g) +
           " fixM=" + std::to_string(a.report.fix));
    c.expect(aut_g == 120, std::string(name) + ": |Aut(G)| != 120");
    c.expect(a.report.fix == 2, std::string(name) + ": fix(M) != 2");
    fixes.push_back(a.report.fix);
  }
  c.expect(fixes.size() == 2 && fixes[0] == fixes[1],
           "dual planar pair disagrees");
  return finish(12, "icosahedron and dodecahedron", c, t);
}

CriterionResult criterion_properties(std::size_t cap) {
  Timer t;
  Check c;
  const auto catalog = catalog_matroids();

  // fixing number is a duality invariant
  for (const auto& [name, m] : catalog) {
    const int a = analyze(m, cap).fix;
    const int b = analyze(m.dual(), cap).fix;
    c.expect(a == b, name + ": fix(M) = " + std::to_string(a) +
                         " != fix(M*) = " + std::to_string(b));
  }
  c.note("duality checked on " + std::to_string(catalog.size()) + " matroids");

  // additivity across direct sums of non-isomorphic parts
  {
    std::vector<std::pair<Matroid, Matroid>> pairs;
    pairs.emplace_back(fano(), uniform(2, 4).with_labels({"w", "x", "y", "z"}));
    pairs.emplace_back(p6(), uniform(1, 3).with_labels({"x", "y", "z"}));
    pairs.emplace_back(cycle_matroid(complete_graph(4)), vamos());
    int idx = 0;
    for (const auto& [a, b] : pairs) {
      const int fa = analyze(a, cap).fix;
      const int fb = analyze(b, cap).fix;
      const int fs = analyze(direct_sum(a, b), cap).fix;
      c.expect(fs == fa + fb, "direct sum pair " + std::to_string(idx) +
                                  ": " + std::to_string(fs) + " != " +
                                  std::to_string(fa) + " + " + std::to_string(fb));
      ++idx;
    }
    c.note("direct-sum additivity on " + std::to_string(pairs.size()) + " pairs");
  }

  // the three clone computations agree
  for (const auto& [name, m] : catalog) {
    const auto direct = clone_classes(m);
    const auto from_group = group_clone_classes(automorphism_group(m, cap));
    c.expect(direct == from_group, name + ": transposition vs group clones differ");
    if (m.size() <= 16) {
      c.expect(direct == clone_classes_via_cyclic_flats(m),
               name + ": cyclic flat clones differ");
    }
  }
  c.note("clone methods agree");

  // pruned search vs brute force on the small corpus
  for (const auto& [name, m] : catalog) {
    if (m.size() > 8) continue;
    const PermGroup g = automorphism_group(m, cap);
    const int pruned = min_base(g).size;
    const int brute = naive_min_base(g);
    c.expect(pruned == brute, name + ": pruned " + std::to_string(pruned) +
                                  " != brute " + std::to_string(brute));
  }
  c.note("brute-force oracle agrees on all matroids with n <= 8");

  // group-order bounds hold on every report
  for (const auto& [name, m] : catalog) {
    c.expect(analyze(m, cap).bounds.all_hold, name + ": bounds violated");
  }
  c.note("order bounds hold on every report");

  // equal fixing numbers for both matroids of well-connected graphs
  for (const auto& [name, g] :
       {std::pair{"k5", complete_graph(5)}, {"k6", complete_graph(6)},
        {"k33", complete_bipartite(3, 3)}, {"wheel4", wheel(4)},
        {"wheel5", wheel(5)}, {"wheel6", wheel(6)}}) {
    const TheoremReport r = check_samefix(g, cap);
    c.expect(r.status == CheckStatus::Pass, std::string(name) + ": " + r.detail);
  }
  c.note("cycle/bicircular fixing numbers agree on the 3-connected corpus");

  return finish(13, "cross-cutting properties", c, t);
}

}  // namespace

int naive_min_base(const PermGroup& g) {
  const int n = g.degree();
  for (int size = 0; size <= n; ++size) {
    bool found = false;
    for_each_subset_of_size(n, size, [&](Mask s) {
      if (!found && g.stabilizer(s).is_trivial()) found = true;
    });
    if (found) return size;
  }
  return n;
}

std::vector<CriterionResult> run_corpus(std::size_t cap) {
  std::vector<CriterionResult> out;
  out.push_back(criterion_fano(cap));
  out.push_back(criterion_vamos(cap));
  out.push_back(criterion_p6(cap));
  out.push_back(criterion_uniform(cap));
  out.push_back(criterion_theta(cap));
  out.push_back(criterion_wheels(cap));
  out.push_back(criterion_complete(cap));
  out.push_back(criterion_bipartite(cap));
  out.push_back(criterion_two_k4e(cap));
  out.push_back(criterion_mnk(cap));
  out.push_back(criterion_binary(cap));
  out.push_back(criterion_solids(cap));
  out.push_back(criterion_properties(cap));
  return out;
}

}  // namespace mfx
