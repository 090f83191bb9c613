#include "matroidfix/graph.hpp"

#include <algorithm>
#include <array>

#include "matroidfix/symmetry.hpp"

namespace mfx {

namespace {

// union-find over <= 20 vertices
struct Dsu {
  std::array<std::int8_t, 20> parent;
  void init(int n) {
    for (int i = 0; i < n; ++i) parent[i] = static_cast<std::int8_t>(i);
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // returns false if x and y were already joined
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[y] = static_cast<std::int8_t>(x);
    return true;
  }
};

}  // namespace

Graph Graph::create(std::vector<std::string> vertices, std::vector<EdgeSpec> edges) {
  Graph g;
  if (vertices.empty()) fail(Errc::TooSmall, "graph needs at least one vertex");
  if (vertices.size() > 20) fail(Errc::TooLarge, "graphs capped at 20 vertices");
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      fail(Errc::LabelCollision, "duplicate vertex label");
    }
  }
  g.vertex_labels_ = std::move(vertices);
  g.adj_.assign(g.vertex_labels_.size(), 0);
  for (auto& e : edges) {
    const int u = g.vertex_id(e.u);
    const int v = g.vertex_id(e.v);
    if (u == v) fail(Errc::BadParams, "loop edge at vertex '" + e.u + "'");
    if (g.adjacent(u, v)) fail(Errc::BadParams, "parallel edge " + e.u + "-" + e.v);
    std::string label = e.label.empty() ? e.u + "-" + e.v : e.label;
    g.edges_.push_back(Edge{u, v, std::move(label)});
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  std::sort(g.edges_.begin(), g.edges_.end(),
            [](const Edge& a, const Edge& b) { return a.label < b.label; });
  auto dup = std::adjacent_find(
      g.edges_.begin(), g.edges_.end(),
      [](const Edge& a, const Edge& b) { return a.label == b.label; });
  if (dup != g.edges_.end()) {
    fail(Errc::LabelCollision, "duplicate edge label '" + dup->label + "'");
  }
  return g;
}

int Graph::vertex_id(const std::string& label) const {
  for (int i = 0; i < vertex_count(); ++i) {
    if (vertex_labels_[i] == label) return i;
  }
  fail(Errc::UnknownElement, "unknown vertex '" + label + "'");
}

std::pair<int, int> Graph::edge_endpoints(int edge_id) const {
  const Edge& e = edges_[edge_id];
  return {e.u, e.v};
}

const std::string& Graph::edge_label(int edge_id) const { return edges_[edge_id].label; }

int Graph::edge_between(int u, int v) const {
  for (int i = 0; i < edge_count(); ++i) {
    if ((edges_[i].u == u && edges_[i].v == v) || (edges_[i].u == v && edges_[i].v == u)) {
      return i;
    }
  }
  return -1;
}

GroundSet Graph::edge_ground() const {
  std::vector<std::string> labels;
  labels.reserve(edges_.size());
  for (const Edge& e : edges_) labels.push_back(e.label);
  return GroundSet(std::move(labels));
}

bool Graph::adjacent(int u, int v) const { return has(adj_[u], v); }

int Graph::degree(int v) const { return popcount(adj_[v]); }

int Graph::component_count() const {
  Dsu dsu;
  dsu.init(vertex_count());
  for (const Edge& e : edges_) dsu.unite(e.u, e.v);
  int c = 0;
  for (int i = 0; i < vertex_count(); ++i) {
    if (dsu.find(i) == i) ++c;
  }
  return c;
}

bool Graph::is_connected() const { return component_count() == 1; }

Matroid cycle_matroid(const Graph& g) {
  if (g.edge_count() > kMaxGroundSize) {
    fail(Errc::TooManyEdges, "edge set exceeds " + std::to_string(kMaxGroundSize));
  }
  if (g.edge_count() == 0) fail(Errc::TooSmall, "graph has no edges");
  const int m = g.edge_count();
  const int rank = g.vertex_count() - g.component_count();
  std::vector<Mask> bases;
  if (rank == 0) {
    bases.push_back(0);
  } else {
    // spanning forests by depth-first edge selection with a rollback-free
    // union-find copy per level
    auto dfs = [&](auto&& self, int next, Mask cur, int chosen, const Dsu& dsu) -> void {
      if (chosen == rank) {
        bases.push_back(cur);
        return;
      }
      if (chosen + (m - next) < rank) return;
      for (int e = next; e < m; ++e) {
        auto [u, v] = g.edge_endpoints(e);
        Dsu copy = dsu;
        if (!copy.unite(u, v)) continue;
        self(self, e + 1, cur | bit(e), chosen + 1, copy);
      }
    };
    Dsu dsu;
    dsu.init(g.vertex_count());
    dfs(dfs, 0, 0, 0, dsu);
  }
  return Matroid::from_bases(g.edge_ground(), std::move(bases), /*validate=*/false);
}

namespace {

// union-find tracking whether each component already contains a cycle
struct PseudoDsu {
  Dsu dsu;
  std::uint32_t cyclic = 0;  // bit per root
  void init(int n) {
    dsu.init(n);
    cyclic = 0;
  }
  // add edge; false if the result is no longer a pseudoforest
  bool add(int u, int v) {
    const int ru = dsu.find(u);
    const int rv = dsu.find(v);
    if (ru == rv) {
      if (has(cyclic, ru)) return false;
      cyclic |= bit(ru);
      return true;
    }
    if (has(cyclic, ru) && has(cyclic, rv)) return false;
    dsu.unite(ru, rv);
    const int r = dsu.find(ru);
    if (has(cyclic, ru) || has(cyclic, rv)) {
      cyclic &= ~(bit(ru) | bit(rv));
      cyclic |= bit(r);
    }
    return true;
  }
};

}  // namespace

Matroid bicircular_matroid(const Graph& g) {
  if (g.edge_count() > kMaxGroundSize) {
    fail(Errc::TooManyEdges, "edge set exceeds " + std::to_string(kMaxGroundSize));
  }
  if (g.edge_count() == 0) fail(Errc::TooSmall, "graph has no edges");
  const int m = g.edge_count();
  // per component: |V| edges fit if the component has a cycle, |V|-1 otherwise
  int rank = 0;
  {
    // a component of G supports |V_c| independent edges iff it has a cycle,
    // i.e. iff it is not a tree
    Dsu dsu;
    dsu.init(g.vertex_count());
    std::vector<int> edge_cnt(g.vertex_count(), 0);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edge_endpoints(e);
      dsu.unite(u, v);
    }
    std::vector<int> vert_cnt(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) ++vert_cnt[dsu.find(v)];
    for (int e = 0; e < m; ++e) ++edge_cnt[dsu.find(g.edge_endpoints(e).first)];
    for (int r = 0; r < g.vertex_count(); ++r) {
      if (dsu.find(r) != r) continue;
      if (edge_cnt[r] == 0) continue;  // isolated vertices carry no elements
      rank += (edge_cnt[r] >= vert_cnt[r]) ? vert_cnt[r] : vert_cnt[r] - 1;
    }
    rank = std::min(rank, m);
  }
  std::vector<Mask> bases;
  auto dfs = [&](auto&& self, int next, Mask cur, int chosen, const PseudoDsu& pd) -> void {
    if (chosen == rank) {
      bases.push_back(cur);
      return;
    }
    if (chosen + (m - next) < rank) return;
    for (int e = next; e < m; ++e) {
      auto [u, v] = g.edge_endpoints(e);
      PseudoDsu copy = pd;
      if (!copy.add(u, v)) continue;
      self(self, e + 1, cur | bit(e), chosen + 1, copy);
    }
  };
  PseudoDsu pd;
  pd.init(g.vertex_count());
  dfs(dfs, 0, 0, 0, pd);
  return Matroid::from_bases(g.edge_ground(), std::move(bases), /*validate=*/false);
}

PermGroup graph_automorphisms(const Graph& g, std::size_t cap) {
  const int n = g.vertex_count();
  // color refinement seeded by degree, refined by neighbor color multisets
  std::vector<int> color(n, 0);
  int classes = 1;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      for (int u = 0; u < n; ++u) {
        if (g.adjacent(v, u)) key.push_back(color[u]);
      }
      std::sort(key.begin() + 1, key.end());
      keys[v] = {std::move(key), v};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    if (c + 1 == classes) {
      color = std::move(next);
      break;
    }
    classes = c + 1;
    color = std::move(next);
  }

  std::vector<Perm> found;
  std::vector<std::uint8_t> img(n);
  std::uint32_t used = 0;
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == n) {
      found.push_back(Perm(std::vector<std::uint8_t>(img)));
      if (found.size() > cap) {
        fail(Errc::CapExceeded, "automorphism cap exceeded (found at least " +
                                    std::to_string(found.size()) + ")");
      }
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (has(used, w) || color[w] != color[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (g.adjacent(v, u) != g.adjacent(w, img[u])) ok = false;
      }
      if (!ok) continue;
      img[v] = static_cast<std::uint8_t>(w);
      used |= bit(w);
      self(self, v + 1);
      used &= ~bit(w);
    }
  };
  dfs(dfs, 0);
  return PermGroup::from_elements(n, std::move(found), /*verify=*/false);
}

EdgeAction edge_action(const Graph& g, const PermGroup& vertex_group) {
  if (vertex_group.degree() != g.vertex_count()) {
    fail(Errc::NotAGroup, "vertex group degree does not match graph");
  }
  const int m = g.edge_count();
  std::vector<Perm> out;
  out.reserve(vertex_group.order());
  for (const Perm& p : vertex_group.elements()) {
    std::vector<std::uint8_t> img(m);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edge_endpoints(e);
      const int t = g.edge_between(p(u), p(v));
      if (t < 0) fail(Errc::NotAGroup, "vertex permutation is not a graph automorphism");
      img[e] = static_cast<std::uint8_t>(t);
    }
    out.push_back(Perm(std::move(img)));
  }
  const std::size_t before = out.size();
  PermGroup eg = PermGroup::from_elements(m, std::move(out), /*verify=*/false);
  const bool injective = eg.order() == before;
  return EdgeAction{std::move(eg), injective};
}

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) fail(Errc::BadParams, "k must be >= 1");
  const int n = g.vertex_count();
  if (n <= k) return false;
  for (int removed = 0; removed < k; ++removed) {
    bool disconnects = false;
    for_each_subset_of_size(n, removed, [&](Mask cut) {
      if (disconnects) return;
      Dsu dsu;
      dsu.init(n);
      for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge_endpoints(e);
        if (!has(cut, u) && !has(cut, v)) dsu.unite(u, v);
      }
      int roots = 0;
      for (int v = 0; v < n; ++v) {
        if (!has(cut, v) && dsu.find(v) == v) ++roots;
      }
      if (roots != 1) disconnects = true;
    });
    if (disconnects) return false;
  }
  return true;
}

GraphFix graph_fixing_number(const Graph& g) {
  const PermGroup aut = graph_automorphisms(g);
  const BaseSearch b = min_base(aut);
  GraphFix out;
  out.fix = b.size;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (has(b.witness, v)) out.witness.push_back(g.vertex_labels()[v]);
  }
  return out;
}

int min_degree(const Graph& g) {
  int best = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) best = std::min(best, g.degree(v));
  return best;
}

bool is_cycle_graph(const Graph& g) {
  if (!g.is_connected() || g.vertex_count() < 3) return false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

std::vector<Mask> minimal_edge_cuts(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (!g.is_connected()) fail(Errc::BadParams, "bond enumeration expects a connected graph");
  std::vector<Mask> cuts;
  // bonds of a connected graph: cuts (S, V-S) with both sides connected
  auto side_connected = [&](Mask side) {
    if (side == 0) return false;
    Dsu dsu;
    dsu.init(n);
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edge_endpoints(e);
      if (has(side, u) && has(side, v)) dsu.unite(u, v);
    }
    int roots = 0;
    for (int v = 0; v < n; ++v) {
      if (has(side, v) && dsu.find(v) == v) ++roots;
    }
    return roots == 1;
  };
  const Mask all = bit(n) - 1;
  for (Mask s = 1; s < all; ++s) {
    if (!has(s, 0)) continue;  // fix vertex 0 on one side to halve the work
    if (!side_connected(s) || !side_connected(all & ~s)) continue;
    Mask cut = 0;
    for (int e = 0; e < m; ++e) {
      auto [u, v] = g.edge_endpoints(e);
      if (has(s, u) != has(s, v)) cut |= bit(e);
    }
    if (cut != 0) cuts.push_back(cut);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  return cuts;
}

std::vector<Mask> bicircular_cocircuits_direct(const Graph& g) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 16) fail(Errc::TooLarge, "direct cocircuit enumeration limited to 16 edges");
  // exactly one tree component in the spanning subgraph E - C*
  auto one_tree_component = [&](Mask removed) {
    Dsu dsu;
    dsu.init(n);
    std::vector<int> edge_cnt(n, 0);
    for (int e = 0; e < m; ++e) {
      if (has(removed, e)) continue;
      auto [u, v] = g.edge_endpoints(e);
      dsu.unite(u, v);
    }
    for (int e = 0; e < m; ++e) {
      if (has(removed, e)) continue;
      ++edge_cnt[dsu.find(g.edge_endpoints(e).first)];
    }
    std::vector<int> vert_cnt(n, 0);
    for (int v = 0; v < n; ++v) ++vert_cnt[dsu.find(v)];
    int trees = 0;
    for (int r = 0; r < n; ++r) {
      if (dsu.find(r) != r) continue;
      if (edge_cnt[r] == vert_cnt[r] - 1) ++trees;  // isolated vertices count
    }
    return trees == 1;
  };
  std::vector<Mask> with_property;
  const Mask all = bit(m) - 1;
  for (Mask c = 1; c <= all; ++c) {
    if (one_tree_component(c)) with_property.push_back(c);
  }
  std::vector<Mask> minimal;
  for (Mask c : with_property) {
    bool is_min = true;
    for (Mask d : with_property) {
      if (d != c && (d & c) == d) {
        is_min = false;
        break;
      }
    }
    if (is_min) minimal.push_back(c);
  }
  return minimal;
}

}  // namespace mfx
