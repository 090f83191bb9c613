#include "matroidfix/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

namespace mfx {

namespace {

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return a * b;
}

// Iterated color refinement over one or two set families: an element's key is
// its current color together with, for each set through it, the set's sorted
// member colors. Stable partition distinguishes elements no automorphism can
// exchange.
std::vector<int> refine_colors(int n, const std::vector<std::vector<Mask>>& families) {
  std::vector<int> color(n, 0);
  int classes = 1;
  for (;;) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int e = 0; e < n; ++e) {
      std::vector<int> key{color[e]};
      for (std::size_t f = 0; f < families.size(); ++f) {
        std::vector<std::vector<int>> sigs;
        for (Mask s : families[f]) {
          if (!has(s, e)) continue;
          std::vector<int> sig{static_cast<int>(f)};
          for (Mask rest = s; rest != 0; rest &= rest - 1) {
            sig.push_back(color[std::countr_zero(rest)]);
          }
          std::sort(sig.begin() + 1, sig.end());
          sigs.push_back(std::move(sig));
        }
        std::sort(sigs.begin(), sigs.end());
        for (auto& sig : sigs) {
          key.insert(key.end(), sig.begin(), sig.end());
          key.push_back(-1);
        }
      }
      keys[e] = {std::move(key), e};
    }
    auto sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(n);
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++c;
      next[sorted[i].second] = c;
    }
    const int new_classes = c + 1;
    color = std::move(next);
    if (new_classes == classes) break;
    classes = new_classes;
  }
  return color;
}

}  // namespace

bool is_automorphism(const Matroid& m, const Perm& p) {
  if (p.degree() != m.size()) fail(Errc::DegreeMismatch, "permutation degree mismatch");
  for (Mask b : m.bases()) {
    if (!m.is_basis(p.apply(b))) return false;
  }
  return true;
}

PermGroup automorphism_group(const Matroid& m, std::size_t cap) {
  const int n = m.size();
  std::vector<std::vector<Mask>> families;
  families.push_back(m.circuits().sets);
  if (n <= 16) families.push_back(m.cocircuits().sets);

  const std::vector<int> color = refine_colors(n, families);

  // all-singleton partition: only the identity survives
  bool all_singletons = true;
  {
    std::vector<int> count(n, 0);
    for (int e = 0; e < n; ++e) ++count[color[e]];
    for (int e = 0; e < n; ++e) {
      if (count[color[e]] > 1) {
        all_singletons = false;
        break;
      }
    }
  }
  if (all_singletons) return PermGroup::trivial(n);

  // flatten the pruning families, with per-element incidence lists
  std::vector<Mask> prune_sets;
  for (const auto& fam : families) {
    prune_sets.insert(prune_sets.end(), fam.begin(), fam.end());
  }
  std::vector<std::vector<int>> through(n);
  for (int i = 0; i < static_cast<int>(prune_sets.size()); ++i) {
    for (Mask rest = prune_sets[i]; rest != 0; rest &= rest - 1) {
      through[std::countr_zero(rest)].push_back(i);
    }
  }
  std::vector<SetFamily> prune_lookup;
  for (const auto& fam : families) prune_lookup.push_back(SetFamily::of(n, fam));
  // family index per flattened set
  std::vector<int> fam_of;
  for (std::size_t f = 0; f < families.size(); ++f) {
    fam_of.insert(fam_of.end(), families[f].size(), static_cast<int>(f));
  }

  // order elements: small color classes first (fail fast)
  std::vector<int> class_size(n, 0);
  for (int e = 0; e < n; ++e) ++class_size[color[e]];
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (class_size[color[a]] != class_size[color[b]]) {
      return class_size[color[a]] < class_size[color[b]];
    }
    return a < b;
  });
  std::vector<int> mapped_count(prune_sets.size(), 0);
  std::vector<std::uint8_t> img(n);
  std::uint32_t used = 0;
  std::vector<Perm> found;

  auto dfs = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      Perm p{std::vector<std::uint8_t>(img)};
      if (is_automorphism(m, p)) {
        found.push_back(std::move(p));
        if (found.size() > cap) {
          fail(Errc::CapExceeded, "automorphism cap exceeded (found at least " +
                                      std::to_string(found.size()) + ")");
        }
      }
      return;
    }
    const int e = order[depth];
    for (int t = 0; t < n; ++t) {
      if (has(used, t) || color[t] != color[e]) continue;
      img[e] = static_cast<std::uint8_t>(t);
      used |= bit(t);
      bool ok = true;
      for (int si : through[e]) {
        ++mapped_count[si];
        if (ok && mapped_count[si] == popcount(prune_sets[si])) {
          // a fully mapped circuit (cocircuit) must land on one
          Mask image = 0;
          for (Mask rest = prune_sets[si]; rest != 0; rest &= rest - 1) {
            image |= bit(img[std::countr_zero(rest)]);
          }
          if (!prune_lookup[fam_of[si]].contains(image)) ok = false;
        }
      }
      if (ok) self(self, depth + 1);
      for (int si : through[e]) --mapped_count[si];
      used &= ~bit(t);
    }
  };
  dfs(dfs, 0);
  return PermGroup::from_elements(n, std::move(found), /*verify=*/false);
}

std::vector<std::uint64_t> stabilizer_chain(const PermGroup& g,
                                            const std::vector<int>& seq) {
  std::vector<std::uint64_t> orders{g.order()};
  PermGroup cur = g;
  Mask fixed = 0;
  for (int e : seq) {
    if (e < 0 || e >= g.degree()) fail(Errc::UnknownElement, "chain element out of range");
    fixed |= bit(e);
    cur = cur.stabilizer(fixed);
    orders.push_back(cur.order());
  }
  return orders;
}

BaseSearch greedy_base(const PermGroup& g) {
  BaseSearch out;
  PermGroup cur = g;
  Mask fixed = 0;
  while (!cur.is_trivial()) {
    // largest orbit; ties by smallest member
    Mask best_orbit = 0;
    for (Mask o : cur.orbits()) {
      if (popcount(o) > popcount(best_orbit)) best_orbit = o;
    }
    const int pick = std::countr_zero(best_orbit);
    fixed |= bit(pick);
    cur = cur.stabilizer(fixed);
    ++out.size;
  }
  out.witness = fixed;
  return out;
}

namespace {

int log_orbit_lower_bound(const PermGroup& g) {
  // |G| <= s^k with s the maximum orbit size, so k >= log_s |G|
  if (g.is_trivial()) return 0;
  const int s = g.max_orbit_size();
  if (s < 2) return 1;  // nontrivial group must move something; defensive
  const double k = std::log(static_cast<double>(g.order())) / std::log(static_cast<double>(s));
  return std::max(1, static_cast<int>(std::ceil(k - 1e-9)));
}

}  // namespace

BaseSearch min_base(const PermGroup& g) {
  if (g.is_trivial()) return BaseSearch{0, 0};
  const BaseSearch greedy = greedy_base(g);
  int best = greedy.size;
  Mask best_witness = greedy.witness;

  // global lower bound from transpositions (clone classes)
  int global_lower = 0;
  {
    const auto classes = group_clone_classes(g);
    global_lower = g.degree() - static_cast<int>(classes.size());
  }
  global_lower = std::max(global_lower, log_orbit_lower_bound(g));

  // exact depth-first search over orbit representatives: fixing x or any
  // element in its orbit under the current stabilizer gives conjugate
  // subgroups, so one representative per orbit suffices.
  auto dfs = [&](auto&& self, const PermGroup& h, Mask fixed, int depth) -> void {
    if (h.is_trivial()) {
      if (depth < best) {
        best = depth;
        best_witness = fixed;
      }
      return;
    }
    if (depth + log_orbit_lower_bound(h) >= best) return;
    for (Mask o : h.orbits()) {
      if (popcount(o) < 2) continue;  // fixing a fixed point changes nothing
      const int rep = std::countr_zero(o);
      self(self, h.stabilizer(bit(rep)), fixed | bit(rep), depth + 1);
    }
  };
  if (global_lower < best) dfs(dfs, g, 0, 0);
  return BaseSearch{best, best_witness};
}

std::vector<Mask> group_clone_classes(const PermGroup& g) {
  const int n = g.degree();
  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (g.contains(Perm::transposition(n, i, j))) {
        parent[find(j)] = find(i);
      }
    }
  }
  std::map<int, Mask> classes;
  for (int i = 0; i < n; ++i) classes[find(i)] |= bit(i);
  std::vector<Mask> out;
  for (auto& [root, m] : classes) out.push_back(m);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return out;
}

std::vector<Mask> clone_classes(const Matroid& m) {
  const int n = m.size();
  std::vector<std::vector<bool>> clone(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i) {
    clone[i][i] = true;
    for (int j = i + 1; j < n; ++j) {
      if (is_automorphism(m, Perm::transposition(n, i, j))) {
        clone[i][j] = clone[j][i] = true;
      }
    }
  }
  // the paper's relation is an equivalence; a violation is an engine bug
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (clone[i][j] && clone[j][k] && !clone[i][k]) {
          fail(Errc::NotTransitive, "clone relation is not transitive");
        }
      }
    }
  }
  std::vector<Mask> out;
  Mask seen = 0;
  for (int i = 0; i < n; ++i) {
    if (has(seen, i)) continue;
    Mask cls = 0;
    for (int j = 0; j < n; ++j) {
      if (clone[i][j]) cls |= bit(j);
    }
    seen |= cls;
    out.push_back(cls);
  }
  return out;
}

std::vector<Mask> clone_classes_via_cyclic_flats(const Matroid& m) {
  const int n = m.size();
  if (n > 16) fail(Errc::TooLarge, "cyclic flat clone computation limited to 16 elements");
  const SetFamily flats = m.cyclic_flats();
  // fingerprint: which cyclic flats contain the element
  std::vector<std::vector<int>> fp(n);
  for (int i = 0; i < static_cast<int>(flats.sets.size()); ++i) {
    for (Mask rest = flats.sets[i]; rest != 0; rest &= rest - 1) {
      fp[std::countr_zero(rest)].push_back(i);
    }
  }
  std::vector<Mask> out;
  Mask seen = 0;
  for (int i = 0; i < n; ++i) {
    if (has(seen, i)) continue;
    Mask cls = bit(i);
    for (int j = i + 1; j < n; ++j) {
      if (fp[j] == fp[i]) cls |= bit(j);
    }
    seen |= cls;
    out.push_back(cls);
  }
  return out;
}

BoundsReport bounds_report(int n, int fix, int max_orbit, std::uint64_t aut_order,
                           int clone_class_count) {
  BoundsReport r;
  r.n = n;
  r.fix = fix;
  r.max_orbit = max_orbit;
  r.aut_order = aut_order;
  r.clone_class_count = clone_class_count;
  r.n_falling_k = 1;
  for (int i = 0; i < fix; ++i) r.n_falling_k = sat_mul(r.n_falling_k, n - i);
  r.s_pow_k = 1;
  for (int i = 0; i < fix; ++i) r.s_pow_k = sat_mul(r.s_pow_k, max_orbit);
  r.two_pow_k = 1;
  for (int i = 0; i < fix; ++i) r.two_pow_k = sat_mul(r.two_pow_k, 2);
  r.upper_falling = aut_order <= r.n_falling_k;
  r.upper_orbit = aut_order <= r.s_pow_k;
  r.lower_two = r.two_pow_k <= aut_order;
  r.clone_lower = fix >= n - clone_class_count;
  r.all_hold = r.upper_falling && r.upper_orbit && r.lower_two && r.clone_lower;
  return r;
}

FixReport analyze(const PermGroup& g, const std::vector<std::string>& labels) {
  if (static_cast<int>(labels.size()) != g.degree()) {
    fail(Errc::DegreeMismatch, "label count does not match group degree");
  }
  FixReport r;
  r.aut_order = g.order();
  const BaseSearch b = min_base(g);
  r.fix = b.size;
  auto labels_of = [&](Mask m) {
    std::vector<std::string> out;
    for (int i = 0; i < g.degree(); ++i) {
      if (has(m, i)) out.push_back(labels[i]);
    }
    return out;
  };
  r.witness = labels_of(b.witness);
  const auto orbit_masks = g.orbits();
  r.max_orbit = 1;
  for (Mask o : orbit_masks) {
    r.orbits.push_back(labels_of(o));
    r.max_orbit = std::max(r.max_orbit, popcount(o));
  }
  const auto clone_masks = group_clone_classes(g);
  for (Mask c : clone_masks) r.clone_classes.push_back(labels_of(c));
  r.bounds = bounds_report(g.degree(), r.fix, r.max_orbit, r.aut_order,
                           static_cast<int>(clone_masks.size()));
  std::vector<int> seq;
  for (int i = 0; i < g.degree(); ++i) {
    if (has(b.witness, i)) seq.push_back(i);
  }
  r.chain = stabilizer_chain(g, seq);
  return r;
}

FixReport analyze(const Matroid& m, std::size_t cap) {
  return analyze(automorphism_group(m, cap), m.ground().labels());
}

bool binary_basis_fixing_check(const Matroid& m, Mask basis, const PermGroup& aut) {
  if (!m.is_basis(basis)) fail(Errc::NotABasis, "set is not a basis");
  return aut.stabilizer(basis).is_trivial();
}

}  // namespace mfx
