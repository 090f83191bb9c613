#include "matroidfix/matroid.hpp"

#include <algorithm>

namespace mfx {

namespace {

std::string set_to_string(const GroundSet& g, Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (!has(m, i)) continue;
    if (!first) out += ",";
    out += g.label(i);
    first = false;
  }
  return out + "}";
}

void check_exchange(const GroundSet& g, const std::vector<Mask>& bases) {
  // For bases B1 != B2 and x in B1\B2, some y in B2\B1 must give another basis.
  for (Mask b1 : bases) {
    for (Mask b2 : bases) {
      if (b1 == b2) continue;
      Mask only1 = b1 & ~b2;
      Mask only2 = b2 & ~b1;
      for (Mask xm = only1; xm != 0; xm &= xm - 1) {
        const Mask x = xm & (~xm + 1);
        bool ok = false;
        for (Mask ym = only2; ym != 0 && !ok; ym &= ym - 1) {
          const Mask y = ym & (~ym + 1);
          ok = std::binary_search(bases.begin(), bases.end(), (b1 & ~x) | y);
        }
        if (!ok) {
          fail(Errc::ExchangeViolation,
               "basis exchange fails for bases " + set_to_string(g, b1) + " and " +
                   set_to_string(g, b2) + " at element " +
                   g.label(std::countr_zero(x)));
        }
      }
    }
  }
}

Mask compress_without(Mask m, int id) {
  const Mask low = bit(id) - 1;
  return (m & low) | ((m >> 1) & ~low);
}

std::vector<std::string> labels_without(const GroundSet& g, int id) {
  std::vector<std::string> labels;
  labels.reserve(g.size() - 1);
  for (int i = 0; i < g.size(); ++i) {
    if (i != id) labels.push_back(g.label(i));
  }
  return labels;
}

}  // namespace

Matroid::Matroid(GroundSet ground, int rank, std::vector<Mask> bases)
    : ground_(std::move(ground)), rank_(rank), bases_(std::move(bases)) {}

Matroid Matroid::from_bases(GroundSet ground, std::vector<Mask> bases, bool validate) {
  if (bases.empty()) fail(Errc::EmptyFamily, "a matroid needs at least one basis");
  const Mask universe = ground.full();
  const int r = popcount(bases.front());
  for (Mask b : bases) {
    if ((b & ~universe) != 0) fail(Errc::UnknownElement, "basis member outside ground set");
    if (popcount(b) != r) {
      fail(Errc::UnequalCardinality,
           "bases of different sizes: " + std::to_string(r) + " and " +
               std::to_string(popcount(b)));
    }
  }
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (validate) check_exchange(ground, bases);
  return Matroid(std::move(ground), r, std::move(bases));
}

Matroid Matroid::from_circuits(GroundSet ground, const SetFamily& circuits) {
  if (circuits.n != ground.size()) fail(Errc::DegreeMismatch, "circuit universe mismatch");
  for (std::size_t i = 0; i < circuits.sets.size(); ++i) {
    if (circuits.sets[i] == 0) fail(Errc::EmptyCircuit, "empty circuit");
    for (std::size_t j = 0; j < circuits.sets.size(); ++j) {
      if (i == j) continue;
      if ((circuits.sets[i] & circuits.sets[j]) == circuits.sets[i]) {
        fail(Errc::CircuitContainment,
             "circuit " + set_to_string(ground, circuits.sets[i]) + " contained in " +
                 set_to_string(ground, circuits.sets[j]));
      }
    }
  }

  const int n = ground.size();
  // circuits through each element, for incremental independence checks
  std::vector<std::vector<Mask>> through(n);
  for (Mask c : circuits.sets) {
    for (int e = 0; e < n; ++e) {
      if (has(c, e)) through[e].push_back(c);
    }
  }

  std::vector<Mask> best;
  int best_size = -1;
  // enumerate all independent sets (sets containing no circuit)
  auto dfs = [&](auto&& self, int next, Mask cur, int size) -> void {
    if (size > best_size) {
      best_size = size;
      best.clear();
    }
    if (size == best_size) best.push_back(cur);
    for (int e = next; e < n; ++e) {
      const Mask ext = cur | bit(e);
      bool dependent = false;
      for (Mask c : through[e]) {
        if ((c & ext) == c) {
          dependent = true;
          break;
        }
      }
      if (!dependent) self(self, e + 1, ext, size + 1);
    }
  };
  dfs(dfs, 0, 0, 0);
  return from_bases(std::move(ground), std::move(best), /*validate=*/true);
}

bool Matroid::is_basis(Mask s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

bool Matroid::is_independent(Mask s) const {
  if (popcount(s) > rank_) return false;
  for (Mask b : bases_) {
    if ((s & b) == s) return true;
  }
  return false;
}

int Matroid::rank_of(Mask s) const {
  const int cap = std::min(popcount(s), rank_);
  int best = 0;
  for (Mask b : bases_) {
    best = std::max(best, popcount(s & b));
    if (best == cap) return best;
  }
  return best;
}

bool Matroid::is_loop(int id) const {
  for (Mask b : bases_) {
    if (has(b, id)) return false;
  }
  return true;
}

bool Matroid::is_coloop(int id) const {
  for (Mask b : bases_) {
    if (!has(b, id)) return false;
  }
  return true;
}

SetFamily Matroid::circuits() const {
  const int n = ground_.size();
  std::vector<Mask> found;
  const int max_size = std::min(rank_ + 1, n);
  for (int k = 1; k <= max_size; ++k) {
    for_each_subset_of_size(n, k, [&](Mask s) {
      // minimal dependent: dependent, and contains no smaller circuit
      for (Mask c : found) {
        if ((c & s) == c) return;
      }
      if (!is_independent(s)) found.push_back(s);
    });
  }
  return SetFamily::of(n, std::move(found));
}

SetFamily Matroid::cocircuits() const { return dual().circuits(); }

Matroid Matroid::dual() const {
  const Mask universe = ground_.full();
  std::vector<Mask> cobases;
  cobases.reserve(bases_.size());
  for (Mask b : bases_) cobases.push_back(universe & ~b);
  return from_bases(ground_, std::move(cobases), /*validate=*/false);
}

Matroid Matroid::deleted(const std::string& x) const {
  const int id = ground_.id_of(x);
  if (ground_.size() == 1) fail(Errc::TooSmall, "cannot delete the last element");
  std::vector<Mask> nb;
  if (is_coloop(id)) {
    for (Mask b : bases_) nb.push_back(compress_without(b & ~bit(id), id));
  } else {
    for (Mask b : bases_) {
      if (!has(b, id)) nb.push_back(compress_without(b, id));
    }
  }
  return from_bases(GroundSet(labels_without(ground_, id)), std::move(nb),
                    /*validate=*/false);
}

Matroid Matroid::contracted(const std::string& x) const {
  const int id = ground_.id_of(x);
  if (is_loop(id)) return deleted(x);
  if (ground_.size() == 1) fail(Errc::TooSmall, "cannot contract the last element");
  std::vector<Mask> nb;
  for (Mask b : bases_) {
    if (has(b, id)) nb.push_back(compress_without(b & ~bit(id), id));
  }
  return from_bases(GroundSet(labels_without(ground_, id)), std::move(nb),
                    /*validate=*/false);
}

bool Matroid::is_connected() const {
  const int n = ground_.size();
  if (n < 2) fail(Errc::TooSmall, "connectivity needs at least 2 elements");
  std::vector<bool> covered(static_cast<std::size_t>(n) * n, false);
  for (Mask c : circuits().sets) {
    for (int i = 0; i < n; ++i) {
      if (!has(c, i)) continue;
      for (int j = i + 1; j < n; ++j) {
        if (has(c, j)) covered[static_cast<std::size_t>(i) * n + j] = true;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!covered[static_cast<std::size_t>(i) * n + j]) return false;
    }
  }
  return true;
}

SetFamily Matroid::cyclic_flats() const {
  const int n = ground_.size();
  if (n > 16) fail(Errc::TooLarge, "cyclic flat enumeration limited to 16 elements");
  std::vector<Mask> out;
  const Mask universe = ground_.full();
  for (Mask s = 0; s <= universe; ++s) {
    const int rs = rank_of(s);
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) {
      if (has(s, x)) {
        // no coloops in the restriction
        if (rank_of(s & ~bit(x)) < rs) ok = false;
      } else {
        // closed: adding anything raises rank
        if (rank_of(s | bit(x)) == rs) ok = false;
      }
    }
    if (ok) out.push_back(s);
  }
  return SetFamily::of(n, std::move(out));
}

Matroid Matroid::with_labels(std::vector<std::string> new_labels) const {
  if (static_cast<int>(new_labels.size()) != ground_.size()) {
    fail(Errc::BadParams, "label count mismatch");
  }
  GroundSet ng(new_labels);  // validates uniqueness
  std::vector<int> remap(ground_.size());
  for (int i = 0; i < ground_.size(); ++i) remap[i] = ng.id_of(new_labels[i]);
  std::vector<Mask> nb;
  nb.reserve(bases_.size());
  for (Mask b : bases_) {
    Mask m = 0;
    for (int i = 0; i < ground_.size(); ++i) {
      if (has(b, i)) m |= bit(remap[i]);
    }
    nb.push_back(m);
  }
  return from_bases(std::move(ng), std::move(nb), /*validate=*/false);
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  for (const auto& l : b.ground().labels()) {
    if (a.ground().contains(l)) {
      fail(Errc::LabelCollision, "direct sum ground sets share label '" + l + "'");
    }
  }
  std::vector<std::string> labels = a.ground().labels();
  labels.insert(labels.end(), b.ground().labels().begin(), b.ground().labels().end());
  GroundSet ng(labels);
  std::vector<int> ra(a.size()), rb(b.size());
  for (int i = 0; i < a.size(); ++i) ra[i] = ng.id_of(a.ground().label(i));
  for (int i = 0; i < b.size(); ++i) rb[i] = ng.id_of(b.ground().label(i));
  auto remap = [](Mask m, const std::vector<int>& map) {
    Mask out = 0;
    for (int i = 0; i < static_cast<int>(map.size()); ++i) {
      if (has(m, i)) out |= bit(map[i]);
    }
    return out;
  };
  std::vector<Mask> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Mask ba : a.bases()) {
    for (Mask bb : b.bases()) bases.push_back(remap(ba, ra) | remap(bb, rb));
  }
  return Matroid::from_bases(std::move(ng), std::move(bases), /*validate=*/false);
}

Matroid free_extension(const Matroid& m, std::string new_label) {
  if (m.rank() < 1) fail(Errc::BadParams, "free extension needs rank >= 1");
  if (new_label.empty()) {
    new_label = "p";
    for (int i = 1; m.ground().contains(new_label); ++i) {
      new_label = "p" + std::to_string(i);
    }
  } else if (m.ground().contains(new_label)) {
    fail(Errc::LabelCollision, "label '" + new_label + "' already in ground set");
  }
  std::vector<std::string> labels = m.ground().labels();
  labels.push_back(new_label);
  GroundSet ng(labels);
  const int pid = ng.id_of(new_label);
  std::vector<int> remap(m.size());
  for (int i = 0; i < m.size(); ++i) remap[i] = ng.id_of(m.ground().label(i));
  auto lift = [&](Mask old) {
    Mask out = 0;
    for (int i = 0; i < m.size(); ++i) {
      if (has(old, i)) out |= bit(remap[i]);
    }
    return out;
  };
  std::vector<Mask> bases;
  for (Mask b : m.bases()) {
    bases.push_back(lift(b));
    // every independent (r-1)-set is a basis minus one element
    for (Mask xm = b; xm != 0; xm &= xm - 1) {
      const Mask x = xm & (~xm + 1);
      bases.push_back(lift(b & ~x) | bit(pid));
    }
  }
  return Matroid::from_bases(std::move(ng), std::move(bases), /*validate=*/false);
}

bool is_uniform(const Matroid& m) {
  return m.bases().size() == binomial(m.size(), m.rank());
}

}  // namespace mfx
