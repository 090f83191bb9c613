#include "matroidfix/perm.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace mfx {

Perm::Perm(std::vector<std::uint8_t> images) : img_(std::move(images)) {
  const int n = degree();
  if (n < 1 || n > 31) fail(Errc::BadParams, "permutation degree out of range");
  std::uint32_t seen = 0;
  for (int i = 0; i < n; ++i) {
    if (img_[i] >= n || has(seen, img_[i])) {
      fail(Errc::BadParams, "permutation images are not a bijection");
    }
    seen |= bit(img_[i]);
  }
}

Perm Perm::identity(int degree) {
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  return Perm(std::move(img));
}

Perm Perm::transposition(int degree, int a, int b) {
  std::vector<std::uint8_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = static_cast<std::uint8_t>(i);
  std::swap(img[a], img[b]);
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i) {
    if (img_[i] != i) return false;
  }
  return true;
}

Perm Perm::compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) fail(Errc::DegreeMismatch, "composing unequal degrees");
  std::vector<std::uint8_t> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a.img_[b.img_[i]];
  return Perm(std::move(img));
}

Perm Perm::inverse() const {
  std::vector<std::uint8_t> img(degree());
  for (int i = 0; i < degree(); ++i) img[img_[i]] = static_cast<std::uint8_t>(i);
  return Perm(std::move(img));
}

Mask Perm::apply(Mask m) const {
  Mask out = 0;
  for (Mask rest = m; rest != 0; rest &= rest - 1) {
    out |= bit(img_[std::countr_zero(rest)]);
  }
  return out;
}

PermGroup::PermGroup(int degree, std::vector<Perm> elements)
    : degree_(degree), elements_(std::move(elements)) {}

PermGroup PermGroup::trivial(int degree) {
  return PermGroup(degree, {Perm::identity(degree)});
}

PermGroup PermGroup::closure(int degree, const std::vector<Perm>& generators,
                             std::size_t cap) {
  std::set<Perm> elems;
  elems.insert(Perm::identity(degree));
  std::vector<Perm> frontier(elems.begin(), elems.end());
  for (const Perm& g : generators) {
    if (g.degree() != degree) fail(Errc::DegreeMismatch, "generator degree mismatch");
  }
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& p : frontier) {
      for (const Perm& g : generators) {
        Perm q = Perm::compose(g, p);
        if (elems.insert(q).second) {
          if (elems.size() > cap) {
            fail(Errc::CapExceeded,
                 "group cap " + std::to_string(cap) + " exceeded (found at least " +
                     std::to_string(elems.size()) + " elements)");
          }
          next.push_back(std::move(q));
        }
      }
    }
    frontier = std::move(next);
  }
  return PermGroup(degree, std::vector<Perm>(elems.begin(), elems.end()));
}

PermGroup PermGroup::from_elements(int degree, std::vector<Perm> elements,
                                   bool verify) {
  for (const Perm& p : elements) {
    if (p.degree() != degree) fail(Errc::DegreeMismatch, "element degree mismatch");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  PermGroup g(degree, std::move(elements));
  if (verify) {
    const auto& es = g.elements_;
    if (!g.contains(Perm::identity(degree))) {
      fail(Errc::NotAGroup, "identity missing from element list");
    }
    for (const Perm& p : es) {
      if (!g.contains(p.inverse())) fail(Errc::NotAGroup, "inverse missing");
    }
    const std::size_t order = es.size();
    if (order <= 10000) {
      for (const Perm& p : es) {
        for (const Perm& q : es) {
          if (!g.contains(Perm::compose(p, q))) {
            fail(Errc::NotAGroup, "element list not closed under composition");
          }
        }
      }
    } else {
      std::mt19937 rng(12345);
      std::uniform_int_distribution<std::size_t> pick(0, order - 1);
      for (int i = 0; i < 10000; ++i) {
        if (!g.contains(Perm::compose(es[pick(rng)], es[pick(rng)]))) {
          fail(Errc::NotAGroup, "element list not closed under composition");
        }
      }
    }
  }
  return g;
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

PermGroup PermGroup::stabilizer(Mask fixed) const {
  std::vector<Perm> out;
  for (const Perm& p : elements_) {
    bool ok = true;
    for (Mask rest = fixed; rest != 0; rest &= rest - 1) {
      const int i = std::countr_zero(rest);
      if (p(i) != i) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(p);
  }
  return PermGroup(degree_, std::move(out));
}

std::vector<Mask> PermGroup::orbits() const {
  std::vector<Mask> out;
  Mask seen = 0;
  for (int i = 0; i < degree_; ++i) {
    if (has(seen, i)) continue;
    Mask orbit = bit(i);
    // one pass over the whole element list gives the full orbit
    for (const Perm& p : elements_) orbit |= bit(p(i));
    seen |= orbit;
    out.push_back(orbit);
  }
  return out;
}

int PermGroup::max_orbit_size() const {
  int best = 0;
  for (Mask o : orbits()) best = std::max(best, popcount(o));
  return best;
}

}  // namespace mfx
