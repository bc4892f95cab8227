#include "seplat/orthospace.hpp"

#include <algorithm>
#include <unordered_set>

namespace seplat {

bool canonical_less(const StateSet& a, const StateSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

OrthoSpace OrthoSpace::make(std::vector<std::string> names,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  if (names.empty()) throw InvalidSpace("a space needs at least one state");
  OrthoSpace s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw InvalidSpace("empty state name");
    if (!s.index_.emplace(names[i], i).second) throw InvalidSpace("duplicate state name '" + names[i] + "'");
  }
  s.names_ = std::move(names);
  s.rows_.assign(s.names_.size(), StateSet(s.names_.size()));
  for (const auto& [x, y] : pairs) {
    const auto ix = s.index_.find(x);
    if (ix == s.index_.end()) throw InvalidSpace("unknown state '" + x + "' in orthogonal pair");
    const auto iy = s.index_.find(y);
    if (iy == s.index_.end()) throw InvalidSpace("unknown state '" + y + "' in orthogonal pair");
    if (ix->second == iy->second) throw InvalidSpace("state '" + x + "' cannot be orthogonal to itself");
    s.rows_[ix->second].insert(iy->second);
    s.rows_[iy->second].insert(ix->second);
  }
  return s;
}

StateIndex OrthoSpace::index_of(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) throw InvalidSpace("unknown state '" + name + "'");
  return it->second;
}

StateSet OrthoSpace::set_of(const std::vector<std::string>& names) const {
  StateSet s(size());
  for (const auto& n : names) s.insert(index_of(n));
  return s;
}

std::vector<std::pair<StateIndex, StateIndex>> OrthoSpace::ortho_pairs() const {
  std::vector<std::pair<StateIndex, StateIndex>> out;
  for (StateIndex i = 0; i < size(); ++i)
    rows_[i].for_each([&](StateIndex j) {
      if (i < j) out.emplace_back(i, j);
    });
  return out;
}

std::string OrthoSpace::render(const StateSet& s) const {
  std::string out = "{";
  bool first = true;
  s.for_each([&](StateIndex i) {
    if (!first) out += ',';
    out += names_[i];
    first = false;
  });
  out += '}';
  return out;
}

OrthoSpace mo_space(std::size_t n) {
  if (n == 0) throw InvalidSpace("mo_space needs at least one antipodal pair");
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t k = 1; k <= n; ++k) names.push_back("p" + std::to_string(k));
  for (std::size_t k = 1; k <= n; ++k) {
    names.push_back("p" + std::to_string(k) + "*");
    pairs.emplace_back("p" + std::to_string(k), "p" + std::to_string(k) + "*");
  }
  return OrthoSpace::make(std::move(names), pairs);
}

StateSet perp(const OrthoSpace& space, const StateSet& a) {
  StateSet out = space.all_states();
  a.for_each([&](StateIndex p) { out &= space.perp_of(p); });
  return out;
}

StateSet closure(const OrthoSpace& space, const StateSet& a) { return perp(space, perp(space, a)); }

bool is_t1(const OrthoSpace& space) {
  for (StateIndex p = 0; p < space.size(); ++p) {
    const auto single = space.singleton(p);
    if (closure(space, single) != single) return false;
  }
  return true;
}

bool is_nontrivial(const OrthoSpace& space) {
  for (StateIndex p = 0; p < space.size(); ++p)
    for (StateIndex q = p + 1; q < space.size(); ++q)
      if (!space.orthogonal(p, q)) return true;
  return false;
}

bool is_antipodal(const OrthoSpace& space) {
  for (StateIndex p = 0; p < space.size(); ++p)
    if (space.perp_of(p).count() != 1) return false;
  return true;
}

std::vector<StateSet> enumerate_closed(const OrthoSpace& space, std::size_t cap) {
  std::unordered_set<StateSet, StateSetHash> seen;
  std::vector<StateSet> family;
  auto add = [&](StateSet s) {
    if (seen.insert(s).second) {
      family.push_back(std::move(s));
      if (family.size() > cap) throw CapExceeded(cap);
    }
  };
  add(space.all_states());

  std::unordered_set<StateSet, StateSetHash> generators;
  for (StateIndex p = 0; p < space.size(); ++p) {
    const auto& g = space.perp_of(p);
    if (!generators.insert(g).second) continue;
    const std::size_t current = family.size();
    for (std::size_t k = 0; k < current; ++k) add(family[k] & g);
  }
  // Σ^⊥ = ∅ is always closed, even when no intersection reaches it.
  add(space.empty_set());

  std::sort(family.begin(), family.end(), canonical_less);
  return family;
}

OrthoSpace product_space(const OrthoSpace& s1, const OrthoSpace& s2) {
  std::vector<std::string> names;
  names.reserve(s1.size() * s2.size());
  for (StateIndex i = 0; i < s1.size(); ++i)
    for (StateIndex j = 0; j < s2.size(); ++j) names.push_back("(" + s1.name(i) + "," + s2.name(j) + ")");

  std::vector<std::pair<std::string, std::string>> pairs;
  const std::size_t n = names.size();
  for (std::size_t a = 0; a < n; ++a) {
    const auto [a1, a2] = std::pair{a / s2.size(), a % s2.size()};
    for (std::size_t b = a + 1; b < n; ++b) {
      const auto [b1, b2] = std::pair{b / s2.size(), b % s2.size()};
      if (s1.orthogonal(a1, b1) || s2.orthogonal(a2, b2)) pairs.emplace_back(names[a], names[b]);
    }
  }
  return OrthoSpace::make(std::move(names), pairs);
}

StateSet product_set(const OrthoSpace& s1, const OrthoSpace& s2, const StateSet& m1, const StateSet& m2) {
  StateSet out(s1.size() * s2.size());
  m1.for_each([&](StateIndex i) { m2.for_each([&](StateIndex j) { out.insert(product_index(s2, i, j)); }); });
  return out;
}

}  // namespace seplat
