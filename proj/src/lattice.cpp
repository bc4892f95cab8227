#include "seplat/lattice.hpp"

#include <algorithm>

namespace seplat {

PropertyLattice PropertyLattice::from_space(OrthoSpace space, std::size_t cap, std::size_t cover_table_threshold) {
  PropertyLattice l(std::move(space));
  l.elements_ = enumerate_closed(l.space_, cap);
  l.index_.reserve(l.elements_.size());
  for (Element i = 0; i < l.elements_.size(); ++i) l.index_.emplace(l.elements_[i], i);

  l.ortho_.resize(l.elements_.size());
  for (Element i = 0; i < l.elements_.size(); ++i) l.ortho_[i] = l.index_of(perp(l.space_, l.elements_[i]));

  // Every nonzero closed set contains the closure of one of its states, so
  // the atoms are the minimal singleton closures.
  std::vector<Element> candidates;
  for (StateIndex p = 0; p < l.space_.size(); ++p) candidates.push_back(l.close(l.space_.singleton(p)));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  l.atom_flag_.assign(l.elements_.size(), false);
  for (Element c : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](Element d) {
      return d != c && l.elements_[d].is_subset_of(l.elements_[c]);
    });
    if (minimal) {
      l.atoms_.push_back(c);
      l.atom_flag_[c] = true;
    }
  }

  if (l.elements_.size() > cover_table_threshold) {
    l.cover_table_.resize(l.elements_.size());
    for (Element a = 0; a < l.elements_.size(); ++a) l.cover_table_[a] = l.compute_upper_covers(a);
  }
  return l;
}

std::optional<Element> PropertyLattice::find(const StateSet& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element PropertyLattice::index_of(const StateSet& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) throw PreconditionError("state set " + space_.render(s) + " is not biorthogonally closed");
  return it->second;
}

std::vector<Element> PropertyLattice::compute_upper_covers(Element a) const {
  // Any upper cover b of a equals a ∨ cl({p}) for a state p in b \ a.
  std::vector<Element> candidates;
  const StateSet outside = elements_[a].complement();
  outside.for_each([&](StateIndex p) {
    StateSet u = elements_[a];
    u.insert(p);
    candidates.push_back(close(u));
  });
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<Element> out;
  for (Element c : candidates) {
    const bool minimal = std::none_of(candidates.begin(), candidates.end(), [&](Element d) {
      return d != c && elements_[d].is_subset_of(elements_[c]);
    });
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<Element> PropertyLattice::upper_covers(Element a) const {
  if (!cover_table_.empty()) return cover_table_[a];
  return compute_upper_covers(a);
}

bool PropertyLattice::covers(Element a, Element b) const {
  if (a == b || !leq(a, b)) return false;
  if (!cover_table_.empty()) {
    const auto& ups = cover_table_[a];
    return std::binary_search(ups.begin(), ups.end(), b);
  }
  const auto lo = elements_[a].count();
  const auto hi = elements_[b].count();
  // Elements are sorted by cardinality, so only indices strictly between
  // a and b can lie strictly between them.
  for (Element c = a + 1; c < b; ++c) {
    const auto cc = elements_[c].count();
    if (cc <= lo || cc >= hi) continue;
    if (elements_[a].is_subset_of(elements_[c]) && elements_[c].is_subset_of(elements_[b])) return false;
  }
  return true;
}

std::vector<Element> PropertyLattice::atoms_below(Element a) const {
  std::vector<Element> out;
  for (Element p : atoms_)
    if (leq(p, a)) out.push_back(p);
  return out;
}

}  // namespace seplat
