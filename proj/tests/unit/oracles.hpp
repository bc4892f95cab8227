#pragma once

// Naive reference implementations used only by tests. They share nothing
// with the library beyond OrthoSpace::orthogonal and StateSet storage.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "seplat/orthospace.hpp"

namespace seplat::oracle {

inline StateSet naive_perp(const OrthoSpace& s, const StateSet& a) {
  StateSet out(s.size());
  for (StateIndex q = 0; q < s.size(); ++q) {
    bool all = true;
    for (StateIndex p = 0; p < s.size(); ++p)
      if (a.contains(p) && !s.orthogonal(q, p)) all = false;
    if (all) out.insert(q);
  }
  return out;
}

inline StateSet naive_closure(const OrthoSpace& s, const StateSet& a) { return naive_perp(s, naive_perp(s, a)); }

inline StateSet from_mask(std::size_t universe, unsigned long long mask) {
  StateSet out(universe);
  for (std::size_t i = 0; i < universe; ++i)
    if ((mask >> i) & 1ULL) out.insert(i);
  return out;
}

/// Every subset checked for A == A^⊥⊥; feasible up to ~20 states.
inline std::vector<StateSet> brute_closed_sets(const OrthoSpace& s) {
  std::vector<StateSet> out;
  const unsigned long long total = 1ULL << s.size();
  for (unsigned long long mask = 0; mask < total; ++mask) {
    auto a = from_mask(s.size(), mask);
    if (naive_closure(s, a) == a) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), [](const StateSet& x, const StateSet& y) {
    if (x.count() != y.count()) return x.count() < y.count();
    return x.members() < y.members();
  });
  return out;
}

/// Least closed superset of `a` found by scanning a list of closed sets.
inline StateSet least_closed_superset(const std::vector<StateSet>& closed, const StateSet& a) {
  const StateSet* best = nullptr;
  for (const auto& c : closed)
    if (a.is_subset_of(c) && (!best || c.is_subset_of(*best))) best = &c;
  return *best;
}

}  // namespace seplat::oracle
