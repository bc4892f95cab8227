#pragma once

#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "seplat/errors.hpp"
#include "seplat/state_set.hpp"

namespace seplat {

/// A finite orthogonality space: named states with a symmetric,
/// irreflexive orthogonality relation. Immutable once built.
class OrthoSpace {
 public:
  /// Builds a space from state names and unordered orthogonal pairs.
  /// Throws InvalidSpace on duplicate names, unknown names, reflexive
  /// pairs or an empty state list.
  static OrthoSpace make(std::vector<std::string> names,
                         const std::vector<std::pair<std::string, std::string>>& pairs);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(StateIndex i) const { return names_.at(i); }
  /// Index of a named state; throws InvalidSpace if absent.
  StateIndex index_of(const std::string& name) const;
  bool has_state(const std::string& name) const { return index_.contains(name); }

  bool orthogonal(StateIndex i, StateIndex j) const { return rows_[i].contains(j); }
  /// {p}^⊥ for a single state.
  const StateSet& perp_of(StateIndex i) const { return rows_[i]; }

  StateSet empty_set() const { return StateSet(size()); }
  StateSet all_states() const { return StateSet::full(size()); }
  StateSet singleton(StateIndex i) const {
    StateSet s(size());
    s.insert(i);
    return s;
  }
  StateSet set_of(const std::vector<std::string>& names) const;

  /// Orthogonal pairs (i < j), in lexicographic index order.
  std::vector<std::pair<StateIndex, StateIndex>> ortho_pairs() const;

  /// "{a,b*}" in index order.
  std::string render(const StateSet& s) const;

  bool operator==(const OrthoSpace& o) const { return names_ == o.names_ && rows_ == o.rows_; }

 private:
  OrthoSpace() = default;

  std::vector<std::string> names_;
  std::unordered_map<std::string, StateIndex> index_;
  std::vector<StateSet> rows_;
};

/// n antipodal pairs p1..pn, p1*..pn*; each state is orthogonal exactly to
/// its starred partner.
OrthoSpace mo_space(std::size_t n);

/// A^⊥ = { q | q ⊥ p for every p in A }.
StateSet perp(const OrthoSpace& space, const StateSet& a);

/// A^⊥⊥.
StateSet closure(const OrthoSpace& space, const StateSet& a);

inline bool is_closed(const OrthoSpace& space, const StateSet& a) { return closure(space, a) == a; }

/// Every singleton is biorthogonally closed.
bool is_t1(const OrthoSpace& space);

/// Some pair of distinct states is not orthogonal.
bool is_nontrivial(const OrthoSpace& space);

/// True when every state is orthogonal to exactly one other state (the
/// shape of mo_space up to renaming).
bool is_antipodal(const OrthoSpace& space);

/// All biorthogonally closed subsets ordered by cardinality, then
/// lexicographically. Built as the intersection closure of the singleton
/// perps together with the whole state set. Throws CapExceeded when the
/// family outgrows `cap`.
std::vector<StateSet> enumerate_closed(const OrthoSpace& space, std::size_t cap = kDefaultCap);

/// Product state space with (p1,p2) ⊥ (q1,q2) iff p1 ⊥ q1 or p2 ⊥ q2.
/// State (i, j) gets index i * |s2| + j and name "(name_i,name_j)".
OrthoSpace product_space(const OrthoSpace& s1, const OrthoSpace& s2);

inline StateIndex product_index(const OrthoSpace& s2, StateIndex i, StateIndex j) { return i * s2.size() + j; }

/// M1 × M2 as a subset of product_space(s1, s2).
StateSet product_set(const OrthoSpace& s1, const OrthoSpace& s2, const StateSet& m1, const StateSet& m2);

}  // namespace seplat
