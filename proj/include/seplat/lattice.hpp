#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "seplat/orthospace.hpp"

namespace seplat {

using Element = std::size_t;

/// The complete ortholattice of biorthogonally closed subsets of a finite
/// orthogonality space. Elements are indices into a canonically ordered
/// list; an element's state set is its Cartan image, so "p actualizes a"
/// is plain membership.
class PropertyLattice {
 public:
  /// Lattices above this size answer covers() from a precomputed table of
  /// upper covers instead of scanning the interval.
  static constexpr std::size_t kCoverTableThreshold = 10000;

  static PropertyLattice from_space(OrthoSpace space, std::size_t cap = kDefaultCap,
                                    std::size_t cover_table_threshold = kCoverTableThreshold);

  const OrthoSpace& space() const noexcept { return space_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return elements_.size() - 1; }
  const std::vector<Element>& atoms() const noexcept { return atoms_; }
  bool is_atom(Element a) const { return atom_flag_[a]; }

  const StateSet& set(Element a) const { return elements_.at(a); }
  /// Index of a closed set, or nullopt when `s` is not closed.
  std::optional<Element> find(const StateSet& s) const;
  /// Index of a closed set; throws PreconditionError if `s` is not closed.
  Element index_of(const StateSet& s) const;
  /// The element closure(s).
  Element close(const StateSet& s) const { return index_of(closure(space_, s)); }

  Element meet(Element a, Element b) const { return index_of(elements_[a] & elements_[b]); }
  Element join(Element a, Element b) const { return close(elements_[a] | elements_[b]); }
  Element ortho(Element a) const { return ortho_[a]; }

  bool leq(Element a, Element b) const { return elements_[a].is_subset_of(elements_[b]); }
  bool covers(Element a, Element b) const;
  std::vector<Element> atoms_below(Element a) const;
  /// Minimal elements strictly above `a`.
  std::vector<Element> upper_covers(Element a) const;
  bool uses_cover_table() const noexcept { return !cover_table_.empty(); }

  std::string label(Element a) const { return space_.render(elements_[a]); }

 private:
  PropertyLattice(OrthoSpace space) : space_(std::move(space)) {}
  std::vector<Element> compute_upper_covers(Element a) const;

  OrthoSpace space_;
  std::vector<StateSet> elements_;
  std::unordered_map<StateSet, Element, StateSetHash> index_;
  std::vector<Element> ortho_;
  std::vector<Element> atoms_;
  std::vector<bool> atom_flag_;
  std::vector<std::vector<Element>> cover_table_;
};

}  // namespace seplat
