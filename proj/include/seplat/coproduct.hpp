#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "seplat/axioms.hpp"
#include "seplat/lattice.hpp"

namespace seplat {

namespace cop {
struct Bottom {
  auto operator<=>(const Bottom&) const = default;
};
/// Both components nonzero.
struct Pair {
  Element first;
  Element second;
  auto operator<=>(const Pair&) const = default;
};
}  // namespace cop

using CoproductElement = std::variant<cop::Bottom, cop::Pair>;

/// Pairs of nonzero elements of two property lattices with one global
/// bottom pasted underneath. Order, meet and join are componentwise; a meet
/// with a zero component collapses to the global bottom.
///
/// The orthocomplement is componentwise as well: (a1,a2)' = (a1',a2') when
/// both complements are nonzero, the global bottom otherwise, and
/// bottom' = (1,1). This does not satisfy the ortholattice laws in general;
/// check_ortho_laws() reports where it breaks.
class CoproductLattice {
 public:
  CoproductLattice(std::shared_ptr<const PropertyLattice> first, std::shared_ptr<const PropertyLattice> second);

  const PropertyLattice& first() const { return *first_; }
  const PropertyLattice& second() const { return *second_; }

  std::size_t size() const noexcept { return 1 + (first_->size() - 1) * (second_->size() - 1); }
  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return size() - 1; }
  const std::vector<Element>& atoms() const noexcept { return atoms_; }
  bool is_atom(Element a) const { return atom_flag_[a]; }

  CoproductElement element(Element k) const;
  Element index_of(const CoproductElement& e) const;

  bool leq(Element a, Element b) const;
  bool covers(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element ortho(Element a) const;

  std::string label(Element a) const;

 private:
  std::shared_ptr<const PropertyLattice> first_;
  std::shared_ptr<const PropertyLattice> second_;
  std::vector<Element> atoms_;
  std::vector<bool> atom_flag_;
};

CoproductLattice coproduct(const PropertyLattice& first, const PropertyLattice& second);

/// Throws PreconditionError carrying the first law violation, if any.
void require_ortholattice(const CoproductLattice& l);

struct CoproductReport {
  std::size_t elements = 0;
  std::size_t atoms = 0;
  CheckResult ortho_laws;
  CheckResult orthomodular;
  CheckResult covering;
  CheckResult exchange;
  CheckResult atomistic;
  LatticeSasakiReport sasaki;
};

/// Covering, exchange, orthomodularity, atomisticity and lattice-level
/// Sasaki regularity, all under the componentwise orthocomplement.
CoproductReport coproduct_checks(const CoproductLattice& l);

}  // namespace seplat
