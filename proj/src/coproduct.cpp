#include "seplat/coproduct.hpp"

#include <algorithm>

namespace seplat {

CoproductLattice::CoproductLattice(std::shared_ptr<const PropertyLattice> first,
                                   std::shared_ptr<const PropertyLattice> second)
    : first_(std::move(first)), second_(std::move(second)) {
  if (first_->size() < 2 || second_->size() < 2) throw PreconditionError("coproduct components need a nonzero element");
  atom_flag_.assign(size(), false);
  for (Element a1 : first_->atoms())
    for (Element a2 : second_->atoms()) {
      const Element k = index_of(cop::Pair{a1, a2});
      atoms_.push_back(k);
      atom_flag_[k] = true;
    }
  std::sort(atoms_.begin(), atoms_.end());
}

CoproductElement CoproductLattice::element(Element k) const {
  if (k == 0) return cop::Bottom{};
  const auto n2 = second_->size() - 1;
  return cop::Pair{1 + (k - 1) / n2, 1 + (k - 1) % n2};
}

Element CoproductLattice::index_of(const CoproductElement& e) const {
  if (std::holds_alternative<cop::Bottom>(e)) return 0;
  const auto& p = std::get<cop::Pair>(e);
  if (p.first == first_->bottom() || p.second == second_->bottom())
    throw PreconditionError("coproduct pair with a zero component");
  return 1 + (p.first - 1) * (second_->size() - 1) + (p.second - 1);
}

bool CoproductLattice::leq(Element a, Element b) const {
  if (a == 0) return true;
  if (b == 0) return false;
  const auto pa = std::get<cop::Pair>(element(a));
  const auto pb = std::get<cop::Pair>(element(b));
  return first_->leq(pa.first, pb.first) && second_->leq(pa.second, pb.second);
}

bool CoproductLattice::covers(Element a, Element b) const {
  if (b == 0) return false;
  const auto pb = std::get<cop::Pair>(element(b));
  if (a == 0) return is_atom(b);
  const auto pa = std::get<cop::Pair>(element(a));
  return (pa.first == pb.first && second_->covers(pa.second, pb.second)) ||
         (pa.second == pb.second && first_->covers(pa.first, pb.first));
}

Element CoproductLattice::meet(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  const auto pa = std::get<cop::Pair>(element(a));
  const auto pb = std::get<cop::Pair>(element(b));
  const Element m1 = first_->meet(pa.first, pb.first);
  const Element m2 = second_->meet(pa.second, pb.second);
  if (m1 == first_->bottom() || m2 == second_->bottom()) return 0;
  return index_of(cop::Pair{m1, m2});
}

Element CoproductLattice::join(Element a, Element b) const {
  if (a == 0) return b;
  if (b == 0) return a;
  const auto pa = std::get<cop::Pair>(element(a));
  const auto pb = std::get<cop::Pair>(element(b));
  return index_of(cop::Pair{first_->join(pa.first, pb.first), second_->join(pa.second, pb.second)});
}

Element CoproductLattice::ortho(Element a) const {
  if (a == 0) return top();
  const auto pa = std::get<cop::Pair>(element(a));
  const Element c1 = first_->ortho(pa.first);
  const Element c2 = second_->ortho(pa.second);
  if (c1 == first_->bottom() || c2 == second_->bottom()) return 0;
  return index_of(cop::Pair{c1, c2});
}

std::string CoproductLattice::label(Element a) const {
  if (a == 0) return "0";
  const auto pa = std::get<cop::Pair>(element(a));
  return "(" + first_->label(pa.first) + "," + second_->label(pa.second) + ")";
}

CoproductLattice coproduct(const PropertyLattice& first, const PropertyLattice& second) {
  return CoproductLattice(std::make_shared<const PropertyLattice>(first), std::make_shared<const PropertyLattice>(second));
}

void require_ortholattice(const CoproductLattice& l) {
  if (auto w = check_ortho_laws(l)) throw PreconditionError("componentwise orthocomplement: " + w->narrative);
}

CoproductReport coproduct_checks(const CoproductLattice& l) {
  CoproductReport r;
  r.elements = l.size();
  r.atoms = l.atoms().size();
  r.ortho_laws = check_ortho_laws(l);
  r.orthomodular = check_orthomodular(l);
  r.covering = check_covering(l);
  r.exchange = check_exchange(l);
  r.atomistic = check_atomistic(l);
  r.sasaki = check_sasaki_regular_lattice(l);
  return r;
}

}  // namespace seplat
