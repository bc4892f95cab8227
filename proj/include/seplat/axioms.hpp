#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "seplat/lattice.hpp"

namespace seplat {

/// The interface the checkers need: an indexed finite lattice with an
/// orthocomplement, order queries and a list of atoms.
template <typename L>
concept FiniteOrthoLattice = requires(const L& l, Element a, Element b) {
  { l.size() } -> std::convertible_to<std::size_t>;
  { l.bottom() } -> std::convertible_to<Element>;
  { l.top() } -> std::convertible_to<Element>;
  { l.atoms() } -> std::convertible_to<const std::vector<Element>&>;
  { l.is_atom(a) } -> std::convertible_to<bool>;
  { l.leq(a, b) } -> std::convertible_to<bool>;
  { l.covers(a, b) } -> std::convertible_to<bool>;
  { l.meet(a, b) } -> std::convertible_to<Element>;
  { l.join(a, b) } -> std::convertible_to<Element>;
  { l.ortho(a) } -> std::convertible_to<Element>;
  { l.label(a) } -> std::convertible_to<std::string>;
};

enum class WitnessKind { orthomodularity, covering, exchange, atomistic, sasaki, superselection, ortho_law };

std::string to_string(WitnessKind k);

/// A concrete counterexample. `elements` holds lattice element indices,
/// except for state-level Sasaki witnesses where the second entry is a
/// state index.
struct Witness {
  WitnessKind kind;
  std::vector<std::size_t> elements;
  std::string narrative;

  bool operator==(const Witness&) const = default;
};

/// nullopt means the property holds.
using CheckResult = std::optional<Witness>;

namespace detail {

template <FiniteOrthoLattice L>
bool strictly_between(const L& l, Element x, Element z, Element y) {
  return z != x && z != y && l.leq(x, z) && l.leq(z, y);
}

}  // namespace detail

// --- single-instance conditions, shared by the scans and by reverify() ---

/// a ≤ b ⇒ b = a ∨ (b ∧ a^⊥)
template <FiniteOrthoLattice L>
bool orthomodular_at(const L& l, Element a, Element b) {
  if (!l.leq(a, b)) return true;
  return l.join(a, l.meet(b, l.ortho(a))) == b;
}

/// For an atom p with p ∧ x = 0, p ∨ x covers x.
template <FiniteOrthoLattice L>
bool covering_at(const L& l, Element p, Element x) {
  if (!l.is_atom(p) || l.meet(p, x) != l.bottom()) return true;
  return l.covers(x, l.join(p, x));
}

/// p ∧ x = 0 and p ≤ q ∨ x imply q ≤ p ∨ x, for atoms p and q.
template <FiniteOrthoLattice L>
bool exchange_at(const L& l, Element p, Element q, Element x) {
  if (!l.is_atom(p) || !l.is_atom(q)) return true;
  if (l.meet(p, x) != l.bottom() || !l.leq(p, l.join(q, x))) return true;
  return l.leq(q, l.join(p, x));
}

/// a equals the join of the atoms below it.
template <FiniteOrthoLattice L>
bool atomistic_at(const L& l, Element a) {
  Element j = l.bottom();
  for (Element p : l.atoms())
    if (l.leq(p, a)) j = l.join(j, p);
  return j == a;
}

/// φ_a(x) = (x ∨ a^⊥) ∧ a
template <FiniteOrthoLattice L>
Element sasaki_lattice(const L& l, Element a, Element x) {
  return l.meet(l.join(x, l.ortho(a)), a);
}

// --- exhaustive scans; the reported witness is the least in index order ---

template <FiniteOrthoLattice L>
CheckResult check_orthomodular(const L& l) {
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      if (!orthomodular_at(l, a, b)) {
        const Element inner = l.meet(b, l.ortho(a));
        return Witness{WitnessKind::orthomodularity,
                       {a, b},
                       "a=" + l.label(a) + " <= b=" + l.label(b) + " but b ^ a' = " + l.label(inner) +
                           " and a v (b ^ a') = " + l.label(l.join(a, inner)) + " != b"};
      }
  return std::nullopt;
}

template <FiniteOrthoLattice L>
CheckResult check_covering(const L& l) {
  for (Element p : l.atoms())
    for (Element x = 0; x < l.size(); ++x) {
      if (covering_at(l, p, x)) continue;
      const Element j = l.join(p, x);
      for (Element z = 0; z < l.size(); ++z)
        if (detail::strictly_between(l, x, z, j))
          return Witness{WitnessKind::covering,
                         {p, x, z},
                         "atom p=" + l.label(p) + " misses x=" + l.label(x) + " but x < z=" + l.label(z) +
                             " < p v x=" + l.label(j)};
    }
  return std::nullopt;
}

template <FiniteOrthoLattice L>
CheckResult check_exchange(const L& l) {
  for (Element p : l.atoms())
    for (Element q : l.atoms())
      for (Element x = 0; x < l.size(); ++x)
        if (!exchange_at(l, p, q, x))
          return Witness{WitnessKind::exchange,
                         {p, q, x},
                         "p=" + l.label(p) + " misses x=" + l.label(x) + " and p <= q v x with q=" + l.label(q) +
                             " but q is not below p v x=" + l.label(l.join(p, x))};
  return std::nullopt;
}

/// Generic atomisticity: every element is the join of the atoms below it.
template <FiniteOrthoLattice L>
CheckResult check_atomistic(const L& l) {
  for (Element a = 0; a < l.size(); ++a)
    if (!atomistic_at(l, a))
      return Witness{WitnessKind::atomistic, {a}, l.label(a) + " is not the join of the atoms below it"};
  return std::nullopt;
}

/// Property lattices additionally flag a whole state set of several states
/// that is itself an atom (nothing but ∅ below Σ).
CheckResult check_atomistic(const PropertyLattice& l);

/// Orthocomplementation laws: involution, order reversal, a ∧ a^⊥ = 0 and
/// a ∨ a^⊥ = 1.
template <FiniteOrthoLattice L>
CheckResult check_ortho_laws(const L& l) {
  for (Element a = 0; a < l.size(); ++a) {
    const Element c = l.ortho(a);
    if (l.ortho(c) != a)
      return Witness{WitnessKind::ortho_law, {a}, "involution fails: a=" + l.label(a) + ", a'=" + l.label(c) +
                                                      ", a''=" + l.label(l.ortho(c))};
    if (l.meet(a, c) != l.bottom())
      return Witness{WitnessKind::ortho_law, {a}, "a ^ a' != 0 for a=" + l.label(a)};
    if (l.join(a, c) != l.top())
      return Witness{WitnessKind::ortho_law, {a}, "a v a' != 1 for a=" + l.label(a) + ", a'=" + l.label(c)};
  }
  for (Element a = 0; a < l.size(); ++a)
    for (Element b = 0; b < l.size(); ++b)
      if (l.leq(a, b) && !l.leq(l.ortho(b), l.ortho(a)))
        return Witness{WitnessKind::ortho_law, {a, b}, "order reversal fails: a=" + l.label(a) + " <= b=" + l.label(b)};
  return std::nullopt;
}

/// Lattice-level Sasaki witness: φ_a(p) is not an atom for an atom p not
/// below a^⊥.
struct LatticeSasakiWitness {
  Element a;
  Element atom;
  Element image;
  bool operator==(const LatticeSasakiWitness&) const = default;
};

struct LatticeSasakiReport {
  bool regular = true;
  std::vector<LatticeSasakiWitness> witnesses;
};

template <FiniteOrthoLattice L>
LatticeSasakiReport check_sasaki_regular_lattice(const L& l) {
  LatticeSasakiReport r;
  for (Element a = 0; a < l.size(); ++a) {
    const Element ac = l.ortho(a);
    for (Element p : l.atoms()) {
      if (l.leq(p, ac)) continue;
      const Element img = sasaki_lattice(l, a, p);
      if (!l.is_atom(img)) r.witnesses.push_back({a, p, img});
    }
  }
  r.regular = r.witnesses.empty();
  return r;
}

// --- state-level Sasaki maps on property lattices ---

/// φ_M(p) = ({p} ∪ M^⊥)^⊥⊥ ∩ M for a closed M.
StateSet sasaki_state(const PropertyLattice& l, Element m, StateIndex p);

struct SasakiWitness {
  Element m;
  StateIndex p;
  StateSet image;
  bool operator==(const SasakiWitness&) const = default;
};

struct SasakiReport {
  bool regular = true;
  std::vector<SasakiWitness> witnesses;
};

/// Regular iff φ_M(p) is a singleton for every closed M and every state
/// p ∉ M^⊥. Empty images count as irregular. With `stop_at_first` the scan
/// ends at the first witness.
SasakiReport check_sasaki_regular(const PropertyLattice& l, bool stop_at_first = false);

Witness to_witness(const PropertyLattice& l, const SasakiWitness& w);

// --- superselection ---

struct SuperselectedPair {
  Element a;
  Element b;
  bool orthogonal;
  bool operator==(const SuperselectedPair&) const = default;
};

/// Unordered pairs of distinct atoms whose join is the plain union of
/// their state sets.
std::vector<SuperselectedPair> superselection_pairs(const PropertyLattice& l);

/// Re-evaluates the violated condition; true when the witness still
/// exhibits the violation.
bool reverify(const PropertyLattice& l, const Witness& w);

template <FiniteOrthoLattice L>
bool reverify_generic(const L& l, const Witness& w) {
  const auto& e = w.elements;
  switch (w.kind) {
    case WitnessKind::orthomodularity:
      return e.size() == 2 && !orthomodular_at(l, e[0], e[1]);
    case WitnessKind::covering:
      return e.size() == 3 && !covering_at(l, e[0], e[1]) && detail::strictly_between(l, e[1], e[2], l.join(e[0], e[1]));
    case WitnessKind::exchange:
      return e.size() == 3 && !exchange_at(l, e[0], e[1], e[2]);
    case WitnessKind::atomistic:
      return e.size() == 1 && !atomistic_at(l, e[0]);
    case WitnessKind::sasaki:
      return e.size() == 2 && !l.leq(e[1], l.ortho(e[0])) && !l.is_atom(sasaki_lattice(l, e[0], e[1]));
    case WitnessKind::ortho_law:
      if (e.size() == 1) {
        const Element c = l.ortho(e[0]);
        return l.ortho(c) != e[0] || l.meet(e[0], c) != l.bottom() || l.join(e[0], c) != l.top();
      }
      return e.size() == 2 && l.leq(e[0], e[1]) && !l.leq(l.ortho(e[1]), l.ortho(e[0]));
    default:
      return false;
  }
}

// --- randomized product regularity trials ---

struct ProductTrial {
  OrthoSpace first;
  OrthoSpace second;
  std::size_t product_elements;
  bool product_regular;
  std::optional<SasakiWitness> first_witness;
};

/// Draws `trials` pairs of random Sasaki-regular, T1, nontrivial spaces with
/// at most `max_states` states each (deterministic in `seed`) and checks
/// Sasaki regularity of each separated product.
std::vector<ProductTrial> product_regularity_trials(std::uint64_t seed, std::size_t trials, std::size_t max_states = 6,
                                                    std::size_t cap = kDefaultCap);

}  // namespace seplat
