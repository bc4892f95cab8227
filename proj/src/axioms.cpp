#include "seplat/axioms.hpp"

#include "seplat/random_spaces.hpp"

namespace seplat {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::orthomodularity: return "orthomodularity";
    case WitnessKind::covering: return "covering";
    case WitnessKind::exchange: return "exchange";
    case WitnessKind::atomistic: return "atomistic";
    case WitnessKind::sasaki: return "sasaki";
    case WitnessKind::superselection: return "superselection";
    case WitnessKind::ortho_law: return "ortho_law";
  }
  return "unknown";
}

namespace {

bool degenerate_top(const PropertyLattice& l) { return l.space().size() > 1 && l.is_atom(l.top()); }

}  // namespace

CheckResult check_atomistic(const PropertyLattice& l) {
  if (auto w = check_atomistic<PropertyLattice>(l)) return w;
  if (degenerate_top(l))
    return Witness{WitnessKind::atomistic, {l.top()},
                   l.label(l.top()) + " has no atoms strictly below it; no singleton is closed"};
  return std::nullopt;
}

StateSet sasaki_state(const PropertyLattice& l, Element m, StateIndex p) {
  const auto& space = l.space();
  StateSet seed = perp(space, l.set(m));
  seed.insert(p);
  return closure(space, seed) & l.set(m);
}

SasakiReport check_sasaki_regular(const PropertyLattice& l, bool stop_at_first) {
  SasakiReport r;
  const auto& space = l.space();
  for (Element m = 0; m < l.size(); ++m) {
    const StateSet& mperp = l.set(l.ortho(m));
    for (StateIndex p = 0; p < space.size(); ++p) {
      if (mperp.contains(p)) continue;
      auto image = sasaki_state(l, m, p);
      if (image.count() != 1) {
        r.witnesses.push_back({m, p, std::move(image)});
        if (stop_at_first) {
          r.regular = false;
          return r;
        }
      }
    }
  }
  r.regular = r.witnesses.empty();
  return r;
}

Witness to_witness(const PropertyLattice& l, const SasakiWitness& w) {
  return Witness{WitnessKind::sasaki,
                 {w.m, w.p},
                 "phi_M(p) with M=" + l.label(w.m) + ", p=" + l.space().name(w.p) + " is " +
                     l.space().render(w.image) + ", not a single state"};
}

std::vector<SuperselectedPair> superselection_pairs(const PropertyLattice& l) {
  std::vector<SuperselectedPair> out;
  const auto& atoms = l.atoms();
  for (std::size_t i = 0; i < atoms.size(); ++i)
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      const Element a = atoms[i];
      const Element b = atoms[j];
      if (l.set(l.join(a, b)) == (l.set(a) | l.set(b))) out.push_back({a, b, l.leq(a, l.ortho(b))});
    }
  return out;
}

bool reverify(const PropertyLattice& l, const Witness& w) {
  const auto& e = w.elements;
  switch (w.kind) {
    case WitnessKind::sasaki:
      return e.size() == 2 && e[0] < l.size() && e[1] < l.space().size() &&
             !l.set(l.ortho(e[0])).contains(e[1]) && sasaki_state(l, e[0], e[1]).count() != 1;
    case WitnessKind::atomistic:
      return e.size() == 1 && (!atomistic_at(l, e[0]) || (e[0] == l.top() && degenerate_top(l)));
    default:
      for (auto x : e)
        if (x >= l.size()) return false;
      return reverify_generic(l, w);
  }
}

std::vector<ProductTrial> product_regularity_trials(std::uint64_t seed, std::size_t trials, std::size_t max_states,
                                                    std::size_t cap) {
  SpaceRng rng(seed);
  std::vector<ProductTrial> out;
  out.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) {
    auto s1 = random_regular_t1_space(rng, max_states);
    auto s2 = random_regular_t1_space(rng, max_states);
    const auto l = PropertyLattice::from_space(product_space(s1, s2), cap);
    auto report = check_sasaki_regular(l, true);
    std::optional<SasakiWitness> first;
    if (!report.witnesses.empty()) first = report.witnesses.front();
    out.push_back({std::move(s1), std::move(s2), l.size(), report.regular, std::move(first)});
  }
  return out;
}

}  // namespace seplat
