#include "seplat/random_spaces.hpp"

#include <string>
#include <utility>
#include <vector>

#include "seplat/axioms.hpp"
#include "seplat/lattice.hpp"

namespace seplat {

OrthoSpace random_space(SpaceRng& rng, std::size_t states) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < states; ++i) names.push_back("s" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < states; ++i)
    for (std::size_t j = i + 1; j < states; ++j)
      if (rng.coin()) pairs.emplace_back(names[i], names[j]);
  return OrthoSpace::make(std::move(names), pairs);
}

OrthoSpace random_t1_space(SpaceRng& rng, std::size_t max_states) {
  for (;;) {
    auto s = random_space(rng, rng.between(2, max_states));
    if (is_t1(s)) return s;
  }
}

OrthoSpace random_regular_t1_space(SpaceRng& rng, std::size_t max_states) {
  for (;;) {
    auto s = random_space(rng, rng.between(2, max_states));
    if (!is_t1(s) || !is_nontrivial(s)) continue;
    const auto l = PropertyLattice::from_space(s);
    if (check_sasaki_regular(l, true).regular) return s;
  }
}

StateSet random_subset(SpaceRng& rng, const OrthoSpace& space) {
  StateSet s(space.size());
  for (StateIndex i = 0; i < space.size(); ++i)
    if (rng.coin()) s.insert(i);
  return s;
}

}  // namespace seplat
