#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "seplat/orthospace.hpp"

namespace seplat {

/// Deterministic across standard libraries: only the raw mt19937_64 stream
/// is used, never the implementation-defined distributions.
class SpaceRng {
 public:
  explicit SpaceRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) { return lo + static_cast<std::size_t>(next() % (hi - lo + 1)); }
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// States s0..s{n-1}; each unordered pair is orthogonal with probability 1/2.
OrthoSpace random_space(SpaceRng& rng, std::size_t states);

/// Rejection-samples a T1 space with between 2 and max_states states.
OrthoSpace random_t1_space(SpaceRng& rng, std::size_t max_states);

/// Rejection-samples a T1, nontrivial, Sasaki-regular space with between 2
/// and max_states states.
OrthoSpace random_regular_t1_space(SpaceRng& rng, std::size_t max_states);

/// A uniformly random subset of the space's states.
StateSet random_subset(SpaceRng& rng, const OrthoSpace& space);

}  // namespace seplat
