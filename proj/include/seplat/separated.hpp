#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "seplat/lattice.hpp"
#include "seplat/orthospace.hpp"

namespace seplat {

// Closed sets of the separated product of two antipodal (MO-type) spaces.
// Coordinates are state indices of the first and second component.
namespace sep {

struct Bottom {
  auto operator<=>(const Bottom&) const = default;
};
struct Top {
  auto operator<=>(const Top&) const = default;
};
/// {first} × Σ₂
struct Row {
  StateIndex first;
  auto operator<=>(const Row&) const = default;
};
/// Σ₁ × {second}
struct Col {
  StateIndex second;
  auto operator<=>(const Col&) const = default;
};
struct Point {
  StateIndex first;
  StateIndex second;
  auto operator<=>(const Point&) const = default;
};
/// {first} × Σ₂ ∪ Σ₁ × {second}
struct Butterfly {
  StateIndex first;
  StateIndex second;
  auto operator<=>(const Butterfly&) const = default;
};
/// Two points differing in both coordinates, lo < hi.
struct Pair {
  Point lo;
  Point hi;
  auto operator<=>(const Pair&) const = default;
};

}  // namespace sep

using SepElement = std::variant<sep::Bottom, sep::Top, sep::Row, sep::Col, sep::Point, sep::Butterfly, sep::Pair>;

/// T = {∅, Σ}, A1 = rows, A2 = columns, S = points, U = butterflies, P = pairs.
enum class Family { T, A1, A2, S, U, P };

Family family(const SepElement& e);
std::string to_string(Family f);

struct FamilyHistogram {
  std::array<std::size_t, 6> counts{};

  std::size_t& operator[](Family f) { return counts[static_cast<std::size_t>(f)]; }
  std::size_t operator[](Family f) const { return counts[static_cast<std::size_t>(f)]; }
  std::size_t total() const;
  /// "T=2 A1=4 A2=4 S=16 U=16 P=72"
  std::string render() const;
  bool operator==(const FamilyHistogram&) const = default;
};

/// Builds a Pair in canonical order; throws PreconditionError when the two
/// points share a coordinate.
sep::Pair make_pair(sep::Point a, sep::Point b);

/// The separated product of two antipodal spaces, with lattice operations
/// computed symbolically on family representatives.
class SeparatedProduct {
 public:
  /// Both components must be antipodal (every state has exactly one
  /// orthogonal partner); throws InvalidSpace otherwise.
  SeparatedProduct(OrthoSpace first, OrthoSpace second);

  const OrthoSpace& first() const noexcept { return first_; }
  const OrthoSpace& second() const noexcept { return second_; }
  /// The product orthogonality space Σ₁ × Σ₂.
  const OrthoSpace& space() const noexcept { return space_; }

  StateIndex antipode_first(StateIndex i) const { return anti1_[i]; }
  StateIndex antipode_second(StateIndex j) const { return anti2_[j]; }
  /// Either component has a single antipodal pair (trivial orthogonality).
  bool classical() const noexcept { return first_.size() == 2 || second_.size() == 2; }

  sep::Point point_of(StateIndex product_state) const;
  StateIndex state_of(sep::Point p) const { return product_index(second_, p.first, p.second); }

  StateSet denote(const SepElement& e) const;
  /// The element denoting `s`, or nullopt when `s` is not closed.
  std::optional<SepElement> classify(const StateSet& s) const;
  bool contains(const SepElement& e, sep::Point p) const;

  SepElement perp(const SepElement& e) const;
  SepElement meet(const SepElement& a, const SepElement& b) const;
  SepElement join(const SepElement& a, const SepElement& b) const;
  /// φ_M(p) = ({p} ∪ M^⊥)^⊥⊥ ∩ M. Throws PreconditionError when p ∈ M^⊥.
  SepElement sasaki(const SepElement& m, sep::Point p) const;

  /// The set {(p1*,q2*),(q1*,q2*)}: the perp of a pair with the second
  /// coordinates left uncrossed. Kept for comparison with the true perp.
  StateSet uncrossed_pair_perp(const sep::Pair& pair) const;

  /// Every closed set, family by family.
  std::vector<SepElement> elements() const;
  FamilyHistogram expected_histogram() const;

  std::string render(const SepElement& e) const;
  std::string render(sep::Point p) const;

 private:
  OrthoSpace first_;
  OrthoSpace second_;
  OrthoSpace space_;
  std::vector<StateIndex> anti1_;
  std::vector<StateIndex> anti2_;
};

struct OracleReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t brute_elements = 0;
  std::size_t symbolic_elements = 0;
  FamilyHistogram histogram;  // of the brute-force closed sets
  std::size_t perp_checks = 0;
  std::size_t meet_checks = 0;
  std::size_t join_checks = 0;
  std::size_t sasaki_checks = 0;
  std::size_t pair_perp_instances = 0;
  std::size_t pair_perp_crossed_matches = 0;
  std::size_t pair_perp_uncrossed_matches = 0;
  bool ok = false;
  std::string counterexample;  // empty when ok
};

/// Compares the symbolic engine for MO(m) ⊗ MO(n) against brute-force
/// enumeration: bijection of closed sets plus pointwise agreement of perp,
/// meet, join and Sasaki maps. Stops at the first disagreement.
OracleReport oracle_equivalence(std::size_t m, std::size_t n, std::size_t cap = kDefaultCap);

inline constexpr std::size_t kMaxOracleComponent = 4;

}  // namespace seplat
