#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace seplat {

using StateIndex = std::size_t;

/// A subset of the states {0, ..., universe-1} of some orthogonality space.
///
/// Stored as a packed bitset. Equality is extensional and includes the
/// universe size, so sets over different spaces never compare equal.
class StateSet {
 public:
  StateSet() = default;
  explicit StateSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static StateSet full(std::size_t universe) {
    StateSet s(universe);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    s.trim();
    return s;
  }

  static StateSet of(std::size_t universe, std::initializer_list<StateIndex> members) {
    StateSet s(universe);
    for (auto m : members) s.insert(m);
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(StateIndex i) const noexcept {
    return i < universe_ && ((words_[i / 64] >> (i % 64)) & 1u);
  }
  void insert(StateIndex i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void erase(StateIndex i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_full() const noexcept { return count() == universe_; }

  bool is_subset_of(const StateSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }
  bool intersects(const StateSet& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & other.words_[k]) return true;
    return false;
  }

  StateSet& operator&=(const StateSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= o.words_[k];
    return *this;
  }
  StateSet& operator|=(const StateSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= o.words_[k];
    return *this;
  }
  StateSet& operator-=(const StateSet& o) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~o.words_[k];
    return *this;
  }
  friend StateSet operator&(StateSet a, const StateSet& b) { return a &= b; }
  friend StateSet operator|(StateSet a, const StateSet& b) { return a |= b; }
  friend StateSet operator-(StateSet a, const StateSet& b) { return a -= b; }

  StateSet complement() const {
    StateSet c = *this;
    for (auto& w : c.words_) w = ~w;
    c.trim();
    return c;
  }

  /// Calls f(i) for every member in increasing index order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        const int bit = std::countr_zero(w);
        f(k * 64 + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }

  std::vector<StateIndex> members() const {
    std::vector<StateIndex> out;
    out.reserve(count());
    for_each([&](StateIndex i) { out.push_back(i); });
    return out;
  }

  bool operator==(const StateSet&) const = default;

  std::size_t hash() const noexcept {
    std::size_t h = std::hash<std::size_t>{}(universe_);
    for (auto w : words_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }

 private:
  void trim() {
    if (universe_ % 64 != 0 && !words_.empty())
      words_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Cardinality first, then lexicographic on the ascending member lists.
bool canonical_less(const StateSet& a, const StateSet& b);

struct StateSetHash {
  std::size_t operator()(const StateSet& s) const noexcept { return s.hash(); }
};

}  // namespace seplat
