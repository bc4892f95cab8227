#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace seplat {

/// Invalid input to a constructor (duplicate names, unknown names, ...).
class InvalidSpace : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The closed-set family is larger than the configured element cap.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap)
      : std::runtime_error("closed-set family exceeds the cap of " + std::to_string(cap) + " elements"),
        cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// An operation was called outside its domain.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kDefaultCap = 100000;

}  // namespace seplat
