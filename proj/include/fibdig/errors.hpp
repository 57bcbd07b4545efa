#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fibdig {

/// Thrown when a construction or search would exceed a configured resource cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by diameter() when some ordered pair has no directed walk.
class NotStronglyConnected : public std::runtime_error {
 public:
  NotStronglyConnected(std::size_t from, std::size_t to, const std::string& what)
      : std::runtime_error(what), from_(from), to_(to) {}

  std::size_t from() const noexcept { return from_; }
  std::size_t to() const noexcept { return to_; }

 private:
  std::size_t from_;
  std::size_t to_;
};

/// An internal cross-check disagreed; this is a bug in the library, not bad input.
class LibraryDefect : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

namespace caps {
inline constexpr std::size_t kWordEnumeration = 10'000'000;
inline constexpr std::size_t kIsomorphismOrder = 5000;
inline constexpr std::size_t kCharPolyOrder = 3000;
inline constexpr std::size_t kCycleWorkBudget = 100'000'000;
}  // namespace caps

}  // namespace fibdig
