#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace flipforge {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument violates an operation's domain: an invalid triangulation,
/// a word outside the requested evaluation class, a non-simple coloring
/// where a simple one is required, and so on.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A configured search bound (state count, class size, backtracking nodes)
/// was reached before the search completed.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t reached)
      : Error(what + " (cap " + std::to_string(reached) + " reached)"), reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

}  // namespace flipforge
