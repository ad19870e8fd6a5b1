#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fb {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (graph, word, permutation).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition of an operation does not hold (bad generator index,
/// non-reduced word, sequences of different elements, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An enumeration grew past its configured limit. Never a silent truncation:
/// the partial count reached before giving up is reported.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t partial, std::size_t cap)
      : Error(what + " (reached " + std::to_string(partial) + ", cap " +
              std::to_string(cap) + ")"),
        partial_(partial),
        cap_(cap) {}

  std::size_t partial() const noexcept { return partial_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t partial_;
  std::size_t cap_;
};

}  // namespace fb
