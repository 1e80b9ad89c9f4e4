#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Bad caller input: malformed words, out-of-range vertices, bad parameters.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A lifted path left the cube {0..s}^m.
class BoundError : public ValidationError {
 public:
  BoundError(const std::string& what, std::size_t prefix_letters)
      : ValidationError(what), prefix_letters_(prefix_letters) {}

  /// Number of letters of the word read when the path left the cube.
  std::size_t prefix_letters() const { return prefix_letters_; }

 private:
  std::size_t prefix_letters_;
};

/// Two independent computations disagreed, or an internal identity failed.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace raag
