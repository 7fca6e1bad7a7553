#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symbez {

/// Malformed polynomial text. `position` is a 0-based byte offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// The inputs share a common factor, so the intersection is not finite.
class CommonFactorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Root finding, point assembly or orbit matching failed numerically.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A configured size cap was exceeded.
class CapExceededError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A point set that should be invariant under the group is missing an image.
class NotClosedError : public std::runtime_error {
 public:
  NotClosedError(const std::string& permutation, const std::string& point)
      : std::runtime_error("point set not closed under the group: image of " + point + " under " + permutation +
                           " is missing"),
        permutation_(permutation),
        point_(point) {}
  const std::string& permutation() const { return permutation_; }
  const std::string& point() const { return point_; }

 private:
  std::string permutation_;
  std::string point_;
};

}  // namespace symbez
