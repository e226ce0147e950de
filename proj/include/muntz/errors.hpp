#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace muntz {

// Malformed argument: bad domain, non-finite input, broken invariant.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A construction ran out of stored exponents before reaching its target.
class InsufficientSequence : public std::runtime_error {
 public:
  InsufficientSequence(const std::string& what, std::size_t achieved)
      : std::runtime_error(what), achieved_(achieved) {}
  std::size_t achieved() const noexcept { return achieved_; }

 private:
  std::size_t achieved_;
};

// The derivative scan saw more sign changes than its coefficient signs allow.
class NumericalInconsistency : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bisection or refinement could not reach the requested tolerance.
class ToleranceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Superlevel query at or above the function's maximum.
class EmptyInterval : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A certificate condition came out false while building.
class ConstructionFailure : public std::runtime_error {
 public:
  ConstructionFailure(const std::string& what, std::string condition, double at_x)
      : std::runtime_error(what), condition_(std::move(condition)), at_x_(at_x) {}
  const std::string& condition() const noexcept { return condition_; }
  double at_x() const noexcept { return at_x_; }

 private:
  std::string condition_;
  double at_x_;
};

}  // namespace muntz
