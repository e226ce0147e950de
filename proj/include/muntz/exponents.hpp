#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "muntz/errors.hpp"

namespace muntz {

struct GeometricFamily {
  double base;        // >= 2
  double scale = 1.0; // > 0
  long start = 1;     // first power, values[i] = scale * base^(start + i)
};

// Finite prefix of a strictly increasing sequence of non-negative exponents.
class ExponentSequence {
 public:
  // Empty placeholder; real sequences come from the factories below.
  ExponentSequence() = default;

  static ExponentSequence from_values(std::vector<double> values);

  // Members computed in extended precision, rounded once to double, so that
  // e.g. base 2 with scale 1 is exact up to 2^1023.
  static ExponentSequence geometric(double base, std::size_t count,
                                    double scale = 1.0, long start = 1);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double front() const { return values_.front(); }
  double back() const { return values_.back(); }

  const std::optional<GeometricFamily>& family() const noexcept { return family_; }

  // Index of the first strictly positive exponent (at most 1, since the
  // values are strictly increasing and non-negative).
  std::size_t origin_offset() const noexcept { return origin_offset_; }

  ExponentSequence prefix(std::size_t count) const;

 private:
  ExponentSequence(std::vector<double> values, std::optional<GeometricFamily> family);

  std::vector<double> values_;
  std::optional<GeometricFamily> family_;
  std::size_t origin_offset_ = 0;
};

// Rapid Increase Property: values[k+1] >= 2 values[k] for every pair.
// Ties count as rapid. Sequences shorter than 2 are rejected.
bool is_rip(const ExponentSequence& seq);

// Greedy RIP subsequence: starts at the first strictly positive value
// (zero is never selected), then repeatedly takes the smallest index whose
// value at least doubles the previous pick. Throws InsufficientSequence,
// carrying the achieved length, when `count` picks do not fit the prefix.
std::vector<std::size_t> extract_rip_subsequence(const ExponentSequence& seq,
                                                 std::size_t count);

struct MuntzSum {
  double partial_sum = 0.0;  // sum of 1/lambda over stored positive values
  // Bound on the continuation sum from the last stored exponent onward
  // (inclusive), 2/lambda_last; present when the prefix has the RIP.
  std::optional<double> rip_tail_bound;
};

MuntzSum muntz_partial_sum(const ExponentSequence& seq);

// CLI mini-language:
//   geometric:<base>[:scale=<s>][:start=<k0>]
//   list:<v1>,<v2>,...
// `family_count` is the number of values materialized for family specs;
// explicit lists keep their own length.
ExponentSequence parse_sequence_spec(const std::string& spec, std::size_t family_count);

}  // namespace muntz
