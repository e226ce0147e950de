#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "muntz/exponents.hpp"
#include "muntz/spikes.hpp"

namespace muntz {

// One stage of the construction: the n-th basis vector together with the
// interval where it is nearly extremal.
struct C0Pick {
  std::size_t n = 0;      // stage number, 1-based
  std::size_t k = 0;      // spike pair index into the sequence
  double alpha = 0.0;
  double beta = 0.0;
  double scale = 0.0;     // (1 - 2^{-n}) / ||p_k||, so f_n = scale * p_k
  double level = 0.0;     // f_n > level defines I_n, level = 2^{-2n}
  Interval interval;      // I_n
  double spike_norm = 0.0;
  PointT spike_argmax;
};

struct C0Certificate {
  ExponentSequence exponents;       // prefix actually consumed by the search
  std::vector<C0Pick> picks;
  std::vector<MuntzPolynomial> functions;  // f_n, term-merged
  double tol = 0.0;
  std::vector<std::size_t> rejected;       // spike indices the greedy scan skipped
  double muntz_partial_sum = 0.0;
  std::optional<double> rip_tail_bound;
};

// Greedy construction: f_1 = (1/2) p_1/||p_1||, then the smallest k_n > k_{n-1}
// whose interval clears b_{n-1} and on whose left endpoint all earlier f_j are
// below 2^{-2n}. Throws InsufficientSequence when the stored prefix runs out.
C0Certificate c0_build(const ExponentSequence& seq, std::size_t count,
                       const SupNormOptions& opts = {});

// Minimum margin observed for one of the construction's conditions; >= 0 (up
// to tol) means the condition held everywhere it was sampled.
struct ConditionMargin {
  std::string condition;   // "i".."v"
  double margin = 0.0;
  bool holds = false;
  PointT worst_point;
  std::size_t stage = 0;   // n at which the worst margin occurred
};

struct C0ConditionsReport {
  std::vector<ConditionMargin> conditions;
  std::size_t grid_points = 0;
  bool all_hold = false;
};

// Re-checks (i)-(v) from the certificate alone on geometric t-grids of at
// least grid_points per interval (plus the gaps between intervals).
C0ConditionsReport verify_conditions(const C0Certificate& cert,
                                     std::size_t grid_points = 100000,
                                     const SupNormOptions& opts = {});

struct C0Trial {
  std::string tag;                    // "e_3", "ones", "alternating", "random_17"
  std::vector<double> coefficients;   // sup |t| = 1
  double norm = 0.0;                  // ||sum t_n f_n||
  bool within = false;                // 1/4 - tol <= norm <= 1 + tol
};

struct C0InequalityReport {
  double m = 0.25;
  double M = 1.0;
  std::vector<C0Trial> trials;
  std::vector<double> basis_norms;    // ||f_n||, expected 1 - 2^{-n}
  double worst_basis_norm_error = 0.0;
  double min_norm = 0.0;
  double max_norm = 0.0;
  std::uint64_t seed = 0;
  bool all_within = false;
};

// Exercises m sup|t| <= ||sum t_n f_n|| <= M sup|t| on the canonical basis
// vectors, the all-ones and alternating-sign vectors, and `trials` seeded
// random vectors with entries in [-1, 1] rescaled to sup-norm 1.
C0InequalityReport verify_c0_inequalities(const C0Certificate& cert,
                                          std::size_t trials = 1000,
                                          std::uint64_t seed = 42,
                                          const SupNormOptions& opts = {});

}  // namespace muntz
