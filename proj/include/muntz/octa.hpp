#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "muntz/exponents.hpp"
#include "muntz/functional.hpp"
#include "muntz/polynomial.hpp"
#include "muntz/spikes.hpp"

namespace muntz {

// A slice S(mu, epsilon) = {f in the unit ball : mu(f) > 1 - epsilon},
// together with a witness certifying it is non-empty.
struct SliceSpec {
  DiscreteFunctional functional;
  double epsilon = 0.0;     // in (0, 1)
  MuntzPolynomial witness;  // g with ||g|| <= 1 and mu(g) > 1 - epsilon
};

struct SliceValidation {
  double witness_norm = 0.0;
  double witness_value = 0.0;   // mu(g)
  double margin = 0.0;          // mu(g) - (1 - epsilon)
  bool ok = false;
};

// Checks the SliceSpec invariants: ||g|| <= 1 + tol and mu(g) > 1 - epsilon.
SliceValidation validate_slice(const SliceSpec& slice,
                               const SupNormOptions& opts = {});

// h+ = g + (1 - g(x_k)) p/||p||, h- = g - (1 + g(x_k)) p/||p|| with x_k the
// spike argmax, so h+(x_k) = 1 and h-(x_k) = -1 exactly.
std::pair<MuntzPolynomial, MuntzPolynomial> build_perturbations(
    const MuntzPolynomial& g, const SpikeFunction& spike);

// Diagnostics for one slice at one candidate k.
struct SliceCheck {
  std::size_t slice = 0;
  double norm_plus = 0.0;        // ||h+||
  double norm_minus = 0.0;       // ||h-||
  double member_plus = 0.0;      // mu(h+)/(1+2 eps)
  double member_minus = 0.0;     // mu(h-)/(1+2 eps)
  double oscillation = 0.0;      // osc of g over (a_k, b_k)
  double margin = 0.0;           // min slack across the checks, >= 0 when ok
  bool ok = false;
};

struct FindKReport {
  bool found = false;
  std::size_t k = 0;                // smallest qualifying index when found
  std::vector<SliceCheck> checks;   // at k when found, else at best_k
  std::size_t best_k = 0;           // candidate with the largest min margin
  double best_margin = 0.0;
  std::size_t k_max = 0;
};

// Scans k = 1..k_max for the smallest index where every slice passes both the
// norm bound ||h_k^{j+-}|| <= 1 + 2 eps + tol and the scaled membership
// mu_j(h/(1+2 eps)) > 1 - eps_j. The norm bound is established via the
// proof's case split: oscillation of g^j over (a_k, b_k) below eps, then a
// direct sup-norm evaluation as the executable check.
FindKReport find_K(const std::vector<SliceSpec>& slices, double eps,
                   const ExponentSequence& seq, std::size_t k_max,
                   const SupNormOptions& opts = {});

struct OctaCertificate {
  std::vector<SliceSpec> slices;
  std::vector<double> weights;       // mu_j > 0, sum = 1
  double eps = 0.0;
  ExponentSequence exponents;
  std::size_t chosen_k = 0;
  double spike_alpha = 0.0;
  double spike_beta = 0.0;
  PointT spike_argmax;
  std::vector<std::pair<MuntzPolynomial, MuntzPolynomial>> perturbations;
  double scale = 0.0;               // 1/(1 + 2 eps)
  double separation = 0.0;          // >= 2/(1 + 2 eps) when verified
  double u_plus_norm = 0.0;         // ||u+||, must be <= 1 (+tol)
  double u_minus_norm = 0.0;
  std::vector<SliceCheck> membership;
  double tol = 0.0;
  bool verified = false;
};

// Runs find_K, forms u+- = scale * sum_j mu_j h_k^{j+-}, and certifies
// ||u+ - u-|| >= (u+ - u-)(x_k) = 2/(1 + 2 eps) with both u+- in the ball and
// every slice entered after scaling. Throws InsufficientSequence when no
// k <= k_max qualifies.
OctaCertificate diameter_certificate(const std::vector<SliceSpec>& slices,
                                     const std::vector<double>& weights,
                                     double eps, const ExponentSequence& seq,
                                     std::size_t k_max,
                                     const SupNormOptions& opts = {});

struct WitnessSearch {
  std::optional<MuntzPolynomial> witness;
  double best_value = 0.0;   // largest mu(g) reached over ||g|| = 1 candidates
  std::size_t steps = 0;
};

// Coordinate ascent over coefficient vectors supported on at most `budget`
// exponents of seq, re-normalized to sup-norm 1 after each step; stops at the
// first g with mu(g) > 1 - epsilon. not-found is a value, not an error.
WitnessSearch witness_finder(const DiscreteFunctional& functional,
                             double epsilon, const ExponentSequence& seq,
                             std::size_t budget,
                             const SupNormOptions& opts = {});

}  // namespace muntz
