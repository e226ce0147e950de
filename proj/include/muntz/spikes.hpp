#pragma once

#include <cstddef>
#include <vector>

#include "muntz/exponents.hpp"
#include "muntz/functional.hpp"
#include "muntz/polynomial.hpp"

namespace muntz {

// p(x) = x^alpha - x^beta with 0 <= alpha < beta. Nonnegative on [0,1],
// vanishing at both ends and unimodal when alpha > 0.
class SpikeFunction {
 public:
  SpikeFunction(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  // exp(-alpha t) * (-expm1(-(beta-alpha) t)): no cancellation near x = 1.
  double value(PointT at) const;
  double value_t(double t) const { return value(PointT::from_t(t)); }

  MuntzPolynomial polynomial() const;

 private:
  double alpha_;
  double beta_;
};

// Spike of the k-th consecutive pair of `seq`, 1-based:
// pair k is (values[k-1], values[k]).
SpikeFunction spike_at(const ExponentSequence& seq, std::size_t k);

struct SpikeProfile {
  double alpha = 0.0;
  double beta = 0.0;
  PointT argmax;                      // unique maximizer when alpha > 0
  double norm = 0.0;                  // p(argmax)
  double y_lower_bound = 0.0;         // (beta-alpha)^{-1/(beta-alpha)}
  bool y_bound_valid = false;         // argmax >= y is guaranteed for alpha > 3
  bool quarter_bound_applies = false; // beta >= 2 alpha, forcing norm >= 1/4
  bool alpha_zero_edge = false;       // monotone edge case, norm 1 at x = 0
};

// Closed-form argmax x = (alpha/beta)^{1/(beta-alpha)}, evaluated in the
// t-domain as t = ln(beta/alpha)/(beta-alpha), with the norm at that point.
SpikeProfile profile(const SpikeFunction& s);

struct Interval {
  PointT a;  // left endpoint in x (larger t)
  PointT b;  // right endpoint in x (smaller t)
};

// The superlevel set {p > level} for 0 < level < norm, an interval by
// unimodality. Each endpoint comes from monotone bisection on its side of
// the argmax. Throws EmptyInterval when level >= norm.
Interval superlevel_interval(const SpikeFunction& s, double level);

struct QuarterBoundCheck {
  bool applicable = false;  // requires beta >= 2 alpha > 0
  bool holds = false;
  PointT witness;           // the point where x^alpha = 1/2
  double value = 0.0;       // p(witness), >= 1/4 when applicable
};

// Executable form of the norm lower bound: at the point where x^alpha = 1/2,
// p dominates x^alpha - x^{2 alpha} = 1/4.
QuarterBoundCheck quarter_lower_bound_check(const SpikeFunction& s);

// |mu(p_k / ||p_k||)| for k = 1..k_max over consecutive pairs of an RIP
// sequence. Atoms at x = 1 contribute exactly 0. k_max is clamped to the
// number of stored pairs.
std::vector<double> weak_null_trace(const ExponentSequence& seq,
                                    const DiscreteFunctional& functional,
                                    std::size_t k_max);

}  // namespace muntz
