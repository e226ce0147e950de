#include "muntz/spikes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace muntz {

SpikeFunction::SpikeFunction(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta))
    throw InvalidInput("SpikeFunction: exponents must be finite");
  if (alpha < 0.0 || !(alpha < beta))
    throw InvalidInput("SpikeFunction: need 0 <= alpha < beta");
}

double SpikeFunction::value(PointT at) const {
  const double t = at.t();
  if (std::isinf(t)) return alpha_ == 0.0 ? 1.0 : 0.0;
  return std::exp(-alpha_ * t) * -std::expm1(-(beta_ - alpha_) * t);
}

MuntzPolynomial SpikeFunction::polynomial() const {
  return MuntzPolynomial({Term{alpha_, 1.0}, Term{beta_, -1.0}});
}

SpikeFunction spike_at(const ExponentSequence& seq, std::size_t k) {
  if (k < 1 || k + 1 > seq.size())
    throw InvalidInput("spike_at: pair index out of range");
  return SpikeFunction(seq[k - 1], seq[k]);
}

SpikeProfile profile(const SpikeFunction& s) {
  SpikeProfile out;
  out.alpha = s.alpha();
  out.beta = s.beta();
  const double gap = s.beta() - s.alpha();
  out.y_lower_bound = std::exp(-std::log(gap) / gap);
  out.quarter_bound_applies = s.beta() >= 2.0 * s.alpha();

  if (s.alpha() == 0.0) {
    // Monotone edge case: 1 - x^beta decreases from 1 at x = 0.
    out.alpha_zero_edge = true;
    out.argmax = PointT::from_x(0.0);
    out.norm = 1.0;
    out.y_bound_valid = false;
    return out;
  }

  const double t_bar = std::log(s.beta() / s.alpha()) / gap;
  out.argmax = PointT::from_t(t_bar);
  out.norm = s.value(out.argmax);
  // x_bar >= y needs the rapid-increase context: it reduces to
  // beta >= alpha^2/(alpha-1), which beta >= 2 alpha supplies once alpha > 3.
  out.y_bound_valid = s.alpha() > 3.0 && s.beta() >= 2.0 * s.alpha();
  return out;
}

Interval superlevel_interval(const SpikeFunction& s, double level) {
  if (s.alpha() == 0.0)
    throw InvalidInput("superlevel_interval: needs alpha > 0 (interior peak)");
  if (!(level > 0.0)) throw InvalidInput("superlevel_interval: level must be > 0");
  const SpikeProfile prof = profile(s);
  if (level >= prof.norm) {
    std::ostringstream msg;
    msg << "superlevel_interval: level " << level << " >= norm " << prof.norm;
    throw EmptyInterval(msg.str());
  }

  const double t_bar = prof.argmax.t();
  const double eps = std::numeric_limits<double>::epsilon();

  // p - level is monotone on each side of the peak; plain bisection.
  const auto bisect = [&](double lo, double hi, bool above_at_lo) {
    for (int iter = 0; iter < 200; ++iter) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      const bool above = s.value_t(mid) > level;
      if (above == above_at_lo)
        lo = mid;
      else
        hi = mid;
      if (hi - lo <= 4.0 * eps * hi) break;
    }
    return 0.5 * (lo + hi);
  };

  // Right endpoint b: t in (0, t_bar), p(0) = 0 < level < p(t_bar).
  const double t_b = bisect(0.0, t_bar, false);
  // Left endpoint a: t in (t_bar, T) with p(T) < level since p <= e^{-alpha t}.
  double t_hi = std::log(2.0 / level) / s.alpha();
  while (s.value_t(t_hi) > level) t_hi *= 2.0;  // safety for extreme levels
  const double t_a = bisect(t_bar, t_hi, true);

  return Interval{PointT::from_t(t_a), PointT::from_t(t_b)};
}

QuarterBoundCheck quarter_lower_bound_check(const SpikeFunction& s) {
  QuarterBoundCheck out;
  out.applicable = s.alpha() > 0.0 && s.beta() >= 2.0 * s.alpha();
  if (!out.applicable) return out;
  // At x_w with x_w^alpha = 1/2: p(x_w) = 1/2 - x_w^beta >= 1/2 - 1/4.
  out.witness = PointT::from_t(std::log(2.0) / s.alpha());
  out.value = s.value(out.witness);
  out.holds = out.value >= 0.25 - 1e-12;
  return out;
}

std::vector<double> weak_null_trace(const ExponentSequence& seq,
                                    const DiscreteFunctional& functional,
                                    std::size_t k_max) {
  if (!is_rip(seq)) throw InvalidInput("weak_null_trace: sequence must have the RIP");
  const std::size_t pairs = seq.size() - 1;
  const std::size_t k_end = std::min(k_max, pairs);
  std::vector<double> trace;
  trace.reserve(k_end);
  for (std::size_t k = 1; k <= k_end; ++k) {
    const SpikeFunction spike = spike_at(seq, k);
    const SpikeProfile prof = profile(spike);
    const MuntzPolynomial normalized = spike.polynomial().scaled(1.0 / prof.norm);
    trace.push_back(std::fabs(functional(normalized)));
  }
  return trace;
}

}  // namespace muntz
