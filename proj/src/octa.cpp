#include "muntz/octa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace muntz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Inclusive geometric grid used by the oscillation check.
std::vector<double> closed_grid(double lo, double hi, int interior) {
  std::vector<double> grid;
  grid.reserve(interior + 2);
  grid.push_back(lo);
  const double span = std::log(hi / lo);
  for (int j = 1; j <= interior; ++j)
    grid.push_back(lo * std::exp(span * static_cast<double>(j) /
                                 static_cast<double>(interior + 1)));
  grid.push_back(hi);
  return grid;
}

}  // namespace

SliceValidation validate_slice(const SliceSpec& slice, const SupNormOptions& opts) {
  if (!(slice.epsilon > 0.0) || !(slice.epsilon < 1.0))
    throw InvalidInput("validate_slice: epsilon must lie in (0,1)");
  SliceValidation v;
  v.witness_norm = sup_norm(slice.witness, opts).value;
  v.witness_value = slice.functional(slice.witness);
  v.margin = v.witness_value - (1.0 - slice.epsilon);
  v.ok = v.witness_norm <= 1.0 + std::max(opts.tol, 1e-12) && v.margin > 0.0;
  return v;
}

std::pair<MuntzPolynomial, MuntzPolynomial> build_perturbations(
    const MuntzPolynomial& g, const SpikeFunction& spike) {
  const SpikeProfile prof = profile(spike);
  if (prof.alpha_zero_edge)
    throw InvalidInput("build_perturbations: spike needs alpha > 0");
  const double gx = g.eval(prof.argmax);
  const MuntzPolynomial normalized = spike.polynomial().scaled(1.0 / prof.norm);
  return {g + normalized.scaled(1.0 - gx), g - normalized.scaled(1.0 + gx)};
}

FindKReport find_K(const std::vector<SliceSpec>& slices, double eps,
                   const ExponentSequence& seq, std::size_t k_max,
                   const SupNormOptions& opts) {
  if (slices.empty()) throw InvalidInput("find_K: need at least one slice");
  if (!(eps > 0.0) || !(eps < 1.0))
    throw InvalidInput("find_K: eps must lie in (0,1)");
  if (k_max == 0) throw InvalidInput("find_K: k_max must be >= 1");
  if (!is_rip(seq) || !(seq.front() > 0.0))
    throw InvalidInput("find_K: sequence must be RIP with positive exponents");
  for (std::size_t j = 0; j < slices.size(); ++j)
    if (!validate_slice(slices[j], opts).ok) {
      std::ostringstream msg;
      msg << "find_K: slice " << (j + 1)
          << " fails its invariant (witness norm or membership)";
      throw InvalidInput(msg.str());
    }

  FindKReport report;
  report.k_max = k_max;
  report.best_margin = -kInf;
  const double denom = 1.0 + 2.0 * eps;
  const double norm_cap = 1.0 + 2.0 * eps + opts.tol;
  const std::size_t k_end = std::min(k_max, seq.size() - 1);

  for (std::size_t k = 1; k <= k_end; ++k) {
    const SpikeFunction spike = spike_at(seq, k);
    const SpikeProfile prof = profile(spike);
    // (a_k, b_k): where the normalized spike exceeds eps.
    const Interval ab = superlevel_interval(spike, eps * prof.norm);
    const auto osc_samples = closed_grid(ab.b.t(), ab.a.t(), 1024);

    std::vector<SliceCheck> checks;
    checks.reserve(slices.size());
    bool all_ok = true;
    double min_margin = kInf;

    for (std::size_t j = 0; j < slices.size(); ++j) {
      const SliceSpec& slice = slices[j];
      SliceCheck c;
      c.slice = j + 1;

      double g_min = kInf, g_max = -kInf;
      for (double t : osc_samples) {
        const double v = slice.witness.eval_t(t);
        g_min = std::min(g_min, v);
        g_max = std::max(g_max, v);
      }
      c.oscillation = g_max - g_min;

      const auto [h_plus, h_minus] = build_perturbations(slice.witness, spike);
      c.norm_plus = sup_norm(h_plus, opts).value;
      c.norm_minus = sup_norm(h_minus, opts).value;
      c.member_plus = slice.functional(h_plus) / denom;
      c.member_minus = slice.functional(h_minus) / denom;

      const double thresh = 1.0 - slice.epsilon;
      c.margin = std::min({eps - c.oscillation, norm_cap - c.norm_plus,
                           norm_cap - c.norm_minus, c.member_plus - thresh,
                           c.member_minus - thresh});
      c.ok = c.oscillation < eps && c.norm_plus <= norm_cap &&
             c.norm_minus <= norm_cap && c.member_plus > thresh &&
             c.member_minus > thresh;
      all_ok = all_ok && c.ok;
      min_margin = std::min(min_margin, c.margin);
      checks.push_back(std::move(c));
    }

    if (min_margin > report.best_margin) {
      report.best_margin = min_margin;
      report.best_k = k;
      if (!all_ok) report.checks = checks;
    }
    if (all_ok) {
      report.found = true;
      report.k = k;
      report.checks = std::move(checks);
      return report;
    }
  }
  return report;
}

OctaCertificate diameter_certificate(const std::vector<SliceSpec>& slices,
                                     const std::vector<double>& weights,
                                     double eps, const ExponentSequence& seq,
                                     std::size_t k_max,
                                     const SupNormOptions& opts) {
  if (weights.size() != slices.size())
    throw InvalidInput("diameter_certificate: one weight per slice required");
  double weight_sum = 0.0;
  for (double w : weights) {
    if (!(w > 0.0)) throw InvalidInput("diameter_certificate: weights must be > 0");
    weight_sum += w;
  }
  if (std::fabs(weight_sum - 1.0) > 1e-12)
    throw InvalidInput("diameter_certificate: weights must sum to 1");

  const FindKReport rep = find_K(slices, eps, seq, k_max, opts);
  if (!rep.found) {
    std::ostringstream msg;
    msg << "diameter_certificate: no k <= " << k_max
        << " qualifies (best margin " << rep.best_margin << " at k = "
        << rep.best_k << ")";
    throw InsufficientSequence(msg.str(), rep.best_k);
  }

  OctaCertificate cert;
  cert.slices = slices;
  cert.weights = weights;
  cert.eps = eps;
  cert.chosen_k = rep.k;
  cert.membership = rep.checks;
  cert.tol = opts.tol;
  cert.exponents = seq.prefix(rep.k + 1);

  const SpikeFunction spike = spike_at(seq, rep.k);
  const SpikeProfile prof = profile(spike);
  cert.spike_alpha = spike.alpha();
  cert.spike_beta = spike.beta();
  cert.spike_argmax = prof.argmax;
  cert.scale = 1.0 / (1.0 + 2.0 * eps);

  MuntzPolynomial u_plus, u_minus;
  for (std::size_t j = 0; j < slices.size(); ++j) {
    auto pair = build_perturbations(slices[j].witness, spike);
    u_plus = u_plus + pair.first.scaled(weights[j]);
    u_minus = u_minus + pair.second.scaled(weights[j]);
    cert.perturbations.push_back(std::move(pair));
  }
  u_plus = u_plus.scaled(cert.scale);
  u_minus = u_minus.scaled(cert.scale);

  cert.u_plus_norm = sup_norm(u_plus, opts).value;
  cert.u_minus_norm = sup_norm(u_minus, opts).value;
  // ||u+ - u-|| >= (u+ - u-)(x_k) = 2/(1+2 eps): the certified separation.
  cert.separation = (u_plus - u_minus).eval(prof.argmax);

  const double ball_cap = 1.0 + 1e-9;
  bool ok = cert.u_plus_norm <= ball_cap && cert.u_minus_norm <= ball_cap &&
            cert.separation >= 2.0 * cert.scale - 1e-9;
  for (const SliceCheck& c : cert.membership) {
    ok = ok && c.ok;
    ok = ok && c.norm_plus * cert.scale <= ball_cap &&
         c.norm_minus * cert.scale <= ball_cap;
  }
  cert.verified = ok;
  return cert;
}

WitnessSearch witness_finder(const DiscreteFunctional& functional,
                             double epsilon, const ExponentSequence& seq,
                             std::size_t budget, const SupNormOptions& opts) {
  if (budget == 0) throw InvalidInput("witness_finder: budget must be >= 1");
  if (!(epsilon > 0.0)) throw InvalidInput("witness_finder: epsilon must be > 0");

  WitnessSearch out;
  const double target = 1.0 - epsilon;
  const std::size_t m = std::min(budget, seq.size());
  static constexpr double kMenu[] = {-1.0, -0.5, -0.25, 0.0, 0.25, 0.5, 1.0};

  std::vector<double> coeff(m, 0.0);
  const auto score_of = [&](const std::vector<double>& c, MuntzPolynomial* g_out) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < m; ++i)
      if (c[i] != 0.0) terms.push_back(Term{seq[i], c[i]});
    if (terms.empty()) {
      if (g_out) *g_out = MuntzPolynomial();
      return 0.0;
    }
    MuntzPolynomial g{std::move(terms)};
    const double norm = sup_norm(g, opts).value;
    g = g.scaled(1.0 / norm);
    if (g_out) *g_out = g;
    return functional(g);
  };

  double best = 0.0;  // mu of the zero start
  MuntzPolynomial best_g;
  if (best > target) {
    out.witness = best_g;
    out.best_value = best;
    return out;
  }

  for (int pass = 0; pass < 4; ++pass) {
    bool improved = false;
    for (std::size_t i = 0; i < m; ++i) {
      double coord_best = -kInf;
      double coord_value = coeff[i];
      for (double v : kMenu) {
        coeff[i] = v;
        MuntzPolynomial g;
        const double score = score_of(coeff, &g);
        ++out.steps;
        if (score > coord_best) {
          coord_best = score;
          coord_value = v;
        }
        if (score > best) {
          best = score;
          best_g = std::move(g);
          improved = true;
        }
        if (best > target) {
          coeff[i] = coord_value;
          out.witness = best_g;
          out.best_value = best;
          return out;
        }
      }
      coeff[i] = coord_value;
    }
    if (!improved) break;
  }
  out.best_value = best;
  return out;
}

}  // namespace muntz
