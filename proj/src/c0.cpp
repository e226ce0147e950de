#include "muntz/c0.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

namespace muntz {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Geometric t-grid on the open cell (lo, hi): `points` samples, endpoints
// excluded so margins against values pinned at the endpoints stay one-sided.
std::vector<double> open_grid(double lo, double hi, std::size_t points) {
  std::vector<double> grid;
  if (!(lo > 0.0) || !(hi > lo) || points == 0) return grid;
  grid.reserve(points);
  const double span = std::log(hi / lo);
  const double denom = static_cast<double>(points + 1);
  for (std::size_t j = 1; j <= points; ++j)
    grid.push_back(lo * std::exp(span * static_cast<double>(j) / denom));
  return grid;
}

}  // namespace

C0Certificate c0_build(const ExponentSequence& seq, std::size_t count,
                       const SupNormOptions& opts) {
  if (count == 0) throw InvalidInput("c0_build: count must be >= 1");
  if (!is_rip(seq)) throw InvalidInput("c0_build: sequence must have the RIP");
  if (!(seq.front() > 0.0))
    throw InvalidInput("c0_build: all exponents must be positive");

  C0Certificate cert;
  cert.tol = opts.tol;

  const std::size_t pairs = seq.size() - 1;
  std::size_t prev_k = 0;
  double prev_b_t = kInf;

  for (std::size_t n = 1; n <= count; ++n) {
    const double target = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
    const double level = std::ldexp(1.0, -2 * static_cast<int>(n));
    bool found = false;

    for (std::size_t k = prev_k + 1; k <= pairs && !found; ++k) {
      const SpikeFunction spike = spike_at(seq, k);
      const SpikeProfile prof = profile(spike);
      const double scale = target / prof.norm;
      const Interval interval = superlevel_interval(spike, level / scale);

      if (n > 1) {
        // (a) I_n strictly right of I_{n-1}, with a relative t-margin so the
        // ordering stays checkable in floating point.
        if (!(prev_b_t - interval.a.t() > 1e-12 * prev_b_t)) {
          cert.rejected.push_back(k);
          continue;
        }
        // (b) all earlier functions already small at the left endpoint;
        // they only decay further to the right of their peaks.
        bool small = true;
        for (const MuntzPolynomial& f : cert.functions)
          if (!(f.eval(interval.a) < level)) {
            small = false;
            break;
          }
        if (!small) {
          cert.rejected.push_back(k);
          continue;
        }
      }

      C0Pick pick;
      pick.n = n;
      pick.k = k;
      pick.alpha = spike.alpha();
      pick.beta = spike.beta();
      pick.scale = scale;
      pick.level = level;
      pick.interval = interval;
      pick.spike_norm = prof.norm;
      pick.spike_argmax = prof.argmax;
      cert.picks.push_back(pick);
      cert.functions.push_back(spike.polynomial().scaled(scale));
      prev_k = k;
      prev_b_t = interval.b.t();
      found = true;
    }

    if (!found) {
      std::ostringstream msg;
      msg << "c0_build: stored prefix exhausted at stage " << n << " of " << count;
      throw InsufficientSequence(msg.str(), n - 1);
    }
  }

  cert.exponents = seq.prefix(prev_k + 1);
  const MuntzSum sum = muntz_partial_sum(cert.exponents);
  cert.muntz_partial_sum = sum.partial_sum;
  cert.rip_tail_bound = sum.rip_tail_bound;

  // Light self-check before emitting; verify-c0 re-runs this at full grid.
  const C0ConditionsReport check = verify_conditions(cert, 2048, opts);
  for (const ConditionMargin& c : check.conditions)
    if (!c.holds)
      throw ConstructionFailure("c0_build: condition (" + c.condition +
                                    ") failed the final grid check",
                                c.condition, c.worst_point.x());
  return cert;
}

C0ConditionsReport verify_conditions(const C0Certificate& cert,
                                     std::size_t grid_points,
                                     const SupNormOptions& opts) {
  const std::size_t N = cert.picks.size();
  if (N == 0 || cert.functions.size() != N)
    throw InvalidInput("verify_conditions: malformed certificate");
  if (grid_points < 16)
    throw InvalidInput("verify_conditions: grid_points must be >= 16");

  C0ConditionsReport report;
  report.grid_points = grid_points;

  ConditionMargin mi{"i", kInf, true, PointT::from_t(0.0), 0};
  ConditionMargin mii{"ii", kInf, true, PointT::from_t(0.0), 0};
  ConditionMargin miii{"iii", kInf, true, PointT::from_t(0.0), 0};
  ConditionMargin miv{"iv", kInf, true, PointT::from_t(0.0), 0};
  ConditionMargin mv{"v", kInf, true, PointT::from_t(0.0), 0};

  // (ii) ||f_n|| = 1 - 2^{-n}, via the sup-norm engine, allowance 1e-9.
  for (std::size_t n = 1; n <= N; ++n) {
    const double target = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
    const SupNormResult r = sup_norm(cert.functions[n - 1], opts);
    const double margin = 1e-9 - std::fabs(r.value - target);
    if (margin < mii.margin) {
      mii.margin = margin;
      mii.worst_point = r.argmax.empty() ? PointT::from_t(0.0) : r.argmax.front();
      mii.stage = n;
    }
  }

  // (iii) b_n < a_{n+1}, measured in t where the gap is representable.
  for (std::size_t n = 1; n < N; ++n) {
    const double margin =
        cert.picks[n - 1].interval.b.t() - cert.picks[n].interval.a.t();
    if (margin < miii.margin) {
      miii.margin = margin;
      miii.worst_point = cert.picks[n].interval.a;
      miii.stage = n + 1;
    }
  }
  if (N == 1) miii.margin = 0.0;

  // Pointwise conditions (i), (iv), (v) on per-region grids.
  const auto consider_i = [&](double value, double t, std::size_t n) {
    if (value < mi.margin) {
      mi.margin = value;
      mi.worst_point = PointT::from_t(t);
      mi.stage = n;
    }
  };

  // Samples inside I_m: f_m above its level, every other f_n below its own
  // level (iv), and earlier f_n below I_m's level (v).
  for (std::size_t m = 1; m <= N; ++m) {
    const C0Pick& pick = cert.picks[m - 1];
    const auto grid =
        open_grid(pick.interval.b.t(), pick.interval.a.t(), grid_points);
    for (double t : grid) {
      const PointT at = PointT::from_t(t);
      for (std::size_t n = 1; n <= N; ++n) {
        const double v = cert.functions[n - 1].eval(at);
        consider_i(v, t, n);
        if (n == m) {
          const double margin = v - pick.level;
          if (margin < miv.margin) {
            miv.margin = margin;
            miv.worst_point = at;
            miv.stage = n;
          }
        } else {
          const double margin = cert.picks[n - 1].level - v;
          if (margin < miv.margin) {
            miv.margin = margin;
            miv.worst_point = at;
            miv.stage = n;
          }
          if (n < m) {
            const double margin_v = pick.level - v;
            if (margin_v < mv.margin) {
              mv.margin = margin_v;
              mv.worst_point = at;
              mv.stage = m;
            }
          }
        }
      }
    }
  }
  if (N == 1) mv.margin = 0.0;

  // Gap and outer regions: x = 0 side, between intervals, x = 1 side.
  std::vector<std::pair<double, double>> gaps;  // (t_lo, t_hi) open cells
  const double alpha_min = cert.picks.front().alpha;
  const double t_far = std::max(2.0 * cert.picks.front().interval.a.t(),
                                -std::log(1e-16) / alpha_min);
  gaps.emplace_back(cert.picks.front().interval.a.t(), t_far);
  for (std::size_t n = 1; n < N; ++n)
    gaps.emplace_back(cert.picks[n].interval.a.t(),
                      cert.picks[n - 1].interval.b.t());
  gaps.emplace_back(cert.picks.back().interval.b.t() * 1e-12,
                    cert.picks.back().interval.b.t());

  std::vector<double> extra = {0.0, kInf};
  for (const auto& [lo, hi] : gaps) {
    auto grid = open_grid(lo, hi, grid_points);
    grid.insert(grid.end(), extra.begin(), extra.end());
    extra.clear();  // endpoint samples only once
    for (double t : grid) {
      const PointT at = std::isinf(t) ? PointT::from_x(0.0) : PointT::from_t(t);
      for (std::size_t n = 1; n <= N; ++n) {
        const double v = cert.functions[n - 1].eval(at);
        consider_i(v, t, n);
        const double margin = cert.picks[n - 1].level - v;
        if (margin < miv.margin) {
          miv.margin = margin;
          miv.worst_point = at;
          miv.stage = n;
        }
      }
    }
  }

  mi.holds = mi.margin >= 0.0;
  mii.holds = mii.margin >= 0.0;
  miii.holds = N == 1 || miii.margin > 0.0;
  miv.holds = miv.margin >= 0.0;
  mv.holds = N == 1 || mv.margin >= 0.0;

  report.conditions = {mi, mii, miii, miv, mv};
  report.all_hold = true;
  for (const ConditionMargin& c : report.conditions)
    report.all_hold = report.all_hold && c.holds;
  return report;
}

C0InequalityReport verify_c0_inequalities(const C0Certificate& cert,
                                          std::size_t trials,
                                          std::uint64_t seed,
                                          const SupNormOptions& opts) {
  const std::size_t N = cert.functions.size();
  if (N == 0) throw InvalidInput("verify_c0_inequalities: empty certificate");

  C0InequalityReport report;
  report.seed = seed;
  report.min_norm = kInf;
  report.max_norm = 0.0;
  // Engine evaluations carry their own error; inequalities are enforced up
  // to this allowance.
  const double allow = std::max(1e-9, opts.tol);

  const auto run_trial = [&](std::string tag, std::vector<double> coeffs) {
    MuntzPolynomial f;
    for (std::size_t n = 0; n < N; ++n)
      f = f + cert.functions[n].scaled(coeffs[n]);
    C0Trial trial;
    trial.tag = std::move(tag);
    trial.coefficients = std::move(coeffs);
    trial.norm = sup_norm(f, opts).value;
    trial.within =
        trial.norm >= report.m - allow && trial.norm <= report.M + allow;
    report.min_norm = std::min(report.min_norm, trial.norm);
    report.max_norm = std::max(report.max_norm, trial.norm);
    report.trials.push_back(std::move(trial));
  };

  for (std::size_t n = 1; n <= N; ++n) {
    std::vector<double> e(N, 0.0);
    e[n - 1] = 1.0;
    run_trial("e_" + std::to_string(n), std::move(e));
    const double target = 1.0 - std::ldexp(1.0, -static_cast<int>(n));
    const double bn = report.trials.back().norm;
    report.basis_norms.push_back(bn);
    report.worst_basis_norm_error =
        std::max(report.worst_basis_norm_error, std::fabs(bn - target));
  }

  run_trial("ones", std::vector<double>(N, 1.0));
  {
    std::vector<double> alt(N, 1.0);
    for (std::size_t n = 1; n < N; n += 2) alt[n] = -1.0;
    run_trial("alternating", std::move(alt));
  }

  // Seeded trials, one fixed stream, N draws per trial in coordinate order.
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng]() {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  };
  for (std::size_t i = 1; i <= trials; ++i) {
    std::vector<double> c(N);
    double max_abs = 0.0;
    for (std::size_t n = 0; n < N; ++n) {
      c[n] = 2.0 * uniform() - 1.0;
      max_abs = std::max(max_abs, std::fabs(c[n]));
    }
    if (max_abs == 0.0) {
      c[0] = 1.0;
      max_abs = 1.0;
    }
    for (double& v : c) v /= max_abs;  // sup |t_n| = 1
    run_trial("random_" + std::to_string(i), std::move(c));
  }

  report.all_within = true;
  for (const C0Trial& trial : report.trials)
    report.all_within = report.all_within && trial.within;
  report.all_within =
      report.all_within && report.worst_basis_norm_error <= 1e-9;
  return report;
}

}  // namespace muntz
