#include "muntz/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace muntz {

namespace {

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Shared evaluation core for exponential sums sum c_i exp(-lambda_i t),
// terms sorted by ascending exponent. Three regimes:
//   1 term: direct;
//   2 terms: factored exp(-l1 t) * ((c1+c2) + c2 expm1(-(l2-l1) t)), which
//     keeps spike differences x^a - x^b fully accurate near x = 1;
//   n >= 3 with lambda_max * t <= 1: sum c_i + sum c_i expm1(-l_i t), so the
//     near-unity parts cancel symbolically instead of in floating point;
//   otherwise: direct sum in ascending-exponent order (fixed reduction order
//     keeps results bit-identical run to run).
double eval_terms(const std::vector<Term>& terms, double t) {
  if (terms.empty()) return 0.0;
  if (t == 0.0) {
    double s = 0.0;
    for (const Term& term : terms) s += term.coefficient;
    return s;
  }
  if (std::isinf(t))
    return terms.front().exponent == 0.0 ? terms.front().coefficient : 0.0;

  const std::size_t n = terms.size();
  if (n == 1) return terms[0].coefficient * std::exp(-terms[0].exponent * t);
  if (n == 2) {
    const double gap = terms[1].exponent - terms[0].exponent;
    const double head = terms[0].coefficient + terms[1].coefficient;
    return std::exp(-terms[0].exponent * t) *
           (head + terms[1].coefficient * std::expm1(-gap * t));
  }
  if (terms.back().exponent * t <= 1.0) {
    double head = 0.0;
    for (const Term& term : terms) head += term.coefficient;
    double correction = 0.0;
    for (const Term& term : terms)
      correction += term.coefficient * std::expm1(-term.exponent * t);
    return head + correction;
  }
  double s = 0.0;
  for (const Term& term : terms) s += term.coefficient * std::exp(-term.exponent * t);
  return s;
}

}  // namespace

MuntzPolynomial::MuntzPolynomial(std::vector<Term> terms) {
  for (const Term& term : terms) {
    if (!std::isfinite(term.exponent) || term.exponent < 0.0)
      throw InvalidInput("MuntzPolynomial: exponents must be finite and >= 0");
    if (!std::isfinite(term.coefficient))
      throw InvalidInput("MuntzPolynomial: coefficients must be finite");
  }
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.exponent < b.exponent; });
  for (const Term& term : terms) {
    if (!terms_.empty() && terms_.back().exponent == term.exponent)
      terms_.back().coefficient += term.coefficient;
    else
      terms_.push_back(term);
  }
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const Term& t) { return t.coefficient == 0.0; }),
               terms_.end());
}

MuntzPolynomial MuntzPolynomial::monomial(double exponent, double coefficient) {
  return MuntzPolynomial({Term{exponent, coefficient}});
}

double MuntzPolynomial::eval(PointT at) const { return eval_terms(terms_, at.t()); }

double MuntzPolynomial::eval_x(double x) const {
  if (!(x >= 0.0) || x > 1.0) throw InvalidInput("eval_x: x must lie in [0,1]");
  double s = 0.0;
  for (const Term& term : terms_) s += term.coefficient * std::pow(x, term.exponent);
  return s;
}

double MuntzPolynomial::derivative_t(PointT at) const {
  std::vector<Term> deriv;
  deriv.reserve(terms_.size());
  for (const Term& term : terms_)
    if (term.exponent > 0.0)
      deriv.push_back(Term{term.exponent, -term.exponent * term.coefficient});
  return eval_terms(deriv, at.t());
}

double MuntzPolynomial::coefficient_sum() const {
  double s = 0.0;
  for (const Term& term : terms_) s += term.coefficient;
  return s;
}

double MuntzPolynomial::constant_coefficient() const {
  return (!terms_.empty() && terms_.front().exponent == 0.0)
             ? terms_.front().coefficient
             : 0.0;
}

double MuntzPolynomial::coefficient_magnitude() const {
  double s = 0.0;
  for (const Term& term : terms_) s += std::fabs(term.coefficient);
  return s;
}

MuntzPolynomial MuntzPolynomial::scaled(double c) const {
  if (!std::isfinite(c)) throw InvalidInput("scaled: factor must be finite");
  std::vector<Term> terms = terms_;
  for (Term& term : terms) term.coefficient *= c;
  return MuntzPolynomial(std::move(terms));
}

MuntzPolynomial operator+(const MuntzPolynomial& a, const MuntzPolynomial& b) {
  std::vector<Term> terms = a.terms_;
  terms.insert(terms.end(), b.terms_.begin(), b.terms_.end());
  return MuntzPolynomial(std::move(terms));
}

MuntzPolynomial operator-(const MuntzPolynomial& a, const MuntzPolynomial& b) {
  std::vector<Term> terms = a.terms_;
  terms.reserve(terms.size() + b.terms_.size());
  for (const Term& term : b.terms_)
    terms.push_back(Term{term.exponent, -term.coefficient});
  return MuntzPolynomial(std::move(terms));
}

namespace {

// Refine a sign change of the exponential sum `terms` inside (lo, hi) down
// to relative machine width in t.
double bisect_sign_change(const std::vector<Term>& terms, double lo, double hi,
                          int sign_lo) {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const int s = sign_of(eval_terms(terms, mid));
    if (s == 0) return mid;
    if (s == sign_lo)
      lo = mid;
    else
      hi = mid;
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * hi) break;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> geometric_grid(double lo, double hi, int points) {
  std::vector<double> grid;
  grid.reserve(points);
  const double span = std::log(hi / lo);
  for (int j = 0; j < points; ++j)
    grid.push_back(lo * std::exp(span * static_cast<double>(j) /
                                 static_cast<double>(points - 1)));
  grid.back() = hi;
  return grid;
}

}  // namespace

SupNormResult sup_norm(const MuntzPolynomial& p, const SupNormOptions& opt) {
  if (!(opt.tol > 0.0)) throw InvalidInput("sup_norm: tol must be > 0");
  if (opt.scan_points < 8) throw InvalidInput("sup_norm: scan_points must be >= 8");

  SupNormResult res;
  const double eps = std::numeric_limits<double>::epsilon();
  double tol = opt.tol;
  if (tol < 64.0 * eps) {
    tol = 64.0 * eps;
    res.degraded_precision = true;
  }
  if (p.empty()) {
    res.value = 0.0;
    res.argmax = {PointT::from_t(0.0)};
    return res;
  }

  const double scale = p.coefficient_magnitude();

  std::vector<Term> deriv;
  for (const Term& term : p.terms())
    if (term.exponent > 0.0)
      deriv.push_back(Term{term.exponent, -term.exponent * term.coefficient});

  std::vector<double> candidates = {0.0, std::numeric_limits<double>::infinity()};

  if (!deriv.empty()) {
    const double lambda_min = deriv.front().exponent;
    const double lambda_max = deriv.back().exponent;

    int descartes_bound = 0;
    for (std::size_t i = 0; i + 1 < deriv.size(); ++i)
      if (sign_of(deriv[i].coefficient) != sign_of(deriv[i + 1].coefficient))
        ++descartes_bound;

    const double t_hi = -std::log(tol / 64.0) / lambda_min;
    const double t_lo = std::min(tol, std::log(2.0) / lambda_max) / 8.0;
    const auto grid = geometric_grid(t_lo, t_hi, opt.scan_points);

    // Sign sequence starts from the exact derivative at t = 0, so the cell
    // (0, t_lo] is bracketed too.
    int prev_sign = sign_of(eval_terms(deriv, 0.0));
    double prev_t = 0.0;
    int changes = 0;
    double grid_best = -1.0;
    double grid_best_t = 0.0;
    for (double t : grid) {
      const double pv = std::fabs(eval_terms(p.terms(), t));
      if (pv > grid_best) {
        grid_best = pv;
        grid_best_t = t;
      }
      const int s = sign_of(eval_terms(deriv, t));
      if (s != 0) {
        if (prev_sign != 0 && s != prev_sign) {
          ++changes;
          candidates.push_back(bisect_sign_change(deriv, prev_t, t, prev_sign));
        }
        prev_sign = s;
        prev_t = t;
      }
    }
    if (changes > descartes_bound) {
      std::ostringstream msg;
      msg << "sup_norm: derivative scan found " << changes
          << " sign changes, exceeding the coefficient bound " << descartes_bound;
      throw NumericalInconsistency(msg.str());
    }
    candidates.push_back(grid_best_t);
  }

  struct Candidate {
    double t;
    double value;
  };
  std::vector<Candidate> evaluated;
  evaluated.reserve(candidates.size());
  for (double t : candidates)
    evaluated.push_back({t, std::fabs(eval_terms(p.terms(), t))});

  std::sort(evaluated.begin(), evaluated.end(),
            [](const Candidate& a, const Candidate& b) { return a.t < b.t; });
  // Merge candidates that refined to (numerically) the same point.
  std::vector<Candidate> merged;
  for (const Candidate& c : evaluated) {
    if (!merged.empty() && std::isfinite(c.t) &&
        c.t - merged.back().t <= 1e-9 * c.t) {
      if (c.value > merged.back().value) merged.back() = c;
    } else {
      merged.push_back(c);
    }
  }

  double best = 0.0;
  for (const Candidate& c : merged) best = std::max(best, c.value);
  const double include_tol = scale * std::min(1e-12, tol * 1e-2);

  res.value = best;
  for (auto it = merged.rbegin(); it != merged.rend(); ++it)  // ascending x
    if (it->value >= best - include_tol)
      res.argmax.push_back(PointT::from_t(it->t));
  return res;
}

std::vector<PointT> level_crossings(const MuntzPolynomial& p, double level,
                                    PointT bracket_a, PointT bracket_b,
                                    int scan_points) {
  if (!std::isfinite(level)) throw InvalidInput("level_crossings: level must be finite");
  if (scan_points < 8) throw InvalidInput("level_crossings: scan_points must be >= 8");

  double lo = std::min(bracket_a.t(), bracket_b.t());
  double hi = std::max(bracket_a.t(), bracket_b.t());
  if (lo == hi) return {};

  std::vector<Term> shifted = p.terms();
  shifted.push_back(Term{0.0, -level});
  const MuntzPolynomial q{std::move(shifted)};
  const auto& qt = q.terms();

  double lambda_min_pos = 0.0;
  double lambda_max = 0.0;
  for (const Term& term : p.terms())
    if (term.exponent > 0.0) {
      if (lambda_min_pos == 0.0) lambda_min_pos = term.exponent;
      lambda_max = term.exponent;
    }

  if (std::isinf(hi)) {
    // Beyond this point every non-constant term is below machine noise, so
    // q keeps the sign of its t -> inf limit.
    if (lambda_min_pos == 0.0) return {};  // constant: no interior crossing
    hi = std::max(-std::log(1e-16) / lambda_min_pos, lo * 2.0 + 1.0);
  }

  std::vector<double> samples;
  if (lo == 0.0) {
    double first = hi / static_cast<double>(scan_points);
    if (lambda_max > 0.0)
      first = std::min(first, std::log(2.0) / lambda_max / 8.0);
    samples.push_back(0.0);
    const auto grid = geometric_grid(first, hi, scan_points - 1);
    samples.insert(samples.end(), grid.begin(), grid.end());
  } else {
    samples = geometric_grid(lo, hi, scan_points);
  }

  std::vector<double> roots;
  int prev_sign = 0;
  double prev_t = 0.0;
  bool fresh_exact_root = false;
  for (double t : samples) {
    const double v = eval_terms(qt, t);
    const int s = sign_of(v);
    if (s == 0) {
      roots.push_back(t);
      fresh_exact_root = true;
      continue;
    }
    if (prev_sign != 0 && s != prev_sign && !fresh_exact_root)
      roots.push_back(bisect_sign_change(qt, prev_t, t, prev_sign));
    prev_sign = s;
    prev_t = t;
    fresh_exact_root = false;
  }

  std::sort(roots.begin(), roots.end(),
            [](double a, double b) { return a > b; });  // ascending x
  std::vector<PointT> out;
  out.reserve(roots.size());
  for (double t : roots) out.push_back(PointT::from_t(t));
  return out;
}

}  // namespace muntz
