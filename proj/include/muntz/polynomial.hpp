#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

#include "muntz/errors.hpp"

namespace muntz {

// Log-domain coordinate t = -ln x for points of [0,1].
// t = 0 is x = 1; t = +inf is x = 0. Larger t means smaller x.
// Spikes with exponents ~1e12 peak at x = 1 - O(1e-12), which is not
// resolvable in x but is a comfortable t ~ 1e-12.
class PointT {
 public:
  PointT() = default;

  static PointT from_t(double t) {
    if (std::isnan(t) || t < 0.0) throw InvalidInput("PointT: t must be >= 0");
    return PointT(t);
  }
  static PointT from_x(double x) {
    if (!(x >= 0.0) || x > 1.0) throw InvalidInput("PointT: x must lie in [0,1]");
    if (x == 0.0) return PointT(std::numeric_limits<double>::infinity());
    if (x == 1.0) return PointT(0.0);
    return PointT(-std::log(x));
  }

  double t() const noexcept { return t_; }
  double x() const noexcept { return std::exp(-t_); }

 private:
  explicit PointT(double t) : t_(t) {}
  double t_ = 0.0;
};

struct Term {
  double exponent;
  double coefficient;
};

// Finite combination sum_i c_i x^{lambda_i} with 0 <= lambda_0 < lambda_1 < ...
// All evaluation runs in the t-domain, where each monomial is exp(-lambda t).
class MuntzPolynomial {
 public:
  MuntzPolynomial() = default;  // zero polynomial
  explicit MuntzPolynomial(std::vector<Term> terms);

  static MuntzPolynomial monomial(double exponent, double coefficient = 1.0);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  // Exact by contract at t = 0 (sum of coefficients) and t = +inf
  // (coefficient of exponent 0). NaN or negative t is rejected.
  double eval(PointT at) const;
  double eval_t(double t) const { return eval(PointT::from_t(t)); }

  // Direct pow() route; kept as the x-domain cross-check.
  double eval_x(double x) const;

  // d/dt of eval, an exponential sum itself.
  double derivative_t(PointT at) const;

  double coefficient_sum() const;       // value at x = 1
  double constant_coefficient() const;  // value at x = 0
  double coefficient_magnitude() const; // sum |c_i|, the natural scale

  MuntzPolynomial scaled(double c) const;

  friend MuntzPolynomial operator+(const MuntzPolynomial& a, const MuntzPolynomial& b);
  friend MuntzPolynomial operator-(const MuntzPolynomial& a, const MuntzPolynomial& b);

 private:
  std::vector<Term> terms_;
};

struct SupNormResult {
  double value = 0.0;
  std::vector<PointT> argmax;  // every located maximizer, ascending x
  bool degraded_precision = false;
};

struct SupNormOptions {
  double tol = 1e-10;  // relative
  int scan_points = 4096;
};

// Max of |p| over [0,1] with all located maximizers.
//
// The derivative of p in t is an exponential sum whose positive zeros are
// bounded by the sign changes of its coefficient sequence (Descartes-type
// bound). The engine scans that derivative for sign changes on a geometric
// t-grid, polishes each bracket by bisection, and compares the candidates
// against the endpoint values at t = 0 and the t -> inf limit. A scan that
// sees more sign changes than the bound is reported as inconsistent.
SupNormResult sup_norm(const MuntzPolynomial& p, const SupNormOptions& opt = {});
inline SupNormResult sup_norm(const MuntzPolynomial& p, double tol) {
  return sup_norm(p, SupNormOptions{tol, 4096});
}

// All solutions of p = level strictly inside the bracket (given as two
// points in either order), located by a sign-change scan plus bisection.
// No sign change anywhere means an empty result, not an error.
// Returned ascending in x.
std::vector<PointT> level_crossings(const MuntzPolynomial& p, double level,
                                    PointT bracket_a, PointT bracket_b,
                                    int scan_points = 4096);

}  // namespace muntz
