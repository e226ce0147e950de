#include <doctest.h>

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "muntz/errors.hpp"
#include "muntz/polynomial.hpp"

using namespace muntz;

namespace {

// Dense geometric-grid maximum of |p|, the slow reference the engine is
// checked against.
double grid_sup(const MuntzPolynomial& p, int points) {
  double lam_max = 0.0, lam_min_pos = 0.0;
  for (const auto& t : p.terms()) {
    lam_max = std::max(lam_max, t.exponent);
    if (t.exponent > 0.0 && (lam_min_pos == 0.0 || t.exponent < lam_min_pos))
      lam_min_pos = t.exponent;
  }
  if (lam_max == 0.0) return std::fabs(p.coefficient_sum());
  const double t_lo = std::log(2.0) / lam_max / 64.0;
  const double t_hi = -std::log(1e-14) / lam_min_pos;
  double best = std::max(std::fabs(p.eval_t(0.0)),
                         std::fabs(p.constant_coefficient()));
  const double span = std::log(t_hi / t_lo);
  for (int i = 0; i <= points; ++i) {
    const double t = t_lo * std::exp(span * (double(i) / points));
    best = std::max(best, std::fabs(p.eval_t(t)));
  }
  return best;
}

}  // namespace

TEST_CASE("PointT domain checks") {
  CHECK(PointT::from_x(1.0).t() == 0.0);
  CHECK(std::isinf(PointT::from_x(0.0).t()));
  CHECK(PointT::from_t(0.0).x() == 1.0);
  CHECK(PointT::from_x(0.5).t() == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(PointT::from_t(-1.0), InvalidInput);
  CHECK_THROWS_AS(PointT::from_t(std::nan("")), InvalidInput);
  CHECK_THROWS_AS(PointT::from_x(1.5), InvalidInput);
  CHECK_THROWS_AS(PointT::from_x(-0.1), InvalidInput);
  CHECK_THROWS_AS(PointT::from_x(std::nan("")), InvalidInput);
}

TEST_CASE("round trip x <-> t") {
  for (double x : {1e-6, 0.01, 0.3, 0.5, 0.9, 0.999, 1.0}) {
    const auto p = PointT::from_x(x);
    CHECK(std::fabs(p.x() - x) <= 1e-12 * x);
  }
}

TEST_CASE("term normalization") {
  const MuntzPolynomial p({{4.0, -1.0}, {2.0, 0.5}, {2.0, 0.5}, {7.0, 0.0}});
  REQUIRE(p.size() == 2);
  CHECK(p.terms()[0].exponent == 2.0);
  CHECK(p.terms()[0].coefficient == 1.0);
  CHECK(p.terms()[1].exponent == 4.0);

  CHECK_THROWS_AS(MuntzPolynomial({{-1.0, 1.0}}), InvalidInput);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(MuntzPolynomial({{1.0, inf}}), InvalidInput);

  // Exact cancellation leaves the zero polynomial.
  const auto z = MuntzPolynomial({{3.0, 1.0}, {3.0, -1.0}});
  CHECK(z.empty());
}

TEST_CASE("evaluation matches closed forms") {
  const MuntzPolynomial p({{2.0, 1.0}, {4.0, -1.0}});  // x^2 - x^4
  CHECK(p.eval_t(std::log(2.0)) == doctest::Approx(0.1875).epsilon(1e-15));
  CHECK(p.eval_x(0.5) == doctest::Approx(0.1875).epsilon(1e-12));
  CHECK(p.eval_t(0.0) == 0.0);                       // coefficient sum, exact
  CHECK(p.eval(PointT::from_x(0.0)) == 0.0);         // constant coefficient

  const MuntzPolynomial c({{0.0, 0.25}, {3.0, 0.5}});
  CHECK(c.eval(PointT::from_x(0.0)) == 0.25);
  CHECK(c.eval_t(0.0) == 0.75);

  // Huge exponents only resolve in t.
  const MuntzPolynomial huge({{1e6, 1.0}, {2e6, -1.0}});
  CHECK(huge.eval_t(std::log(2.0) / 1e6) == doctest::Approx(0.25).epsilon(1e-12));

  // t-evaluation agrees with the x-domain route where both are accurate.
  const MuntzPolynomial q({{1.0, 0.3}, {2.5, -0.7}, {9.0, 0.4}});
  for (double x : {0.05, 0.2, 0.5, 0.77, 0.99}) {
    CHECK(q.eval(PointT::from_x(x)) ==
          doctest::Approx(q.eval_x(x)).epsilon(1e-12));
  }
}

TEST_CASE("derivative in t") {
  const MuntzPolynomial p({{2.0, 1.0}, {4.0, -1.0}});
  // d/dt [e^{-2t} - e^{-4t}] = -2 e^{-2t} + 4 e^{-4t}
  const double t = 0.3;
  const double expect = -2.0 * std::exp(-2 * t) + 4.0 * std::exp(-4 * t);
  CHECK(p.derivative_t(PointT::from_t(t)) == doctest::Approx(expect).epsilon(1e-14));
}

TEST_CASE("sup_norm on reference polynomials") {
  SUBCASE("monomial peaks at 1") {
    const auto r = sup_norm(MuntzPolynomial({{1.0, 1.0}}));
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE_FALSE(r.argmax.empty());
    CHECK(r.argmax.back().x() == 1.0);
  }
  SUBCASE("x^2 - x^4") {
    const auto r = sup_norm(MuntzPolynomial({{2.0, 1.0}, {4.0, -1.0}}));
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));
    REQUIRE(r.argmax.size() == 1);
    CHECK(r.argmax[0].x() ==
          doctest::Approx(0.70710678118654752).epsilon(1e-10));
    CHECK_FALSE(r.degraded_precision);
  }
  SUBCASE("x - x^3") {
    const auto r = sup_norm(MuntzPolynomial({{1.0, 1.0}, {3.0, -1.0}}));
    CHECK(r.value == doctest::Approx(0.38490017945975051).epsilon(1e-12));
    CHECK(r.argmax[0].x() ==
          doctest::Approx(0.57735026918962576).epsilon(1e-10));
  }
  SUBCASE("negative polynomial uses |p|") {
    const auto r = sup_norm(MuntzPolynomial({{2.0, -1.0}, {4.0, 1.0}}));
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("two symmetric maximizers are both located") {
    // x - 3x^2 + 2x^3 peaks at (3 -+ sqrt 3)/6 with value sqrt(3)/18.
    const auto r =
        sup_norm(MuntzPolynomial({{1.0, 1.0}, {2.0, -3.0}, {3.0, 2.0}}));
    CHECK(r.value == doctest::Approx(0.096225044864937627).epsilon(1e-12));
    REQUIRE(r.argmax.size() == 2);
    CHECK(r.argmax[0].x() == doctest::Approx(0.21132486540518712).epsilon(1e-9));
    CHECK(r.argmax[1].x() == doctest::Approx(0.78867513459481288).epsilon(1e-9));
  }
  SUBCASE("zero polynomial") {
    const auto r = sup_norm(MuntzPolynomial{});
    CHECK(r.value == 0.0);
  }
  SUBCASE("constant") {
    const auto r = sup_norm(MuntzPolynomial({{0.0, -0.6}}));
    CHECK(r.value == 0.6);
  }
  SUBCASE("huge exponents") {
    const auto r = sup_norm(MuntzPolynomial({{1e12, 1.0}, {2e12, -1.0}}));
    CHECK(r.value == doctest::Approx(0.25).epsilon(1e-10));
    CHECK(r.argmax[0].t() == doctest::Approx(std::log(2.0) / 1e12).epsilon(1e-10));
  }
}

TEST_CASE("sup_norm input and degradation handling") {
  CHECK_THROWS_AS(sup_norm(MuntzPolynomial({{2.0, 1.0}}), SupNormOptions{0.0, 4096}),
                  InvalidInput);
  CHECK_THROWS_AS(sup_norm(MuntzPolynomial({{2.0, 1.0}}), SupNormOptions{1e-10, 7}),
                  InvalidInput);
  CHECK_NOTHROW(sup_norm(MuntzPolynomial({{2.0, 1.0}}), SupNormOptions{1e-10, 8}));
  const auto r =
      sup_norm(MuntzPolynomial({{2.0, 1.0}, {4.0, -1.0}}), SupNormOptions{1e-20, 4096});
  CHECK(r.degraded_precision);
  CHECK(r.value == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("sup_norm scaling invariance") {
  const MuntzPolynomial p({{1.5, 0.8}, {4.0, -1.1}, {11.0, 0.3}});
  const auto base = sup_norm(p);
  for (double c : {3.0, 0.125, -2.0}) {
    const auto r = sup_norm(p.scaled(c));
    CHECK(r.value == doctest::Approx(std::fabs(c) * base.value).epsilon(1e-12));
    REQUIRE(r.argmax.size() == base.argmax.size());
    for (std::size_t i = 0; i < r.argmax.size(); ++i)
      CHECK(r.argmax[i].t() ==
            doctest::Approx(base.argmax[i].t()).epsilon(1e-12));
  }
}

TEST_CASE("sup_norm dominates point samples") {
  std::mt19937_64 rng(7);
  auto uniform = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Term> terms;
    const int n = 1 + int(rng() % 4);
    for (int i = 0; i < n; ++i)
      terms.push_back({uniform() * 500.0, 2.0 * uniform() - 1.0});
    const MuntzPolynomial p(terms);
    if (p.empty()) continue;
    const auto r = sup_norm(p);
    const double cap = r.value + 1e-9 * p.coefficient_magnitude() + 1e-300;
    for (int i = 0; i < 200; ++i) {
      const double t = std::exp(14.0 * uniform() - 7.0);
      CHECK(std::fabs(p.eval_t(t)) <= cap);
    }
  }
}

TEST_CASE("sup_norm matches the dense-grid oracle") {
  std::mt19937_64 rng(12345);
  auto uniform = [&] { return double(rng() >> 11) * 0x1.0p-53; };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Term> terms;
    const int n = 1 + int(rng() % 4);
    for (int i = 0; i < n; ++i)
      terms.push_back({uniform() * 1000.0, 2.0 * uniform() - 1.0});
    const MuntzPolynomial p(terms);
    if (p.empty()) continue;
    const auto r = sup_norm(p);
    const double oracle = grid_sup(p, 200000);
    CHECK(std::fabs(r.value - oracle) <= 1e-5 * std::max(r.value, 1e-300));
  }
}

TEST_CASE("level_crossings") {
  const MuntzPolynomial p({{2.0, 1.0}, {4.0, -1.0}});
  const auto whole =
      level_crossings(p, 0.125, PointT::from_x(0.0), PointT::from_x(1.0));
  REQUIRE(whole.size() == 2);
  CHECK(whole[0].x() == doctest::Approx(0.38268343236508977).epsilon(1e-9));
  CHECK(whole[1].x() == doctest::Approx(0.92387953251128676).epsilon(1e-9));

  // Bracket order does not matter.
  const auto rev =
      level_crossings(p, 0.125, PointT::from_x(1.0), PointT::from_x(0.0));
  REQUIRE(rev.size() == 2);
  CHECK(rev[0].x() == doctest::Approx(whole[0].x()).epsilon(1e-12));

  // Level above the max: no crossings, not an error.
  CHECK(level_crossings(p, 0.5, PointT::from_x(0.0), PointT::from_x(1.0)).empty());

  const MuntzPolynomial line({{1.0, 1.0}});
  const auto half =
      level_crossings(line, 0.5, PointT::from_x(0.0), PointT::from_x(1.0));
  REQUIRE(half.size() == 1);
  CHECK(half[0].x() == doctest::Approx(0.5).epsilon(1e-9));
}
