#include <doctest.h>

#include <cmath>
#include <vector>

#include "muntz/errors.hpp"
#include "muntz/exponents.hpp"

using namespace muntz;

TEST_CASE("from_values validates ordering and domain") {
  CHECK_NOTHROW(ExponentSequence::from_values({0.0, 1.0, 2.5}));
  CHECK_THROWS_AS(ExponentSequence::from_values({}), InvalidInput);
  CHECK_THROWS_AS(ExponentSequence::from_values({1.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(ExponentSequence::from_values({2.0, 1.0}), InvalidInput);
  CHECK_THROWS_AS(ExponentSequence::from_values({-1.0, 2.0}), InvalidInput);
  const double inf = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(ExponentSequence::from_values({1.0, inf}), InvalidInput);
}

TEST_CASE("geometric family is exact for base 2") {
  const auto seq = ExponentSequence::geometric(2.0, 12);
  REQUIRE(seq.size() == 12);
  double expect = 2.0;
  for (std::size_t i = 0; i < 12; ++i, expect *= 2.0) CHECK(seq[i] == expect);
  REQUIRE(seq.family().has_value());
  CHECK(seq.family()->base == 2.0);
  CHECK(seq.family()->scale == 1.0);
  CHECK(seq.family()->start == 1);

  const auto scaled = ExponentSequence::geometric(2.0, 4, 0.5, 0);
  CHECK(scaled[0] == 0.5);
  CHECK(scaled[1] == 1.0);
  CHECK(scaled[3] == 4.0);

  // Large powers stay finite and exact up to the double limit.
  const auto big = ExponentSequence::geometric(2.0, 120);
  CHECK(big[119] == std::ldexp(1.0, 120));

  CHECK_THROWS_AS(ExponentSequence::geometric(1.5, 3), InvalidInput);
  CHECK_THROWS_AS(ExponentSequence::geometric(2.0, 0), InvalidInput);
  CHECK_THROWS_AS(ExponentSequence::geometric(2.0, 3, -1.0), InvalidInput);
}

TEST_CASE("geometric construction is deterministic") {
  const auto a = ExponentSequence::geometric(3.0, 40, 0.7, 2);
  const auto b = ExponentSequence::geometric(3.0, 40, 0.7, 2);
  CHECK(a.values() == b.values());
}

TEST_CASE("prefix keeps the family tag") {
  const auto seq = ExponentSequence::geometric(2.0, 10);
  const auto pre = seq.prefix(4);
  REQUIRE(pre.size() == 4);
  CHECK(pre[3] == 16.0);
  CHECK(pre.family().has_value());
  CHECK_THROWS_AS(seq.prefix(0), InvalidInput);
  CHECK_THROWS_AS(seq.prefix(11), InvalidInput);
}

TEST_CASE("is_rip") {
  CHECK(is_rip(ExponentSequence::from_values({0.0, 1.0, 2.0, 4.0, 8.0})));
  CHECK(is_rip(ExponentSequence::geometric(2.0, 12)));
  CHECK(is_rip(ExponentSequence::from_values({1.0, 2.0, 4.0})));  // ties allowed
  CHECK_FALSE(is_rip(ExponentSequence::from_values({1.0, 2.0, 3.0})));
  CHECK_THROWS_AS(is_rip(ExponentSequence::from_values({1.0})), InvalidInput);
}

TEST_CASE("extract_rip_subsequence greedy picks") {
  const auto seq =
      ExponentSequence::from_values({1.0, 1.5, 2.0, 3.0, 5.0, 9.0, 20.0, 50.0});
  const auto idx = extract_rip_subsequence(seq, 5);
  CHECK(idx == std::vector<std::size_t>{0, 2, 4, 6, 7});

  // Zero can never be selected; the pick starts at the first positive value.
  const auto z = ExponentSequence::from_values({0.0, 1.0, 2.0, 3.0});
  const auto zi = extract_rip_subsequence(z, 2);
  CHECK(zi == std::vector<std::size_t>{1, 2});

  try {
    extract_rip_subsequence(z, 3);
    FAIL("expected InsufficientSequence");
  } catch (const InsufficientSequence& e) {
    CHECK(e.achieved() == 2);
  }
}

TEST_CASE("extracted subsequence always has the RIP") {
  const std::vector<std::vector<double>> pools = {
      {1, 1.1, 1.2, 2.3, 2.4, 4.7, 9.5, 19, 38.1, 77},
      {0.5, 0.9, 1.8, 1.9, 3.7, 7.2, 14.5, 29.1},
      {2, 4, 8, 16, 32, 64},
  };
  for (const auto& pool : pools) {
    const auto seq = ExponentSequence::from_values(pool);
    for (std::size_t count = 2; count <= 4; ++count) {
      std::vector<std::size_t> idx;
      try {
        idx = extract_rip_subsequence(seq, count);
      } catch (const InsufficientSequence&) {
        continue;
      }
      std::vector<double> vals;
      for (auto i : idx) vals.push_back(seq[i]);
      CHECK(is_rip(ExponentSequence::from_values(vals)));
    }
  }
}

TEST_CASE("muntz_partial_sum") {
  const auto five = ExponentSequence::from_values({0.0, 5.0});
  const auto s5 = muntz_partial_sum(five);
  CHECK(s5.partial_sum == doctest::Approx(0.2).epsilon(1e-15));

  const auto geo = ExponentSequence::geometric(2.0, 20);
  const auto sg = muntz_partial_sum(geo);
  CHECK(sg.partial_sum == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(std::fabs(sg.partial_sum - (1.0 - std::ldexp(1.0, -20))) < 1e-15);
  REQUIRE(sg.rip_tail_bound.has_value());
  CHECK(*sg.rip_tail_bound == doctest::Approx(2.0 / geo.back()).epsilon(1e-15));

  // Non-RIP prefix reports no tail bound.
  const auto arith = ExponentSequence::from_values({1.0, 2.0, 3.0});
  CHECK_FALSE(muntz_partial_sum(arith).rip_tail_bound.has_value());

  // Partial sums grow with the prefix.
  double prev = 0.0;
  for (std::size_t n = 2; n <= 20; ++n) {
    const double s = muntz_partial_sum(geo.prefix(n)).partial_sum;
    CHECK(s > prev);
    prev = s;
  }
}

TEST_CASE("parse_sequence_spec") {
  const auto g = parse_sequence_spec("geometric:2", 5);
  CHECK(g.values() == std::vector<double>{2, 4, 8, 16, 32});

  const auto gs = parse_sequence_spec("geometric:2:scale=0.5:start=0", 4);
  CHECK(gs.values() == std::vector<double>{0.5, 1, 2, 4});

  const auto l = parse_sequence_spec("list:1,1.5,2", 99);
  CHECK(l.values() == std::vector<double>{1.0, 1.5, 2.0});
  CHECK_FALSE(l.family().has_value());

  CHECK_THROWS_AS(parse_sequence_spec("", 4), InvalidInput);
  CHECK_THROWS_AS(parse_sequence_spec("geometric", 4), InvalidInput);
  CHECK_THROWS_AS(parse_sequence_spec("geometric:abc", 4), InvalidInput);
  CHECK_THROWS_AS(parse_sequence_spec("geometric:2:junk=1", 4), InvalidInput);
  CHECK_THROWS_AS(parse_sequence_spec("list:", 4), InvalidInput);
  CHECK_THROWS_AS(parse_sequence_spec("list:3,2", 4), InvalidInput);
  CHECK_THROWS_AS(parse_sequence_spec("arithmetic:2", 4), InvalidInput);
}
