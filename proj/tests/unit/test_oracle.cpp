#include <random>

#include "doctest.h"
#include "emlindex/error.hpp"
#include "emlindex/oracle.hpp"
#include "test_support.hpp"

using namespace emlindex;
using namespace emlindex::oracle;
using exact::Rational;

TEST_CASE("P1 character") {
  const auto t = p1Multiplicities(3, -2, 5);
  const long expected[] = {0, 0, 1, 1, 1, 1, 0, 0};
  for (long l = -2; l <= 5; ++l) CHECK(t.at(l) == Rational(expected[l + 2]));
  const auto z = p1Multiplicities(0, -3, 3);
  CHECK(z.support() == std::vector<std::pair<long, Rational>>{{0, Rational(1)}});
  CHECK(p1Multiplicities(7, 0, 10).at(7) == Rational(1));
  CHECK_THROWS_AS(p1Multiplicities(-1, 0, 1), Error);
}

TEST_CASE("partition function examples") {
  const long a[] = {1, 2}, b[] = {1}, c[] = {2, 3};
  CHECK(partitionDP(a, 10).at(4) == Rational(3));
  const auto one = partitionDP(b, 20);
  for (long l = 0; l <= 20; ++l) CHECK(one.at(l) == Rational(1));
  CHECK(partitionDP(c, 12).at(1) == Rational(0));
  CHECK(partitionDP(c, 12).at(12) == Rational(3));
  CHECK(partitionDP(c, 12).lambdaMin() == 0);
  const long bad[] = {0};
  CHECK_THROWS_AS(partitionDP(bad, 5), Error);
  CHECK_THROWS_AS(partitionDP(a, -1), Error);
}

TEST_CASE("dynamic programming agrees with naive enumeration") {
  for (auto w : std::vector<std::vector<long>>{{1}, {1, 1}, {1, 2}, {2, 3}, {1, 2, 3}, {3, 5, 7}}) {
    const auto dp = partitionDP(w, 30);
    for (long l = 0; l <= 30; ++l) CHECK(dp.at(l) == Rational(partitionNaive(w, l)));
  }
}

TEST_CASE("generating function identity") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> pick(1, 6);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<long> w(1 + trial % 4);
    for (auto& x : w) x = pick(rng);
    CHECK(generatingFunctionIdentity(w, 40));
  }
}

TEST_CASE("quasipolynomial for (1,2)") {
  const long w[] = {1, 2};
  const auto dp = partitionDP(w, 4);
  CHECK(dp.at(0) == Rational(0) + Rational(3, 4) + Rational(1, 4));
  CHECK(dp.at(3) == Rational(3, 2) + Rational(3, 4) - Rational(1, 4));
  CHECK(dp.at(4) == Rational(2) + Rational(3, 4) + Rational(1, 4));
  CHECK(quasipolynomialCheck(0));
  CHECK(quasipolynomialCheck(200));
}

TEST_CASE("rational generating series") {
  // 1/((1-x)(1-x^2)) is the (1,2) partition function
  const long den[] = {1, 2};
  CHECK(rationalSeries({{0, 1}}, den, 0, 25) == partitionDP(den, 25));
  // (1 - x^4)/(1 - x) = 1 + x + x^2 + x^3
  const long one[] = {1};
  CHECK(rationalSeries({{0, 1}, {4, -1}}, one, -2, 6).sameValues(p1Multiplicities(3, -2, 6)));
  // negative window entries are zero
  CHECK(rationalSeries({{0, 1}}, one, -3, 2).at(-1) == Rational(0));

  OracleSpec spec;
  spec.kind = OracleKind::RationalSeries;
  spec.numerator = {{0, 1}};
  spec.denominator = {0};
  CHECK_THROWS_AS(validate(spec), Error);
  spec.kind = OracleKind::PartitionDP;
  spec.weights = {1, 2};
  CHECK(evaluate(spec, 0, 10) == partitionDP(den, 10));
  spec.kind = OracleKind::P1Character;
  spec.A = 2;
  CHECK(evaluate(spec, -1, 3) == p1Multiplicities(2, -1, 3));
}

TEST_CASE("direct Euler-MacLaurin sum") {
  const auto ind = p1Multiplicities(3, -2, 6);
  CHECK(emDirectSum(ind, testing::monomial(2)) == Rational(14));
  CHECK(emDirectSum(ind, testing::monomial(0)) == Rational(4));
  CHECK(emDirectSum(MultiplicityTable(), testing::monomial(3)) == Rational(0));
  CHECK(emDirectSum(MultiplicityTable(0, 5), testing::monomial(1)) == Rational(0));
  CHECK_THROWS_AS(emDirectSum(p1Multiplicities(3, 0, 6), testing::monomial(0)), Error);
  CHECK_THROWS_AS(emDirectSum(p1Multiplicities(3, -2, 3), testing::monomial(0)), Error);
}
