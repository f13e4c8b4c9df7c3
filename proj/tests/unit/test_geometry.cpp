#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "emlindex/error.hpp"
#include "emlindex/geometry.hpp"
#include "emlindex/oracle.hpp"

using namespace emlindex;
using namespace emlindex::geometry;
using exact::Rational;
using qtheta::FactorKind;

namespace {

MultiplicityTable tableOf(long lo, long hi, std::initializer_list<std::pair<long, long>> entries) {
  MultiplicityTable t(lo, hi);
  for (auto [l, v] : entries) t.set(l, v);
  return t;
}

void checkPushedAgainstDP(std::vector<long> w) {
  const auto datum = buildPushedSymbol(w);
  CHECK_NOTHROW(validate(datum));
  const auto got = computeMultiplicity(datum, datum.dMax(), 0, 50, Sign::Plus);
  const auto want = oracle::partitionDP(w, 50);
  INFO("weights of size " << w.size() << " first mismatch " << got.firstMismatch(want).value_or(-999));
  CHECK(got == want);
}

}  // namespace

TEST_CASE("P1 builder layout") {
  const auto d = buildP1(3);
  CHECK(d.dimM == 2);
  CHECK(d.dMax() == 1);
  REQUIRE(d.vertices.size() == 1);
  CHECK(d.vertices[0].g == Cyclotomic(1));
  REQUIRE(d.vertices[0].contributions.size() == 2);
  CHECK(d.vertices[0].contributions[0].prefactorWeight == 0);
  CHECK(d.vertices[0].contributions[1].prefactorWeight == 3);
  for (const auto& c : d.vertices[0].contributions) CHECK(c.unipotentPairs() == 1);
  CHECK_NOTHROW(validate(d));
  CHECK_THROWS_AS(buildP1(-1), Error);
}

TEST_CASE("P1 q^0 numerator for A = 3") {
  const auto s = assembleVertex(buildP1(3).vertices[0], 0);
  qtheta::ThetaSum expected;
  // (1 + e^{3i} - e^{4i} - e^{-i}) * theta^{-2}, the unipotent q^0 coefficient being 1/theta^2
  expected.add({Cyclotomic(1), 0, -2, Sign::Plus});
  expected.add({Cyclotomic(1), 3, -2, Sign::Plus});
  expected.add({Cyclotomic(-1), 4, -2, Sign::Plus});
  expected.add({Cyclotomic(-1), -1, -2, Sign::Plus});
  CHECK(s.coeff(0) == expected);
}

TEST_CASE("P1 tables equal the indicator") {
  for (long A = 0; A <= 10; ++A) {
    for (Sign pol : {Sign::Plus, Sign::Minus}) {
      const auto d = buildP1(A, pol);
      for (Sign eps : {Sign::Plus, Sign::Minus}) {
        const auto got = computeMultiplicity(d, 8, -5, A + 5, eps);
        CHECK(got == oracle::p1Multiplicities(A, -5, A + 5));
        Rational sum(0);
        for (auto [l, v] : got.support()) sum += v;
        CHECK(sum == Rational(A + 1));
      }
    }
  }
}

TEST_CASE("pushed symbols agree with the partition function") {
  checkPushedAgainstDP({1});
  checkPushedAgainstDP({1, 1});
  checkPushedAgainstDP({1, 2});
  checkPushedAgainstDP({2, 3});
  checkPushedAgainstDP({1, 2, 3});
}

TEST_CASE("pushed (1,2) closed form and vertex split") {
  const long w[] = {1, 2};
  const auto datum = buildPushedSymbol(w);
  const auto m = computeMultiplicity(datum, 8, 0, 20, Sign::Plus);
  for (long l = 0; l <= 20; ++l) {
    CHECK(m.at(l) == Rational(l, 2) + Rational(3, 4) + Rational(l % 2 ? -1 : 1, 4));
  }
  // the vertex -1 alone gives (-1)^lambda / 4
  const auto fams = computeFamilies(datum, 8);
  REQUIRE(fams.size() == 2);
  CHECK(fams[1].vertex == Cyclotomic(-1));
  std::vector<xispace::VertexFamily> only{fams[1]};
  const auto osc = xispace::multiplicity(only, 0, 9, Sign::Plus);
  for (long l = 0; l <= 9; ++l) CHECK(osc.at(l) == Rational(l % 2 ? -1 : 1, 4));
}

TEST_CASE("pushed builder errors") {
  const long bad[] = {1, 0};
  const long neg[] = {-2};
  CHECK_THROWS_AS(buildPushedSymbol(bad), Error);
  CHECK_THROWS_AS(buildPushedSymbol(neg), Error);
  CHECK_THROWS_AS(buildPushedSymbol(std::span<const long>{}), Error);
}

TEST_CASE("vertex enumeration") {
  const long a[] = {1, 2}, b[] = {1}, c[] = {2, 3};
  CHECK(enumerateVertices(a) == std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1)});
  CHECK(enumerateVertices(b) == std::vector<Cyclotomic>{Cyclotomic(1)});
  CHECK(enumerateVertices(c) ==
        std::vector<Cyclotomic>{Cyclotomic(1), Cyclotomic(-1), exact::cycRoot(3, 1), exact::cycRoot(3, 2)});
  // brute force: scan the lcm-th roots of unity
  std::mt19937 rng(5);
  std::uniform_int_distribution<long> pick(1, 8);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<long> w(1 + trial % 3);
    for (auto& x : w) x = pick(rng);
    long L = 1;
    for (long x : w) L = std::lcm(L, x);
    std::set<std::pair<long, long>> brute;
    for (long k = 0; k < L; ++k) {
      for (long x : w) {
        if ((k * x) % L == 0) {
          const auto r = exact::RootOfUnity::reduced(L, k);
          brute.insert({r.order, r.k});
          break;
        }
      }
    }
    const auto roots = enumerateVertexRoots(w);
    CHECK(roots.size() == brute.size());
    CHECK(roots.front().isOne());
    for (const auto& r : roots) CHECK(brute.count({r.order, r.k}) == 1);
    CHECK(enumerateVertices(w).size() == brute.size());
  }
}

TEST_CASE("numerator twists") {
  const auto p = buildP1(3);
  CHECK(twistNumerators(p, NumeratorTwist{}) == p);

  const auto twisted = twistNumerators(p, spinorTwist(1));
  CHECK_NOTHROW(validate(twisted));
  CHECK(computeMultiplicity(twisted, 8, -6, 9, Sign::Plus) == tableOf(-6, 9, {{3, 1}, {4, 1}, {-1, -1}, {0, -1}}));

  for (long c : {-3L, 2L, 5L}) {
    const auto shifted = twistNumerators(p, NumeratorTwist{c, Cyclotomic(1), {}});
    const auto got = computeMultiplicity(shifted, 8, -10, 15, Sign::Plus);
    for (long l = -10; l <= 15; ++l) CHECK(got.at(l) == Rational(l - c >= 0 && l - c <= 3 ? 1 : 0));
  }

  const auto scaled = twistNumerators(p, NumeratorTwist{0, Cyclotomic(Rational(-2)), {}});
  CHECK(computeMultiplicity(scaled, 8, -2, 5, Sign::Minus).at(1) == Rational(-2));
}

TEST_CASE("Weyl antisymmetrization") {
  const auto ind = oracle::p1Multiplicities(3, -6, 9);
  CHECK(weylAntisymmetrize(ind, 1).sameValues(tableOf(-5, 8, {{-1, 1}, {0, 1}, {3, -1}, {4, -1}})));
  const auto zero = weylAntisymmetrize(MultiplicityTable(-4, 4), 1);
  CHECK(zero.support().empty());
  CHECK(weylAntisymmetrize(tableOf(0, 10, {{5, 1}}), 1).sameValues(tableOf(1, 9, {{4, 1}, {6, -1}})));
  CHECK(weylAntisymmetrize(ind, 2).lambdaMin() == -4);
  CHECK(weylAntisymmetrize(ind, 2).lambdaMax() == 7);
  CHECK_THROWS_AS(weylAntisymmetrize(ind, 1, -6, 2), Error);
  CHECK_NOTHROW(weylAntisymmetrize(ind, 1, -5, 8));
}

TEST_CASE("antisymmetrization identity on random tables") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<long> val(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    const long rho = 1 + trial % 3;
    MultiplicityTable m(-12, 12);
    for (long l = -12; l <= 12; ++l) m.set(l, Rational(val(rng), 1 + trial % 4));
    const auto mt = weylAntisymmetrize(m, rho);
    for (long l = 0; l + rho <= 12 && l <= mt.lambdaMax(); ++l) {
      CHECK(mt.at(l) + mt.at(-l) == (m.at(l + rho) - m.at(-l - rho)) - (m.at(l - rho) - m.at(-l + rho)));
      CHECK(mt.at(l) - mt.at(-l) == (m.at(l + rho) - m.at(-l + rho)) - (m.at(l - rho) - m.at(-l - rho)));
    }
  }
}

TEST_CASE("dominant extraction") {
  const auto a = dominantExtract(tableOf(-5, 5, {{4, 1}, {-4, -1}}), 1);
  CHECK(a.support() == std::vector<std::pair<long, Rational>>{{4, Rational(1)}});
  CHECK(dominantExtract(MultiplicityTable(-3, 3), 1).support().empty());
  CHECK(dominantExtract(tableOf(-3, 3, {{-2, 1}, {2, -1}}), 1).support() ==
        std::vector<std::pair<long, Rational>>{{2, Rational(-1)}});
  try {
    dominantExtract(tableOf(-3, 3, {{2, 1}}), 1);
    FAIL("expected an anti-invariance error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  // spinor route on P1(0): e^{i theta} - e^{-i theta}
  const auto twisted = computeMultiplicity(twistNumerators(buildP1(0), spinorTwist(1)), 8, -4, 4, Sign::Plus);
  CHECK(twisted.sameValues(tableOf(-4, 4, {{1, 1}, {-1, -1}})));
}

TEST_CASE("validation errors") {
  auto d = buildP1(2);
  CHECK_NOTHROW(validate(d));

  auto noIdentity = d;
  noIdentity.vertices[0].g = Cyclotomic(-1);
  CHECK_THROWS_AS(validate(noIdentity), Error);

  auto notRoot = d;
  notRoot.vertices.push_back({Cyclotomic(Rational(2)), {}});
  CHECK_THROWS_AS(validate(notRoot), Error);

  auto dup = d;
  dup.vertices.push_back(d.vertices[0]);
  CHECK_THROWS_AS(validate(dup), Error);

  auto mixed = d;
  for (auto& f : mixed.vertices[0].contributions[1].factors) {
    if (f.kind == FactorKind::DenomUnipotent) f.polarization = Sign::Minus;
  }
  CHECK_THROWS_AS(validate(mixed), Error);

  const long w[] = {1, 2};
  auto pushed = buildPushedSymbol(w);
  CHECK_NOTHROW(validate(pushed));
  auto badZeta = pushed;
  for (auto& f : badZeta.vertices[1].contributions[0].factors) {
    if (f.kind == FactorKind::DenomTwisted) f.zeta = exact::cycRoot(3, 1);
  }
  CHECK_THROWS_AS(validate(badZeta), Error);
  auto badUnip = pushed;
  for (auto& f : badUnip.vertices[1].contributions[0].factors) {
    if (f.kind == FactorKind::DenomUnipotent) f.weight = 1;
  }
  // weight 1 at g = -1 is not unipotent
  CHECK_THROWS_AS(validate(badUnip), Error);
}

TEST_CASE("every shipped datum validates and satisfies the grading") {
  std::vector<LocalizationDatum> all{buildP1(0), buildP1(5, Sign::Minus)};
  for (auto w : std::vector<std::vector<long>>{{1}, {1, 1}, {1, 2}, {2, 3}, {1, 2, 3}}) all.push_back(buildPushedSymbol(w));
  for (const auto& d : all) {
    CHECK_NOTHROW(validate(d));
    for (const auto& v : d.vertices) {
      const auto s = assembleVertex(v, 6);
      int u = 0;
      for (const auto& c : v.contributions) u = std::max(u, c.unipotentPairs());
      CHECK(qtheta::satisfiesGrading(s, u));
    }
  }
}
