#include <random>

#include "doctest.h"
#include "emlindex/error.hpp"
#include "emlindex/exact/bernoulli.hpp"
#include "emlindex/exact/cyclotomic.hpp"
#include "emlindex/exact/polynomial.hpp"
#include "test_support.hpp"

using namespace emlindex;
using namespace emlindex::exact;

TEST_CASE("rational canonical form") {
  CHECK(Rational(6, -4) == Rational(-3, 2));
  CHECK(Rational(6, -4).denominator() == 2);
  CHECK(Rational::parse("10/-4") == Rational(-5, 2));
  CHECK(Rational::parse("-7").str() == "-7");
  CHECK(Rational(1, 3).decimal(4) == "0.3333");
  CHECK(Rational(-2, 3).decimal(2) == "-0.67");
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
}

TEST_CASE("bernoulli numbers") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == Rational(-1, 2));
  CHECK(bernoulli(2) == Rational(1, 6));
  CHECK(bernoulli(4) == Rational(-1, 30));
  CHECK(bernoulli(12) == Rational(-691, 2730));
  for (int n = 3; n < 40; n += 2) CHECK(bernoulli(n).isZero());
}

TEST_CASE("B-series coefficients") {
  CHECK(bSeriesCoefficients(0) == std::vector<Rational>{1});
  CHECK(bSeriesCoefficients(4) == std::vector<Rational>{1, Rational(1, 12), Rational(1, 240)});
  CHECK(bSeriesCoefficients(6) == std::vector<Rational>{1, Rational(1, 12), Rational(1, 240), Rational(1, 6048)});
  CHECK_THROWS_AS(bSeriesCoefficients(3), Error);
  CHECK_THROWS_AS(bSeriesCoefficients(-2), Error);
}

TEST_CASE("B-series agrees with inverting (sin(x/2)/(x/2))^2") {
  // s(x) = sin(x/2)/(x/2) = sum_t (-1)^t (x/2)^{2t} / (2t+1)!, series in y = x^2
  const int terms = 11;
  std::vector<Rational> s(terms);
  for (int t = 0; t < terms; ++t) {
    s[t] = Rational(t % 2 == 0 ? 1 : -1) * pow(Rational(1, 4), t) / factorial(2 * t + 1);
  }
  std::vector<Rational> s2(terms, Rational(0));
  for (int i = 0; i < terms; ++i)
    for (int j = 0; i + j < terms; ++j) s2[i + j] += s[i] * s[j];
  std::vector<Rational> inv(terms, Rational(0));
  inv[0] = Rational(1) / s2[0];
  for (int n = 1; n < terms; ++n) {
    Rational acc(0);
    for (int j = 1; j <= n; ++j) acc += s2[j] * inv[n - j];
    inv[n] = -acc / s2[0];
  }
  CHECK(bSeriesCoefficients(2 * (terms - 1)) == inv);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomicPolynomial(1) == std::vector<long>{-1, 1});
  CHECK(cyclotomicPolynomial(4) == std::vector<long>{1, 0, 1});
  CHECK(cyclotomicPolynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
  CHECK(cyclotomicPolynomial(105).size() == static_cast<std::size_t>(totient(105)) + 1);
  // Phi_105 is the first with a coefficient -2
  CHECK(cyclotomicPolynomial(105)[7] == -2);
}

TEST_CASE("roots of unity") {
  CHECK(cycRoot(1, 0) == Cyclotomic(1));
  CHECK(cycRoot(2, 1) == Cyclotomic(-1));
  CHECK(cycRoot(2, 1).isRational());
  CHECK(cycRoot(3, 1) + cycRoot(3, 2) == Cyclotomic(-1));
  CHECK(cycRoot(4, 1) * cycRoot(4, 1) == Cyclotomic(-1));
  CHECK(cycRoot(12, 3) == cycRoot(4, 1));
  CHECK(cycRoot(6, 2) == cycRoot(3, 1));
  CHECK(pow(cycRoot(5, 2), 5) == Cyclotomic(1));
  CHECK(pow(cycRoot(5, 2), -1) == cycRoot(5, 3));
  CHECK(cycRoot(8, 1).conj() == cycRoot(8, 7));
  const auto r = asRootOfUnity(-cycRoot(3, 1));
  REQUIRE(r.has_value());
  CHECK(*r == RootOfUnity{6, 5});
  CHECK_FALSE(asRootOfUnity(Cyclotomic(2)).has_value());
}

TEST_CASE("cyclotomic inverse") {
  CHECK(cycInverse(Cyclotomic(1) - Cyclotomic(-1)) == Cyclotomic(Rational(1, 2)));
  const Cyclotomic i = cycRoot(4, 1);
  CHECK(cycInverse(Cyclotomic(1) - i) == (Cyclotomic(1) + i) * Cyclotomic(Rational(1, 2)));
  CHECK(cycInverse(cycRoot(3, 1)) == cycRoot(3, 2));
  CHECK((Cyclotomic(1) - cycRoot(3, 1)) * (Cyclotomic(1) - cycRoot(3, 2)) == Cyclotomic(3));
  CHECK_THROWS_AS(cycInverse(Cyclotomic(0)), Error);
  CHECK_THROWS_AS(cycInverse(cycRoot(3, 1) + cycRoot(3, 2) + Cyclotomic(1)), Error);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937 rng(20261019);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = testing::randomCyclotomic(rng);
    const auto b = testing::randomCyclotomic(rng);
    const auto c = testing::randomCyclotomic(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Cyclotomic(0));
    if (!a.isZero()) CHECK(a * a.inverse() == Cyclotomic(1));
    // the complex embedding is a ring homomorphism
    CHECK(std::abs((a * b).toComplex() - a.toComplex() * b.toComplex()) < 1e-9);
  }
}

TEST_CASE("rational elements convert losslessly") {
  const Cyclotomic z = cycRoot(5, 1) + cycRoot(5, 4);  // 2 cos(2 pi / 5), not rational
  CHECK_FALSE(z.isRational());
  CHECK_THROWS_AS(z.toRational(), Error);
  const Cyclotomic golden = z * z + z;  // satisfies x^2 + x - 1 = 0
  CHECK(golden == Cyclotomic(1));
  CHECK(golden.toRational() == Rational(1));
}

TEST_CASE("polynomial helpers") {
  const auto p = RationalPolynomial::shiftedPowerOverFactorial(Rational(2), 3);  // (x-2)^3/6
  CHECK(p(Rational(2)).isZero());
  CHECK(p(Rational(5)) == Rational(27, 6));
  CHECK(p.derivative()(Rational(5)) == Rational(9, 2));
  CHECK(p.antiderivative().derivative() == p);
  CHECK((p * RationalPolynomial(Rational(0))).isZero());
}
