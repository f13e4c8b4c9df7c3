#include "emlindex/oracle.hpp"

#include "emlindex/error.hpp"

namespace emlindex::oracle {

void validate(const OracleSpec& spec) {
  switch (spec.kind) {
    case OracleKind::P1Character:
      if (spec.A < 0) throw Error("oracle", "p1Character needs A >= 0");
      return;
    case OracleKind::PartitionDP:
      if (spec.weights.empty()) throw Error("oracle", "partitionDP needs at least one weight");
      for (long a : spec.weights) {
        if (a <= 0) throw Error("oracle", "partitionDP weights must be positive");
      }
      return;
    case OracleKind::RationalSeries:
      for (long a : spec.denominator) {
        if (a <= 0) throw Error("oracle", "rationalSeries denominator exponents must be positive");
      }
      return;
  }
}

MultiplicityTable evaluate(const OracleSpec& spec, long lambdaMin, long lambdaMax) {
  validate(spec);
  switch (spec.kind) {
    case OracleKind::P1Character:
      return p1Multiplicities(spec.A, lambdaMin, lambdaMax);
    case OracleKind::PartitionDP: {
      MultiplicityTable out(lambdaMin, lambdaMax);
      if (lambdaMax < 0) return out;
      const auto dp = partitionDP(spec.weights, lambdaMax);
      for (long l = std::max<long>(0, lambdaMin); l <= lambdaMax; ++l) out.set(l, dp.at(l));
      return out;
    }
    case OracleKind::RationalSeries:
      return rationalSeries(spec.numerator, spec.denominator, lambdaMin, lambdaMax);
  }
  throw Error("oracle", "unknown oracle kind");
}

MultiplicityTable p1Multiplicities(long A, long lambdaMin, long lambdaMax) {
  if (A < 0) throw Error("oracle", "p1Multiplicities needs A >= 0");
  MultiplicityTable t(lambdaMin, lambdaMax);
  for (long l = lambdaMin; l <= lambdaMax; ++l) t.set(l, Rational(l >= 0 && l <= A ? 1 : 0));
  return t;
}

MultiplicityTable partitionDP(std::span<const long> weights, long lambdaMax) {
  if (lambdaMax < 0) throw Error("oracle", "partitionDP needs lambdaMax >= 0");
  std::vector<mpz_class> count(static_cast<std::size_t>(lambdaMax) + 1, 0);
  count[0] = 1;
  for (long a : weights) {
    if (a <= 0) throw Error("oracle", "partitionDP weights must be positive");
    for (long l = a; l <= lambdaMax; ++l) {
      count[static_cast<std::size_t>(l)] += count[static_cast<std::size_t>(l - a)];
    }
  }
  MultiplicityTable t(0, lambdaMax);
  for (long l = 0; l <= lambdaMax; ++l) t.set(l, Rational(mpq_class(count[static_cast<std::size_t>(l)])));
  return t;
}

long partitionNaive(std::span<const long> weights, long lambda) {
  if (lambda == 0) return 1;
  if (lambda < 0 || weights.empty()) return 0;
  long total = 0;
  // choose how many copies of the first weight, recurse on the rest
  for (long used = 0; used <= lambda; used += weights[0]) {
    total += partitionNaive(weights.subspan(1), lambda - used);
  }
  return total;
}

bool quasipolynomialCheck(long lambdaMax) {
  const long w[] = {1, 2};
  const auto dp = partitionDP(w, lambdaMax);
  for (long l = 0; l <= lambdaMax; ++l) {
    const Rational closed = Rational(l, 2) + Rational(3, 4) + Rational(l % 2 == 0 ? 1 : -1, 4);
    if (dp.at(l) != closed) return false;
  }
  return true;
}

bool generatingFunctionIdentity(std::span<const long> weights, long lambdaMax) {
  const auto dp = partitionDP(weights, lambdaMax);
  std::vector<Rational> series(static_cast<std::size_t>(lambdaMax) + 1);
  for (long l = 0; l <= lambdaMax; ++l) series[static_cast<std::size_t>(l)] = dp.at(l);
  for (long a : weights) {
    // multiply by (1 - x^a), truncated
    for (long l = lambdaMax; l >= a; --l) {
      series[static_cast<std::size_t>(l)] -= series[static_cast<std::size_t>(l - a)];
    }
  }
  for (long l = 0; l <= lambdaMax; ++l) {
    if (series[static_cast<std::size_t>(l)] != Rational(l == 0 ? 1 : 0)) return false;
  }
  return true;
}

MultiplicityTable rationalSeries(const std::map<long, long>& numerator, std::span<const long> denominator,
                                 long lambdaMin, long lambdaMax) {
  MultiplicityTable t(lambdaMin, lambdaMax);
  if (lambdaMax < lambdaMin) return t;
  long lowest = lambdaMin;
  for (const auto& [e, c] : numerator) lowest = std::min(lowest, e);
  // dense coefficients on [lowest, lambdaMax]
  const auto size = static_cast<std::size_t>(lambdaMax - lowest + 1);
  std::vector<Rational> series(size, Rational(0));
  for (const auto& [e, c] : numerator) {
    if (e <= lambdaMax) series[static_cast<std::size_t>(e - lowest)] += Rational(c);
  }
  // divide by (1 - x^a): s_l += s_{l-a}, ascending
  for (long a : denominator) {
    if (a <= 0) throw Error("oracle", "rationalSeries denominator exponents must be positive");
    for (std::size_t l = static_cast<std::size_t>(a); l < size; ++l) {
      series[l] += series[l - static_cast<std::size_t>(a)];
    }
  }
  for (long l = lambdaMin; l <= lambdaMax; ++l) t.set(l, series[static_cast<std::size_t>(l - lowest)]);
  return t;
}

Rational emDirectSum(const MultiplicityTable& m, const exact::RationalPolynomial& f) {
  if (m.empty()) return Rational(0);
  if (!m.at(m.lambdaMin()).isZero() || !m.at(m.lambdaMax()).isZero()) {
    throw Error("oracle", "support touches the window boundary; widen the window");
  }
  Rational total(0);
  for (const auto& [l, v] : m.support()) total += v * f(Rational(l));
  return total;
}

}  // namespace emlindex::oracle
