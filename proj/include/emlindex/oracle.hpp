#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "emlindex/exact/polynomial.hpp"
#include "emlindex/xispace/multiplicity_table.hpp"

/// Brute-force multiplicity computations.  Nothing here touches the
/// q-series or spline machinery.
namespace emlindex::oracle {

using exact::Rational;
using xispace::MultiplicityTable;

enum class OracleKind { P1Character, PartitionDP, RationalSeries };

/// Parameters of one oracle.
///  - P1Character: A.
///  - PartitionDP: weights.
///  - RationalSeries: the expansion in x of
///      sum_e numerator[e] x^e / prod_j (1 - x^{denominator[j]}),
///    with positive denominator exponents, expanded toward +infinity.
struct OracleSpec {
  OracleKind kind = OracleKind::P1Character;
  long A = 0;
  std::vector<long> weights;
  std::map<long, long> numerator;
  std::vector<long> denominator;
};

/// Throws emlindex::Error when the parameters do not fit the kind.
void validate(const OracleSpec& spec);
MultiplicityTable evaluate(const OracleSpec& spec, long lambdaMin, long lambdaMax);

/// Indicator of [0, A].
MultiplicityTable p1Multiplicities(long A, long lambdaMin, long lambdaMax);

/// Number of (n_j) >= 0 with sum n_j a_j = lambda, on [0, lambdaMax].
MultiplicityTable partitionDP(std::span<const long> weights, long lambdaMax);

/// Exponential-time recursive count, independent of partitionDP.
long partitionNaive(std::span<const long> weights, long lambda);

/// partitionDP(1,2) == lambda/2 + 3/4 + (-1)^lambda/4 on [0, lambdaMax].
bool quasipolynomialCheck(long lambdaMax);

/// prod_j (1 - x^{a_j}) * sum_lambda P(lambda) x^lambda == 1 up to degree lambdaMax.
bool generatingFunctionIdentity(std::span<const long> weights, long lambdaMax);

/// Coefficients of a rational generating function on the window.
MultiplicityTable rationalSeries(const std::map<long, long>& numerator, std::span<const long> denominator,
                                 long lambdaMin, long lambdaMax);

/// sum_lambda m(lambda) f(lambda).  Throws when m is nonzero on the window
/// boundary (the window may be cutting off support).
Rational emDirectSum(const MultiplicityTable& m, const exact::RationalPolynomial& f);

}  // namespace emlindex::oracle
