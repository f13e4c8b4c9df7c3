#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "emlindex/exact/polynomial.hpp"
#include "emlindex/qtheta.hpp"
#include "emlindex/xispace/multiplicity_table.hpp"
#include "emlindex/xispace/spline.hpp"

namespace emlindex::xispace {

/// The series m([q]) = sum_k q^k m_k on the weight side, for one vertex.
struct SplineFamily {
  int truncationOrder = 0;
  std::map<int, SplineDistribution> members;
  /// dim M - dim G
  int dMax = 0;
  /// max over k of (k - lowest theta power in the q^k coefficient); twice the
  /// number of unipotent pairs for graded data.
  int gradingShift = 0;

  const SplineDistribution& member(int k) const;
  friend bool operator==(const SplineFamily&, const SplineFamily&) = default;
};

/// Spline degree of m_k must not exceed dMax - k; for k > dMax the spline
/// part must vanish.  Returns a description of the first violation.
std::optional<std::string> degreeBoundViolation(const SplineFamily& family);

/// Term-wise inverse transform of every q-coefficient.  Throws
/// emlindex::Error on a degree-bound violation.
SplineFamily transformFamily(const qtheta::QSeries& series, int dMax);

/// Every spline piece outside [lo, hi] is zero and every delta lies inside.
bool compactSupportCheck(const SplineFamily& family, const Rational& lo, const Rational& hi);

struct VertexFamily {
  Cyclotomic vertex;  // g, contributing g^lambda
  SplineFamily family;
};

/// mult(lambda) = sum_g g^lambda sum_{k<=dMax} lim_eps m_k^{(g)}(lambda).
/// Throws emlindex::Error when an imaginary part survives the vertex sum or
/// when a family is truncated below its dMax.
MultiplicityTable multiplicity(const std::vector<VertexFamily>& data, long lambdaMin, long lambdaMax,
                               Sign eps);

/// The per-vertex, per-k lattice values that enter multiplicity(), for
/// diagnostics (g^lambda not applied).
Cyclotomic vertexLatticeValue(const SplineFamily& family, long lambda, Sign eps);

struct EmPairingResult {
  Rational total;
  std::vector<Rational> perOrder;  // <m_k, f> for k = 0..Q
  /// Largest k whose pairing with f is not structurally zero.
  int stabilizationOrder = 0;
};

/// sum_k <m_k, f>.  Requires compactly supported spline parts and
/// Q >= deg f + gradingShift, so every omitted k pairs to zero.
EmPairingResult emPairing(const SplineFamily& family, const exact::RationalPolynomial& f);

}  // namespace emlindex::xispace
