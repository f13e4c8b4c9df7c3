#include "emlindex/xispace/family.hpp"

#include <algorithm>

#include "emlindex/error.hpp"

namespace emlindex::xispace {

const SplineDistribution& SplineFamily::member(int k) const {
  static const SplineDistribution zero;
  auto it = members.find(k);
  return it == members.end() ? zero : it->second;
}

std::optional<std::string> degreeBoundViolation(const SplineFamily& family) {
  for (const auto& [k, m] : family.members) {
    const int deg = m.splineDegree();
    if (deg < 0) continue;
    if (k > family.dMax) {
      return "m_" + std::to_string(k) + " has a nonzero spline part although k > dMax = " +
             std::to_string(family.dMax);
    }
    if (deg > family.dMax - k) {
      return "m_" + std::to_string(k) + " has spline degree " + std::to_string(deg) + " > dMax - k = " +
             std::to_string(family.dMax - k);
    }
  }
  return std::nullopt;
}

SplineFamily transformFamily(const qtheta::QSeries& series, int dMax) {
  SplineFamily family;
  family.truncationOrder = series.truncationOrder();
  family.dMax = dMax;
  for (int k = 0; k <= series.truncationOrder(); ++k) {
    const auto& c = series.coeff(k);
    if (c.isZero()) continue;
    family.gradingShift = std::max(family.gradingShift, k - c.minTpow());
    auto m = inverseFourier(c);
    if (!m.isZero()) family.members.emplace(k, std::move(m));
  }
  if (auto v = degreeBoundViolation(family)) throw Error("xispace", "degree bound violated: " + *v);
  return family;
}

bool compactSupportCheck(const SplineFamily& family, const Rational& lo, const Rational& hi) {
  for (const auto& [k, m] : family.members) {
    const auto& bps = m.breakpoints();
    const auto& pcs = m.pieces();
    for (std::size_t j = 0; j < pcs.size(); ++j) {
      if (pcs[j].isZero()) continue;
      // piece j lives on (bps[j-1], bps[j]); it must sit inside [lo, hi]
      if (j == 0 || j == bps.size()) return false;
      if (bps[j - 1] < lo || bps[j] > hi) return false;
    }
    for (const auto& d : m.deltas()) {
      if (d.point < lo || d.point > hi) return false;
    }
  }
  return true;
}

Cyclotomic vertexLatticeValue(const SplineFamily& family, long lambda, Sign eps) {
  Cyclotomic acc(0);
  const Rational v(lambda);
  for (const auto& [k, m] : family.members) {
    if (k > family.dMax) break;
    acc += limEps(m, v, eps);
  }
  return acc;
}

MultiplicityTable multiplicity(const std::vector<VertexFamily>& data, long lambdaMin, long lambdaMax,
                               Sign eps) {
  if (lambdaMax < lambdaMin) throw Error("xispace", "empty multiplicity window");
  for (const auto& vf : data) {
    if (vf.family.truncationOrder < vf.family.dMax) {
      throw Error("xispace", "truncation order " + std::to_string(vf.family.truncationOrder) +
                                 " is below dMax = " + std::to_string(vf.family.dMax));
    }
    if (auto v = degreeBoundViolation(vf.family)) throw Error("xispace", "degree bound violated: " + *v);
  }
  MultiplicityTable table(lambdaMin, lambdaMax);
  for (long lambda = lambdaMin; lambda <= lambdaMax; ++lambda) {
    Cyclotomic total(0);
    for (const auto& vf : data) {
      const Cyclotomic local = vertexLatticeValue(vf.family, lambda, eps);
      if (local.isZero()) continue;
      total += exact::pow(vf.vertex, lambda) * local;
    }
    if (!total.isRational()) {
      throw Error("xispace", "multiplicity at lambda = " + std::to_string(lambda) +
                                 " is not rational (" + total.str() + "); inconsistent vertex data");
    }
    table.set(lambda, total.toRational());
  }
  return table;
}

EmPairingResult emPairing(const SplineFamily& family, const exact::RationalPolynomial& f) {
  const int degF = std::max(f.degree(), 0);
  if (family.truncationOrder < degF + family.gradingShift) {
    throw Error("xispace", "truncation order " + std::to_string(family.truncationOrder) +
                               " too small for a degree " + std::to_string(degF) +
                               " test function (need >= " + std::to_string(degF + family.gradingShift) + ")");
  }
  EmPairingResult r;
  r.total = Rational(0);
  r.perOrder.assign(static_cast<std::size_t>(family.truncationOrder) + 1, Rational(0));
  for (const auto& [k, m] : family.members) {
    bool structural = !m.splineIsZero();
    for (const auto& d : m.deltas()) structural = structural || d.order <= f.degree();
    if (structural) r.stabilizationOrder = std::max(r.stabilizationOrder, k);
    const Cyclotomic value = pair(m, f);
    if (!value.isRational()) {
      throw Error("xispace", "pairing of m_" + std::to_string(k) + " is not rational: " + value.str());
    }
    r.perOrder[static_cast<std::size_t>(k)] = value.toRational();
    r.total += value.toRational();
  }
  const int bound = degF + family.gradingShift;
  for (int k = bound + 1; k <= family.truncationOrder; ++k) {
    if (!r.perOrder[static_cast<std::size_t>(k)].isZero()) {
      throw Error("xispace", "pairing did not stabilize: <m_" + std::to_string(k) + ", f> != 0");
    }
  }
  return r;
}

}  // namespace emlindex::xispace
