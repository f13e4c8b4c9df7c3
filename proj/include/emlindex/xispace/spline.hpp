#pragma once

#include <string>
#include <utility>
#include <vector>

#include "emlindex/exact/cyclotomic.hpp"
#include "emlindex/exact/polynomial.hpp"
#include "emlindex/qtheta.hpp"

namespace emlindex::xispace {

using exact::Cyclotomic;
using exact::CyclotomicPolynomial;
using exact::Rational;
using qtheta::Sign;

/// coeff * (d/dxi)^order delta_point
struct DeltaTerm {
  Rational point;
  int order = 0;
  Cyclotomic coeff;

  friend bool operator==(const DeltaTerm&, const DeltaTerm&) = default;
};

/// Piecewise polynomial generalized function on the real line plus a finite
/// sum of delta derivatives.
///
/// pieces()[0] governs (-inf, b_0), pieces()[j] governs (b_{j-1}, b_j) and
/// pieces().back() governs (b_last, +inf).  The canonical form has no two
/// adjacent equal pieces (so no redundant breakpoint), and deltas sorted by
/// (point, order) with unique keys and nonzero coefficients; equality of
/// distributions is equality of canonical forms.
class SplineDistribution {
 public:
  SplineDistribution() : pieces_(1) {}
  SplineDistribution(std::vector<Rational> breakpoints, std::vector<CyclotomicPolynomial> pieces,
                     std::vector<DeltaTerm> deltas = {});

  static SplineDistribution delta(const Rational& point, int order, const Cyclotomic& coeff);
  /// poly on the side of `point` selected by `side`, zero on the other.
  static SplineDistribution halfLine(const Rational& point, Sign side, const CyclotomicPolynomial& poly);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<CyclotomicPolynomial>& pieces() const { return pieces_; }
  const std::vector<DeltaTerm>& deltas() const { return deltas_; }

  bool isZero() const { return splineIsZero() && deltas_.empty(); }
  bool splineIsZero() const;
  /// Highest degree over all pieces; -1 when the spline part vanishes.
  int splineDegree() const;
  /// The polynomial valid on the open interval immediately on `side` of x.
  const CyclotomicPolynomial& pieceBeside(const Rational& x, Sign side) const;
  /// Spline value at x; x must not be a breakpoint.
  Cyclotomic valueAt(const Rational& x) const;
  bool isBreakpoint(const Rational& x) const;
  /// Right limit minus left limit of the spline part at x.
  Cyclotomic jumpAt(const Rational& x) const;
  /// The spline part alone.
  SplineDistribution splinePart() const;

  /// Distributional derivative: jumps become deltas, delta orders increase.
  SplineDistribution derivative() const;

  SplineDistribution& operator+=(const SplineDistribution& o);
  SplineDistribution& operator*=(const Cyclotomic& s);
  friend SplineDistribution operator+(SplineDistribution a, const SplineDistribution& b) { return a += b; }
  friend SplineDistribution operator*(SplineDistribution a, const Cyclotomic& s) { return a *= s; }
  friend SplineDistribution operator-(const SplineDistribution& a) { return a * Cyclotomic(-1); }
  friend bool operator==(const SplineDistribution&, const SplineDistribution&) = default;

  /// Multi-line description: one line per interval, then the deltas.
  std::string str() const;

 private:
  void canonicalize();

  std::vector<Rational> breakpoints_;
  std::vector<CyclotomicPolynomial> pieces_;
  std::vector<DeltaTerm> deltas_;
};

/// Symbolic inverse of  f^(theta) = integral e^{i xi theta} f(xi) dxi  on one term:
///   e^{im theta}                      -> delta_m
///   (-i theta)^s e^{im theta}         -> delta_m^{(s)}
///   (i/(theta+i0))^{s+1} e^{im theta} -> H(xi-m) (xi-m)^s / s!
///   (i/(theta-i0))^{s+1} e^{im theta} -> -H(m-xi) (xi-m)^s / s!
SplineDistribution inverseFourierTerm(const qtheta::ThetaTerm& term);
SplineDistribution inverseFourier(const qtheta::ThetaSum& sum);

/// One-sided limit of the spline part at v from the `side` direction.
/// Deltas never contribute.
Cyclotomic limEps(const SplineDistribution& d, const Rational& v, Sign side);

/// <d, f> for a polynomial test function: exact integral of the spline part
/// (which must be compactly supported) plus sum coeff * (-1)^s f^{(s)}(point).
Cyclotomic pair(const SplineDistribution& d, const exact::RationalPolynomial& f);

struct Sample {
  Rational xi;
  Cyclotomic value;
};

/// Samples the spline part on lo, lo+step, ..., <= hi, skipping breakpoints.
std::vector<Sample> sampleSpline(const SplineDistribution& d, const Rational& lo, const Rational& hi,
                                 const Rational& step);
/// CSV text with header "xi,value,value_exact"; value is the decimal
/// rendering of the real part (presentation only), value_exact is exact.
std::string samplesToCsv(const std::vector<Sample>& samples);

}  // namespace emlindex::xispace
