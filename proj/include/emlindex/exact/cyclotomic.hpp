#pragma once

#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "emlindex/exact/rational.hpp"

namespace emlindex::exact {

/// Integer coefficients (constant term first) of the N-th cyclotomic polynomial.
const std::vector<long>& cyclotomicPolynomial(int order);
/// Euler's totient.
int totient(int n);
long gcd(long a, long b);
long lcm(long a, long b);

/// Exact element of Q(zeta_N), stored as coordinates in the power basis
/// 1, zeta, ..., zeta^{phi(N)-1}, always reduced modulo Phi_N.
///
/// Elements of different orders are combined by embedding both into
/// Q(zeta_lcm).  A result whose non-constant coordinates vanish is demoted
/// to order 1, so rational values never carry a spurious order.
class Cyclotomic {
 public:
  Cyclotomic() : order_(1), coords_{Rational(0)} {}
  Cyclotomic(const Rational& r) : order_(1), coords_{r} {}  // NOLINT
  Cyclotomic(long v) : Cyclotomic(Rational(v)) {}           // NOLINT
  Cyclotomic(int v) : Cyclotomic(Rational(v)) {}            // NOLINT

  /// Reduces the polynomial sum_j coeffs[j] zeta_N^j modulo Phi_N.
  static Cyclotomic fromPowerCoefficients(int order, std::vector<Rational> coeffs);
  /// Takes canonical coordinates directly; the length must equal phi(order).
  static Cyclotomic fromCoordinates(int order, std::vector<Rational> coords);

  int order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool isZero() const;
  bool isOne() const;
  bool isRational() const;
  /// Lossless conversion; throws emlindex::Error when not rational.
  Rational toRational() const;
  std::complex<double> toComplex() const;

  /// The same element expressed in Q(zeta_M); M must be a multiple of order().
  Cyclotomic embed(int targetOrder) const;
  /// Multiplicative inverse; throws emlindex::Error on zero.
  Cyclotomic inverse() const;
  Cyclotomic conj() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend Cyclotomic operator-(const Cyclotomic& a);

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

  /// "p/q" for rational values, otherwise "c0 + c1*z12^1 + ..." style.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& c) { return os << c.str(); }

 private:
  Cyclotomic(int order, std::vector<Rational> coords) : order_(order), coords_(std::move(coords)) {}
  void demote();

  int order_;
  std::vector<Rational> coords_;
};

/// zeta_N^k = exp(2 pi i k / N).
Cyclotomic cycRoot(int order, long k);
/// Alias used by the arithmetic-facing code.
inline Cyclotomic cycInverse(const Cyclotomic& z) { return z.inverse(); }
Cyclotomic pow(const Cyclotomic& base, long exponent);
/// The imaginary unit zeta_4.
inline Cyclotomic imagUnit() { return cycRoot(4, 1); }

/// A root of unity zeta_N^k kept in reduced form (k in [0,N), gcd(k,N)=1).
struct RootOfUnity {
  int order = 1;
  long k = 0;

  static RootOfUnity reduced(long order, long k);
  Cyclotomic value() const { return cycRoot(order, k); }
  RootOfUnity inverse() const { return reduced(order, -k); }
  /// (zeta_N^k)^e as a reduced root.
  RootOfUnity pow(long e) const { return reduced(order, k * e); }
  bool isOne() const { return order == 1; }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  /// Ordered by (order, k).
  friend auto operator<=>(const RootOfUnity&, const RootOfUnity&) = default;
};

/// Recognises z as a root of unity, if it is one.
std::optional<RootOfUnity> asRootOfUnity(const Cyclotomic& z);

}  // namespace emlindex::exact
