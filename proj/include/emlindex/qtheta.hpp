#pragma once

#include <compare>
#include <complex>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "emlindex/exact/cyclotomic.hpp"

/// Fourier-side engine.  A ThetaSum is a finite sum of terms
/// c * e^{i m theta} * theta^t where negative powers of theta are boundary
/// values (theta +- i0)^t; a QSeries is a truncated formal series in q whose
/// coefficients are ThetaSums.
namespace emlindex::qtheta {

using exact::Cyclotomic;

enum class Sign { Plus, Minus };

inline char signChar(Sign s) { return s == Sign::Plus ? '+' : '-'; }
Sign parseSign(const std::string& text);

struct ThetaTerm {
  Cyclotomic coeff;
  long expo = 0;  // e^{i expo theta}
  int tpow = 0;   // theta^tpow
  Sign polarization = Sign::Plus;  // meaningful only for tpow < 0
};

class ThetaSum {
 public:
  struct Key {
    long expo;
    int tpow;
    Sign polarization;
    friend auto operator<=>(const Key&, const Key&) = default;
  };

  ThetaSum() = default;
  ThetaSum(const Cyclotomic& constant);  // NOLINT(google-explicit-constructor)
  explicit ThetaSum(const ThetaTerm& term);

  /// Adds a term, normalising the polarization of nonnegative powers to "+".
  void add(const ThetaTerm& term);

  bool isZero() const { return terms_.empty(); }
  std::vector<ThetaTerm> terms() const;
  std::size_t size() const { return terms_.size(); }
  /// Smallest theta exponent present (0 for the empty sum).
  int minTpow() const;

  ThetaSum& operator+=(const ThetaSum& o);
  ThetaSum& operator-=(const ThetaSum& o);
  ThetaSum& operator*=(const Cyclotomic& s);
  friend ThetaSum operator+(ThetaSum a, const ThetaSum& b) { return a += b; }
  friend ThetaSum operator-(ThetaSum a, const ThetaSum& b) { return a -= b; }
  friend ThetaSum operator*(ThetaSum a, const Cyclotomic& s) { return a *= s; }
  /// Throws emlindex::Error when two negative powers of opposite
  /// polarization would have to be merged.
  friend ThetaSum operator*(const ThetaSum& a, const ThetaSum& b);
  friend bool operator==(const ThetaSum& a, const ThetaSum& b) { return a.terms_ == b.terms_; }

  /// Numeric value at a real nonzero theta (poles evaluated directly).
  std::complex<double> evaluate(double theta) const;
  std::string str() const;

 private:
  std::map<Key, Cyclotomic> terms_;
};

/// Truncated series sum_{k=0}^{Q} q^k a_k with ThetaSum coefficients.
class QSeries {
 public:
  explicit QSeries(int truncationOrder);
  /// Builds a series from explicit coefficients; negative q-powers or powers
  /// above the truncation order are rejected.
  static QSeries fromCoefficients(int truncationOrder, const std::map<int, ThetaSum>& coeffs);
  static QSeries constant(int truncationOrder, const ThetaSum& value);

  int truncationOrder() const { return static_cast<int>(coeffs_.size()) - 1; }
  const ThetaSum& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  ThetaSum& coeff(int k) { return coeffs_.at(static_cast<std::size_t>(k)); }

  QSeries& operator+=(const QSeries& o);
  friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
  /// Product truncated at the smaller of the two orders.
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  friend bool operator==(const QSeries&, const QSeries&) = default;

  /// sum_k a_k(theta), i.e. the numeric q = 1 partial sum.
  std::complex<double> evaluateAtOne(double theta) const;
  std::string str() const;

 private:
  std::vector<ThetaSum> coeffs_;
};

enum class FactorKind { Numerator, DenomUnipotent, DenomTwisted };

std::string factorKindName(FactorKind k);
FactorKind parseFactorKind(const std::string& text);

/// One factor of a fixed-point contribution.
///  - Numerator: 1 - zeta e^{i weight theta}, not deformed by q.
///  - DenomUnipotent: the q-deformed reciprocal pair of a tangent weight;
///    zeta must be 1.
///  - DenomTwisted: 1 / ((1 - zeta e^{i q weight theta})(1 - zeta^{-1} e^{-i q weight theta}));
///    zeta must differ from 1.
struct FactorSpec {
  FactorKind kind = FactorKind::Numerator;
  Cyclotomic zeta{1};
  long weight = 1;
  Sign polarization = Sign::Plus;

  friend bool operator==(const FactorSpec&, const FactorSpec&) = default;
};

/// Checks the kind-specific invariants; throws emlindex::Error.
void validateFactor(const FactorSpec& f);

/// B(q a theta)/(a theta)^2 = sum_t c_{2t} a^{2t-2} q^{2t} theta^{2t-2}.
QSeries expandUnipotentPair(long weight, Sign polarization, int truncationOrder);

/// q-expansion of 1/((1 - zeta e^{i q a theta})(1 - zeta^{-1} e^{-i q a theta})).
/// The q^k coefficient is a cyclotomic multiple of theta^k.
QSeries expandTwistedPair(const Cyclotomic& zeta, long weight, int truncationOrder);

/// The two-term sum 1 - zeta e^{i a theta}.
ThetaSum numeratorFactor(const Cyclotomic& zeta, long weight);

/// zeta0 e^{i mu theta} * prod(numerators) * prod(expanded denominators).
QSeries assembleContribution(long prefactorWeight, const Cyclotomic& prefactorZeta,
                             std::span<const FactorSpec> factors, int truncationOrder);

/// True iff every theta exponent in the q^k coefficient is >= k - 2*unipotentPairs
/// and has the parity of k.
bool satisfiesGrading(const QSeries& series, int unipotentPairs);

}  // namespace emlindex::qtheta
