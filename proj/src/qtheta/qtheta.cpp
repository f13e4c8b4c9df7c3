#include "emlindex/qtheta.hpp"

#include <cmath>
#include <sstream>

#include "emlindex/error.hpp"
#include "emlindex/exact/bernoulli.hpp"

namespace emlindex::qtheta {

using exact::Rational;

Sign parseSign(const std::string& text) {
  if (text == "+") return Sign::Plus;
  if (text == "-") return Sign::Minus;
  throw Error("qtheta", "polarization must be '+' or '-', got '" + text + "'");
}

ThetaSum::ThetaSum(const Cyclotomic& constant) { add(ThetaTerm{constant, 0, 0, Sign::Plus}); }

ThetaSum::ThetaSum(const ThetaTerm& term) { add(term); }

void ThetaSum::add(const ThetaTerm& term) {
  if (term.coeff.isZero()) return;
  const Key key{term.expo, term.tpow, term.tpow < 0 ? term.polarization : Sign::Plus};
  auto [it, inserted] = terms_.try_emplace(key, term.coeff);
  if (!inserted) {
    it->second += term.coeff;
    if (it->second.isZero()) terms_.erase(it);
  }
}

std::vector<ThetaTerm> ThetaSum::terms() const {
  std::vector<ThetaTerm> out;
  out.reserve(terms_.size());
  for (const auto& [k, c] : terms_) out.push_back(ThetaTerm{c, k.expo, k.tpow, k.polarization});
  return out;
}

int ThetaSum::minTpow() const {
  if (terms_.empty()) return 0;
  int m = terms_.begin()->first.tpow;
  for (const auto& [k, c] : terms_) m = std::min(m, k.tpow);
  return m;
}

ThetaSum& ThetaSum::operator+=(const ThetaSum& o) {
  for (const auto& [k, c] : o.terms_) add(ThetaTerm{c, k.expo, k.tpow, k.polarization});
  return *this;
}

ThetaSum& ThetaSum::operator-=(const ThetaSum& o) {
  for (const auto& [k, c] : o.terms_) add(ThetaTerm{-c, k.expo, k.tpow, k.polarization});
  return *this;
}

ThetaSum& ThetaSum::operator*=(const Cyclotomic& s) {
  if (s.isZero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= s;
  return *this;
}

ThetaSum operator*(const ThetaSum& a, const ThetaSum& b) {
  ThetaSum r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      Sign pol = Sign::Plus;
      if (ka.tpow < 0 && kb.tpow < 0) {
        if (ka.polarization != kb.polarization) {
          throw Error("qtheta", "product of (theta+i0) and (theta-i0) poles is not defined");
        }
        pol = ka.polarization;
      } else if (ka.tpow < 0) {
        pol = ka.polarization;
      } else if (kb.tpow < 0) {
        pol = kb.polarization;
      }
      r.add(ThetaTerm{ca * cb, ka.expo + kb.expo, ka.tpow + kb.tpow, pol});
    }
  }
  return r;
}

std::complex<double> ThetaSum::evaluate(double theta) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [k, c] : terms_) {
    acc += c.toComplex() * std::polar(1.0, static_cast<double>(k.expo) * theta) *
           std::pow(theta, k.tpow);
  }
  return acc;
}

std::string ThetaSum::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    if (k.expo != 0) os << "*e^{i*" << k.expo << "*theta}";
    if (k.tpow != 0) {
      os << "*theta^" << k.tpow;
      if (k.tpow < 0) os << "[" << signChar(k.polarization) << "i0]";
    }
  }
  return os.str();
}

QSeries::QSeries(int truncationOrder) {
  if (truncationOrder < 0) throw Error("qtheta", "truncation order must be nonnegative");
  coeffs_.resize(static_cast<std::size_t>(truncationOrder) + 1);
}

QSeries QSeries::fromCoefficients(int truncationOrder, const std::map<int, ThetaSum>& coeffs) {
  QSeries s(truncationOrder);
  for (const auto& [k, v] : coeffs) {
    if (k < 0) throw Error("qtheta", "negative power q^" + std::to_string(k) + " (grading violation)");
    if (k > truncationOrder) continue;
    s.coeff(k) += v;
  }
  return s;
}

QSeries QSeries::constant(int truncationOrder, const ThetaSum& value) {
  QSeries s(truncationOrder);
  s.coeff(0) = value;
  return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
  const int q = std::min(truncationOrder(), o.truncationOrder());
  coeffs_.resize(static_cast<std::size_t>(q) + 1);
  for (int k = 0; k <= q; ++k) coeff(k) += o.coeff(k);
  return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
  const int q = std::min(a.truncationOrder(), b.truncationOrder());
  QSeries r(q);
  for (int i = 0; i <= q; ++i) {
    if (a.coeff(i).isZero()) continue;
    for (int j = 0; i + j <= q; ++j) {
      if (b.coeff(j).isZero()) continue;
      r.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
  }
  return r;
}

std::complex<double> QSeries::evaluateAtOne(double theta) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& c : coeffs_) acc += c.evaluate(theta);
  return acc;
}

std::string QSeries::str() const {
  std::ostringstream os;
  for (int k = 0; k <= truncationOrder(); ++k) {
    if (coeff(k).isZero()) continue;
    os << "q^" << k << ": " << coeff(k).str() << "\n";
  }
  return os.str();
}

std::string factorKindName(FactorKind k) {
  switch (k) {
    case FactorKind::Numerator: return "numerator";
    case FactorKind::DenomUnipotent: return "denomUnipotent";
    case FactorKind::DenomTwisted: return "denomTwisted";
  }
  return "?";
}

FactorKind parseFactorKind(const std::string& text) {
  if (text == "numerator") return FactorKind::Numerator;
  if (text == "denomUnipotent") return FactorKind::DenomUnipotent;
  if (text == "denomTwisted") return FactorKind::DenomTwisted;
  throw Error("qtheta", "unknown factor kind '" + text + "'");
}

void validateFactor(const FactorSpec& f) {
  switch (f.kind) {
    case FactorKind::Numerator:
      return;
    case FactorKind::DenomUnipotent:
      if (!f.zeta.isOne()) throw Error("qtheta", "denomUnipotent factor requires zeta = 1");
      if (f.weight == 0) throw Error("qtheta", "denominator weight must be nonzero");
      return;
    case FactorKind::DenomTwisted:
      if (f.zeta.isOne()) {
        throw Error("qtheta", "denomTwisted factor with zeta = 1 (must be expanded as unipotent)");
      }
      if (f.zeta.isZero()) throw Error("qtheta", "denomTwisted factor with zeta = 0");
      if (f.weight == 0) throw Error("qtheta", "denominator weight must be nonzero");
      return;
  }
}

QSeries expandUnipotentPair(long weight, Sign polarization, int truncationOrder) {
  if (weight == 0) throw Error("qtheta", "unipotent pair with zero weight");
  QSeries s(truncationOrder);
  const auto c = exact::bSeriesCoefficients(truncationOrder - truncationOrder % 2);
  for (std::size_t t = 0; t < c.size(); ++t) {
    const int k = 2 * static_cast<int>(t);
    const Rational coeff = c[t] * exact::pow(Rational(weight), k - 2);
    s.coeff(k).add(ThetaTerm{Cyclotomic(coeff), 0, k - 2, polarization});
  }
  return s;
}

QSeries expandTwistedPair(const Cyclotomic& zeta, long weight, int truncationOrder) {
  if (zeta.isOne()) {
    throw Error("qtheta", "twisted pair with zeta = 1 must be routed to expandUnipotentPair");
  }
  if (weight == 0) throw Error("qtheta", "twisted pair with zero weight");
  const Cyclotomic zinv = zeta.inverse();
  const Cyclotomic i = exact::imagUnit();
  // g(u) = (1 - zeta e^{iu})(1 - zeta^{-1} e^{-iu}) = 2 - zeta e^{iu} - zeta^{-1} e^{-iu}
  std::vector<Cyclotomic> g(static_cast<std::size_t>(truncationOrder) + 1);
  g[0] = Cyclotomic(2) - zeta - zinv;
  for (int n = 1; n <= truncationOrder; ++n) {
    const Cyclotomic in = exact::pow(i, n);
    const Cyclotomic minusIn = exact::pow(-i, n);
    g[static_cast<std::size_t>(n)] = -(zeta * in + zinv * minusIn) * Cyclotomic(Rational(1) / exact::factorial(n));
  }
  // reciprocal power series h = 1/g
  std::vector<Cyclotomic> h(g.size());
  const Cyclotomic g0inv = g[0].inverse();
  h[0] = g0inv;
  for (std::size_t n = 1; n < g.size(); ++n) {
    Cyclotomic acc(0);
    for (std::size_t j = 1; j <= n; ++j) acc += g[j] * h[n - j];
    h[n] = -(g0inv * acc);
  }
  QSeries s(truncationOrder);
  for (int k = 0; k <= truncationOrder; ++k) {
    const Cyclotomic coeff = h[static_cast<std::size_t>(k)] * Cyclotomic(exact::pow(Rational(weight), k));
    s.coeff(k).add(ThetaTerm{coeff, 0, k, Sign::Plus});
  }
  return s;
}

ThetaSum numeratorFactor(const Cyclotomic& zeta, long weight) {
  ThetaSum s(Cyclotomic(1));
  s.add(ThetaTerm{-zeta, weight, 0, Sign::Plus});
  return s;
}

QSeries assembleContribution(long prefactorWeight, const Cyclotomic& prefactorZeta,
                             std::span<const FactorSpec> factors, int truncationOrder) {
  bool havePolarization = false;
  Sign polarization = Sign::Plus;
  int unipotentPairs = 0;
  for (const auto& f : factors) {
    validateFactor(f);
    if (f.kind != FactorKind::DenomUnipotent) continue;
    ++unipotentPairs;
    if (havePolarization && f.polarization != polarization) {
      throw Error("qtheta", "mixed polarizations within one contribution");
    }
    havePolarization = true;
    polarization = f.polarization;
  }

  ThetaSum numerator(ThetaTerm{prefactorZeta, prefactorWeight, 0, Sign::Plus});
  for (const auto& f : factors) {
    if (f.kind == FactorKind::Numerator) numerator = numerator * numeratorFactor(f.zeta, f.weight);
  }
  QSeries result = QSeries::constant(truncationOrder, numerator);
  for (const auto& f : factors) {
    if (f.kind == FactorKind::DenomUnipotent) {
      result = result * expandUnipotentPair(f.weight, f.polarization, truncationOrder);
    } else if (f.kind == FactorKind::DenomTwisted) {
      result = result * expandTwistedPair(f.zeta, f.weight, truncationOrder);
    }
  }
  for (int k = 0; k <= truncationOrder; ++k) {
    if (!result.coeff(k).isZero() && result.coeff(k).minTpow() < -2 * unipotentPairs) {
      throw Error("qtheta", "pole order exceeds twice the number of unipotent pairs");
    }
  }
  return result;
}

bool satisfiesGrading(const QSeries& series, int unipotentPairs) {
  for (int k = 0; k <= series.truncationOrder(); ++k) {
    for (const auto& t : series.coeff(k).terms()) {
      if (t.tpow < k - 2 * unipotentPairs) return false;
      if (((t.tpow - k) % 2 + 2) % 2 != 0) return false;
    }
  }
  return true;
}

}  // namespace emlindex::qtheta
