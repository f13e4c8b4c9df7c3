#pragma once

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "emlindex/exact/cyclotomic.hpp"
#include "emlindex/exact/rational.hpp"

namespace emlindex::exact {

/// Dense univariate polynomial, constant term first, trailing zeros trimmed.
/// Scalar is Rational or Cyclotomic.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(const Scalar& constant) : c_{constant} { trim(); }  // NOLINT

  static Polynomial monomial(std::size_t degree, const Scalar& coeff = Scalar(1)) {
    std::vector<Scalar> c(degree + 1, Scalar(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }

  /// (x - shift)^n / n!
  static Polynomial shiftedPowerOverFactorial(const Rational& shift, int n) {
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, Scalar(0));
    const Rational nf = factorial(n);
    for (int j = 0; j <= n; ++j) {
      // C(n,j) x^j (-shift)^{n-j}
      c[static_cast<std::size_t>(j)] = Scalar(binomial(n, j) * pow(-shift, n - j) / nf);
    }
    return Polynomial(std::move(c));
  }

  bool isZero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  Scalar coeff(std::size_t j) const { return j < c_.size() ? c_[j] : Scalar(0); }

  template <typename Point>
  Scalar operator()(const Point& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * Scalar(x) + *it;
    }
    return acc;
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> d(c_.size() - 1, Scalar(0));
    for (std::size_t j = 1; j < c_.size(); ++j) d[j - 1] = c_[j] * Scalar(Rational(static_cast<long>(j)));
    return Polynomial(std::move(d));
  }

  Polynomial derivative(int order) const {
    Polynomial p = *this;
    for (int i = 0; i < order; ++i) p = p.derivative();
    return p;
  }

  /// Antiderivative with zero constant term.
  Polynomial antiderivative() const {
    std::vector<Scalar> a(c_.size() + 1, Scalar(0));
    for (std::size_t j = 0; j < c_.size(); ++j) a[j + 1] = c_[j] * Scalar(Rational(1, static_cast<long>(j + 1)));
    return Polynomial(std::move(a));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t j = 0; j < o.c_.size(); ++j) c_[j] += o.c_[j];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) { return *this += -o; }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& v : c_) v *= s;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.isZero() || b.isZero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Human-readable form in the variable name given, e.g. "1/2*xi^2 - 3".
  std::string str(const std::string& var = "xi") const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = c_.size(); j-- > 0;) {
      if (c_[j] == Scalar(0)) continue;
      if (!first) os << " + ";
      first = false;
      const std::string cs = c_[j].str();
      if (j == 0) {
        os << cs;
      } else {
        if (cs != "1") os << "(" << cs << ")*";
        os << var;
        if (j > 1) os << "^" << j;
      }
    }
    return os.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Scalar(0)) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using RationalPolynomial = Polynomial<Rational>;
using CyclotomicPolynomial = Polynomial<Cyclotomic>;

/// Widens Rational coefficients to Cyclotomic.
inline CyclotomicPolynomial toCyclotomic(const RationalPolynomial& p) {
  std::vector<Cyclotomic> c;
  c.reserve(p.coeffs().size());
  for (const auto& r : p.coeffs()) c.emplace_back(r);
  return CyclotomicPolynomial(std::move(c));
}

}  // namespace emlindex::exact
