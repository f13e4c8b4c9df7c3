#include "emlindex/exact/rational.hpp"

#include <sstream>

#include "emlindex/error.hpp"

namespace emlindex::exact {

Rational::Rational(long num, long den) {
  if (den == 0) throw Error("exact", "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error("exact", "empty rational literal");
  const auto slash = s.find('/');
  mpz_class num, den(1);
  try {
    num = mpz_class(s.substr(0, slash), 10);
    if (slash != std::string::npos) den = mpz_class(s.substr(slash + 1), 10);
  } catch (const std::invalid_argument&) {
    throw Error("exact", "malformed rational literal '" + s + "'");
  }
  if (den == 0) throw Error("exact", "zero denominator in '" + s + "'");
  mpq_class q(num, den);
  q.canonicalize();
  return Rational(std::move(q));
}

long Rational::toLong() const {
  if (!isInteger() || !q_.get_num().fits_slong_p()) {
    throw Error("exact", "value " + str() + " is not a machine integer");
  }
  return q_.get_num().get_si();
}

std::string Rational::str() const { return q_.get_str(10); }

std::string Rational::decimal(int digits) const {
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // round half away from zero at the requested precision
  mpz_class num = abs(q_.get_num()) * scale * 2 + q_.get_den();
  mpz_class den = q_.get_den() * 2;
  mpz_class scaled = num / den;
  mpz_class whole = scaled / scale;
  mpz_class frac = scaled % scale;
  std::ostringstream os;
  if (sgn(q_) < 0 && scaled != 0) os << '-';
  os << whole.get_str();
  if (digits > 0) {
    std::string f = frac.get_str();
    os << '.' << std::string(static_cast<std::size_t>(digits) - f.size(), '0') << f;
  }
  return os.str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.isZero()) throw Error("exact", "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, int exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.raw().get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.raw().get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(mpq_class(num, den));
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.raw().get_num_mpz_t(), r.raw().get_den_mpz_t());
  return Rational(mpq_class(q));
}

Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(mpq_class(b));
}

Rational factorial(long n) {
  if (n < 0) throw Error("exact", "factorial of a negative number");
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Rational(mpq_class(f));
}

}  // namespace emlindex::exact
