#include "emlindex/exact/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "emlindex/error.hpp"

namespace emlindex::exact {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly& p) {
  while (!p.empty() && p.back().isZero()) p.pop_back();
}

RatPoly fromIntegers(const std::vector<long>& v) {
  RatPoly p;
  p.reserve(v.size());
  for (long x : v) p.emplace_back(x);
  return p;
}

// Remainder of p modulo the monic integer polynomial m.
RatPoly reduceMonic(RatPoly p, const std::vector<long>& m) {
  const std::size_t deg = m.size() - 1;
  trim(p);
  while (p.size() > deg) {
    const Rational lead = p.back();
    const std::size_t shift = p.size() - 1 - deg;
    for (std::size_t j = 0; j <= deg; ++j) p[shift + j] -= lead * Rational(m[j]);
    p.pop_back();
    trim(p);
  }
  p.resize(deg, Rational(0));
  return p;
}

// Quotient and remainder over Q; divisor must be nonzero and trimmed.
std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
  trim(a);
  RatPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational(0));
  const Rational lead = b.back();
  while (!a.empty() && a.size() >= b.size()) {
    const Rational f = a.back() / lead;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return {q, a};
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].isZero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RatPoly sub(RatPoly a, const RatPoly& b) {
  if (b.size() > a.size()) a.resize(b.size(), Rational(0));
  for (std::size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  trim(a);
  return a;
}

}  // namespace

long gcd(long a, long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    const long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

int totient(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<long>& cyclotomicPolynomial(int order) {
  if (order < 1) throw Error("exact", "cyclotomic order must be positive");
  static std::mutex mu;
  static std::map<int, std::vector<long>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = cache.find(order); it != cache.end()) return it->second;
  }
  // x^N - 1 divided by Phi_d for every proper divisor d.
  std::vector<long> p(static_cast<std::size_t>(order) + 1, 0);
  p[0] = -1;
  p.back() = 1;
  for (int d = 1; d < order; ++d) {
    if (order % d != 0) continue;
    const std::vector<long>& f = cyclotomicPolynomial(d);
    const std::size_t fd = f.size() - 1;
    std::vector<long> q(p.size() - fd, 0);
    for (std::size_t i = p.size(); i-- > fd;) {
      const long c = p[i];
      q[i - fd] = c;
      for (std::size_t j = 0; j <= fd; ++j) p[i - fd + j] -= c * f[j];
    }
    p = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(order, std::move(p)).first->second;
}

Cyclotomic Cyclotomic::fromPowerCoefficients(int order, std::vector<Rational> coeffs) {
  Cyclotomic z(order, reduceMonic(std::move(coeffs), cyclotomicPolynomial(order)));
  z.demote();
  return z;
}

Cyclotomic Cyclotomic::fromCoordinates(int order, std::vector<Rational> coords) {
  if (order < 1) throw Error("exact", "cyclotomic order must be positive");
  if (static_cast<int>(coords.size()) != totient(order)) {
    throw Error("exact", "order " + std::to_string(order) + " needs " +
                             std::to_string(totient(order)) + " coordinates, got " +
                             std::to_string(coords.size()));
  }
  Cyclotomic z(order, std::move(coords));
  z.demote();
  return z;
}

void Cyclotomic::demote() {
  for (std::size_t j = 1; j < coords_.size(); ++j) {
    if (!coords_[j].isZero()) return;
  }
  if (coords_.empty()) coords_.emplace_back(0);
  coords_.resize(1);
  order_ = 1;
}

bool Cyclotomic::isZero() const { return isRational() && coords_[0].isZero(); }
bool Cyclotomic::isOne() const { return isRational() && coords_[0] == Rational(1); }
bool Cyclotomic::isRational() const { return order_ == 1; }

Rational Cyclotomic::toRational() const {
  if (!isRational()) throw Error("exact", "cyclotomic value " + str() + " is not rational");
  return coords_[0];
}

std::complex<double> Cyclotomic::toComplex() const {
  std::complex<double> acc{0.0, 0.0};
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / order_;
    acc += coords_[j].toDouble() * std::polar(1.0, angle);
  }
  return acc;
}

Cyclotomic Cyclotomic::embed(int targetOrder) const {
  if (targetOrder % order_ != 0) {
    throw Error("exact", "cannot embed order " + std::to_string(order_) + " into order " +
                             std::to_string(targetOrder));
  }
  if (targetOrder == order_) return *this;
  const std::size_t stride = static_cast<std::size_t>(targetOrder / order_);
  RatPoly p((coords_.size() - 1) * stride + 1, Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) p[j * stride] = coords_[j];
  return Cyclotomic(targetOrder, reduceMonic(std::move(p), cyclotomicPolynomial(targetOrder)));
}

Cyclotomic Cyclotomic::inverse() const {
  if (isZero()) throw Error("exact", "inverse of zero (singular denominator)");
  if (isRational()) return Cyclotomic(Rational(1) / coords_[0]);
  const RatPoly phi = fromIntegers(cyclotomicPolynomial(order_));
  RatPoly r0 = phi, r1 = coords_;
  trim(r1);
  RatPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s2 = sub(s0, mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 is a nonzero constant because Phi_N is irreducible.
  const Rational g = r0.at(0);
  for (auto& c : s0) c /= g;
  return fromPowerCoefficients(order_, std::move(s0));
}

Cyclotomic Cyclotomic::conj() const {
  RatPoly p(static_cast<std::size_t>(order_), Rational(0));
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    p[(static_cast<std::size_t>(order_) - j) % static_cast<std::size_t>(order_)] += coords_[j];
  }
  return fromPowerCoefficients(order_, std::move(p));
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  const int l = static_cast<int>(lcm(order_, o.order_));
  Cyclotomic a = embed(l);
  const Cyclotomic b = o.embed(l);
  for (std::size_t j = 0; j < a.coords_.size(); ++j) a.coords_[j] += b.coords_[j];
  a.demote();
  return *this = std::move(a);
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.isRational()) {
    for (auto& c : coords_) c *= o.coords_[0];
    demote();
    return *this;
  }
  if (isRational()) {
    const Rational s = coords_[0];
    *this = o;
    for (auto& c : coords_) c *= s;
    demote();
    return *this;
  }
  const int l = static_cast<int>(lcm(order_, o.order_));
  const Cyclotomic a = embed(l);
  const Cyclotomic b = o.embed(l);
  *this = fromPowerCoefficients(l, mul(a.coords_, b.coords_));
  return *this;
}

Cyclotomic operator-(const Cyclotomic& a) {
  Cyclotomic r = a;
  for (auto& c : r.coords_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coords_ == b.coords_;
  // demotion makes rational values order 1; a rational never equals a non-rational
  if (a.isRational() != b.isRational()) return false;
  const int l = static_cast<int>(lcm(a.order_, b.order_));
  return a.embed(l).coords_ == b.embed(l).coords_;
}

std::string Cyclotomic::str() const {
  if (isRational()) return coords_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (coords_[j].isZero()) continue;
    if (!first) os << " + ";
    first = false;
    if (j == 0) {
      os << coords_[j];
    } else {
      if (coords_[j] != Rational(1)) os << coords_[j] << "*";
      os << "z" << order_;
      if (j > 1) os << "^" << j;
    }
  }
  return os.str();
}

Cyclotomic cycRoot(int order, long k) {
  if (order < 1) throw Error("exact", "cycRoot needs a positive order");
  const long r = ((k % order) + order) % order;
  RatPoly p(static_cast<std::size_t>(r) + 1, Rational(0));
  p.back() = Rational(1);
  return Cyclotomic::fromPowerCoefficients(order, std::move(p));
}

Cyclotomic pow(const Cyclotomic& base, long exponent) {
  if (exponent < 0) return pow(base.inverse(), -exponent);
  Cyclotomic result(1);
  Cyclotomic b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

RootOfUnity RootOfUnity::reduced(long order, long k) {
  if (order < 1) throw Error("exact", "root of unity needs a positive order");
  long r = ((k % order) + order) % order;
  const long g = gcd(r, order);  // gcd(0, N) = N
  return RootOfUnity{static_cast<int>(order / g), r / g};
}

std::optional<RootOfUnity> asRootOfUnity(const Cyclotomic& z) {
  const int m = static_cast<int>(lcm(2, z.order()));
  for (long k = 0; k < m; ++k) {
    if (cycRoot(m, k) == z) return RootOfUnity::reduced(m, k);
  }
  return std::nullopt;
}

}  // namespace emlindex::exact
