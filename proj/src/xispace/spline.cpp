#include "emlindex/xispace/spline.hpp"

#include <algorithm>
#include <sstream>

#include "emlindex/error.hpp"

namespace emlindex::xispace {

namespace {

// Index of the piece governing the open interval just right of x (or just
// left, for Sign::Minus).
std::size_t pieceIndex(const std::vector<Rational>& bps, const Rational& x, Sign side) {
  const auto it = side == Sign::Plus ? std::upper_bound(bps.begin(), bps.end(), x)
                                     : std::lower_bound(bps.begin(), bps.end(), x);
  return static_cast<std::size_t>(it - bps.begin());
}

}  // namespace

SplineDistribution::SplineDistribution(std::vector<Rational> breakpoints,
                                       std::vector<CyclotomicPolynomial> pieces,
                                       std::vector<DeltaTerm> deltas)
    : breakpoints_(std::move(breakpoints)), pieces_(std::move(pieces)), deltas_(std::move(deltas)) {
  if (pieces_.size() != breakpoints_.size() + 1) {
    throw Error("xispace", "a spline with n breakpoints needs n+1 pieces");
  }
  if (!std::is_sorted(breakpoints_.begin(), breakpoints_.end()) ||
      std::adjacent_find(breakpoints_.begin(), breakpoints_.end()) != breakpoints_.end()) {
    throw Error("xispace", "breakpoints must be strictly increasing");
  }
  for (const auto& d : deltas_) {
    if (d.order < 0) throw Error("xispace", "delta derivative order must be nonnegative");
  }
  canonicalize();
}

SplineDistribution SplineDistribution::delta(const Rational& point, int order, const Cyclotomic& coeff) {
  return SplineDistribution({}, {CyclotomicPolynomial()}, {DeltaTerm{point, order, coeff}});
}

SplineDistribution SplineDistribution::halfLine(const Rational& point, Sign side,
                                                const CyclotomicPolynomial& poly) {
  if (side == Sign::Plus) return SplineDistribution({point}, {CyclotomicPolynomial(), poly});
  return SplineDistribution({point}, {poly, CyclotomicPolynomial()});
}

void SplineDistribution::canonicalize() {
  std::vector<Rational> bps;
  std::vector<CyclotomicPolynomial> pcs{pieces_.front()};
  for (std::size_t j = 0; j < breakpoints_.size(); ++j) {
    if (pieces_[j + 1] == pcs.back()) continue;
    bps.push_back(breakpoints_[j]);
    pcs.push_back(pieces_[j + 1]);
  }
  breakpoints_ = std::move(bps);
  pieces_ = std::move(pcs);

  std::sort(deltas_.begin(), deltas_.end(), [](const DeltaTerm& a, const DeltaTerm& b) {
    return a.point != b.point ? a.point < b.point : a.order < b.order;
  });
  std::vector<DeltaTerm> merged;
  for (const auto& d : deltas_) {
    if (!merged.empty() && merged.back().point == d.point && merged.back().order == d.order) {
      merged.back().coeff += d.coeff;
    } else {
      merged.push_back(d);
    }
  }
  std::erase_if(merged, [](const DeltaTerm& d) { return d.coeff.isZero(); });
  deltas_ = std::move(merged);
}

bool SplineDistribution::splineIsZero() const {
  return std::all_of(pieces_.begin(), pieces_.end(), [](const auto& p) { return p.isZero(); });
}

int SplineDistribution::splineDegree() const {
  int d = -1;
  for (const auto& p : pieces_) d = std::max(d, p.degree());
  return d;
}

const CyclotomicPolynomial& SplineDistribution::pieceBeside(const Rational& x, Sign side) const {
  return pieces_[pieceIndex(breakpoints_, x, side)];
}

bool SplineDistribution::isBreakpoint(const Rational& x) const {
  return std::binary_search(breakpoints_.begin(), breakpoints_.end(), x);
}

Cyclotomic SplineDistribution::valueAt(const Rational& x) const {
  if (isBreakpoint(x)) throw Error("xispace", "spline value requested at breakpoint " + x.str());
  return pieceBeside(x, Sign::Plus)(x);
}

Cyclotomic SplineDistribution::jumpAt(const Rational& x) const {
  return pieceBeside(x, Sign::Plus)(x) - pieceBeside(x, Sign::Minus)(x);
}

SplineDistribution SplineDistribution::splinePart() const {
  return SplineDistribution(breakpoints_, pieces_);
}

SplineDistribution SplineDistribution::derivative() const {
  std::vector<CyclotomicPolynomial> pcs;
  pcs.reserve(pieces_.size());
  for (const auto& p : pieces_) pcs.push_back(p.derivative());
  std::vector<DeltaTerm> ds;
  for (const auto& b : breakpoints_) ds.push_back(DeltaTerm{b, 0, jumpAt(b)});
  for (const auto& d : deltas_) ds.push_back(DeltaTerm{d.point, d.order + 1, d.coeff});
  return SplineDistribution(breakpoints_, std::move(pcs), std::move(ds));
}

SplineDistribution& SplineDistribution::operator+=(const SplineDistribution& o) {
  std::vector<Rational> bps;
  std::set_union(breakpoints_.begin(), breakpoints_.end(), o.breakpoints_.begin(), o.breakpoints_.end(),
                 std::back_inserter(bps));
  std::vector<CyclotomicPolynomial> pcs;
  pcs.reserve(bps.size() + 1);
  pcs.push_back(pieces_.front() + o.pieces_.front());
  for (const auto& b : bps) pcs.push_back(pieceBeside(b, Sign::Plus) + o.pieceBeside(b, Sign::Plus));
  std::vector<DeltaTerm> ds = deltas_;
  ds.insert(ds.end(), o.deltas_.begin(), o.deltas_.end());
  *this = SplineDistribution(std::move(bps), std::move(pcs), std::move(ds));
  return *this;
}

SplineDistribution& SplineDistribution::operator*=(const Cyclotomic& s) {
  for (auto& p : pieces_) p *= s;
  for (auto& d : deltas_) d.coeff *= s;
  canonicalize();
  return *this;
}

std::string SplineDistribution::str() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < pieces_.size(); ++j) {
    const std::string lo = j == 0 ? "-inf" : breakpoints_[j - 1].str();
    const std::string hi = j == breakpoints_.size() ? "+inf" : breakpoints_[j].str();
    os << "  (" << lo << ", " << hi << "): " << pieces_[j].str() << "\n";
  }
  for (const auto& d : deltas_) {
    os << "  delta";
    if (d.order > 0) os << "^(" << d.order << ")";
    os << "_" << d.point << " * (" << d.coeff << ")\n";
  }
  return os.str();
}

SplineDistribution inverseFourierTerm(const qtheta::ThetaTerm& term) {
  const Rational m(term.expo);
  const Cyclotomic i = exact::imagUnit();
  if (term.tpow >= 0) {
    // theta^s = i^s (-i theta)^s
    return SplineDistribution::delta(m, term.tpow, term.coeff * exact::pow(i, term.tpow));
  }
  // theta^{-n} = (-i)^n (i/theta)^n
  const int n = -term.tpow;
  const Cyclotomic scale = term.coeff * exact::pow(-i, n);
  auto poly = CyclotomicPolynomial::shiftedPowerOverFactorial(m, n - 1) * scale;
  if (term.polarization == Sign::Plus) return SplineDistribution::halfLine(m, Sign::Plus, poly);
  return SplineDistribution::halfLine(m, Sign::Minus, -poly);
}

SplineDistribution inverseFourier(const qtheta::ThetaSum& sum) {
  SplineDistribution acc;
  for (const auto& t : sum.terms()) acc += inverseFourierTerm(t);
  return acc;
}

Cyclotomic limEps(const SplineDistribution& d, const Rational& v, Sign side) {
  return d.pieceBeside(v, side)(v);
}

Cyclotomic pair(const SplineDistribution& d, const exact::RationalPolynomial& f) {
  if (!d.pieces().front().isZero() || !d.pieces().back().isZero()) {
    throw Error("xispace", "pairing with a polynomial needs a compactly supported spline part");
  }
  const auto fc = exact::toCyclotomic(f);
  Cyclotomic acc(0);
  const auto& bps = d.breakpoints();
  for (std::size_t j = 1; j + 1 < d.pieces().size(); ++j) {
    const auto& p = d.pieces()[j];
    if (p.isZero()) continue;
    const auto prim = (p * fc).antiderivative();
    acc += prim(bps[j]) - prim(bps[j - 1]);
  }
  for (const auto& dt : d.deltas()) {
    const Cyclotomic sign = dt.order % 2 == 0 ? Cyclotomic(1) : Cyclotomic(-1);
    acc += dt.coeff * sign * Cyclotomic(f.derivative(dt.order)(dt.point));
  }
  return acc;
}

std::vector<Sample> sampleSpline(const SplineDistribution& d, const Rational& lo, const Rational& hi,
                                 const Rational& step) {
  if (step.sign() <= 0) throw Error("xispace", "sampling step must be positive");
  std::vector<Sample> out;
  for (Rational x = lo; x <= hi; x += step) {
    if (d.isBreakpoint(x)) continue;
    out.push_back(Sample{x, d.valueAt(x)});
  }
  return out;
}

std::string samplesToCsv(const std::vector<Sample>& samples) {
  std::ostringstream os;
  os << "xi,value,value_exact\n";
  for (const auto& s : samples) {
    const std::string value = s.value.isRational()
                                  ? s.value.toRational().decimal(12)
                                  : std::to_string(s.value.toComplex().real());
    os << s.xi.decimal(6) << "," << value << "," << s.value.str() << "\n";
  }
  return os.str();
}

}  // namespace emlindex::xispace
