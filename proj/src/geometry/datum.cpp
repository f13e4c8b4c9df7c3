#include <algorithm>
#include <set>

#include "emlindex/error.hpp"
#include "emlindex/geometry.hpp"

namespace emlindex::geometry {

using exact::RootOfUnity;
using qtheta::FactorKind;

int Contribution::unipotentPairs() const {
  return static_cast<int>(std::count_if(factors.begin(), factors.end(), [](const FactorSpec& f) {
    return f.kind == FactorKind::DenomUnipotent;
  }));
}

void validate(const LocalizationDatum& datum) {
  const std::string where = "datum '" + datum.label + "': ";
  if (datum.dimG != 1) throw Error("geometry", where + "only rank-one groups are supported (dimG = 1)");
  if (datum.dimM < 0 || datum.dimM % 2 != 0) throw Error("geometry", where + "dimM must be even and nonnegative");
  if (datum.dMax() < 0) throw Error("geometry", where + "dimM - dimG must be nonnegative");
  if (datum.vertices.empty()) throw Error("geometry", where + "no vertices");

  std::set<RootOfUnity> seen;
  bool haveIdentity = false;
  for (std::size_t vi = 0; vi < datum.vertices.size(); ++vi) {
    const auto& block = datum.vertices[vi];
    const std::string at = where + "vertex " + std::to_string(vi) + ": ";
    const auto root = exact::asRootOfUnity(block.g);
    if (!root) throw Error("geometry", at + "g = " + block.g.str() + " is not a root of unity");
    if (!seen.insert(*root).second) throw Error("geometry", at + "duplicate vertex " + block.g.str());
    haveIdentity = haveIdentity || root->isOne();

    for (std::size_t ci = 0; ci < block.contributions.size(); ++ci) {
      const auto& c = block.contributions[ci];
      const std::string cat = at + "contribution " + std::to_string(ci) + ": ";
      for (const auto& f : c.factors) {
        try {
          qtheta::validateFactor(f);
        } catch (const Error& e) {
          throw Error("geometry", cat + e.what());
        }
        if (f.kind == FactorKind::DenomUnipotent) {
          if (f.polarization != c.polarization) {
            throw Error("geometry", cat + "mixed polarization among unipotent factors");
          }
          if (!root->pow(f.weight).isOne()) {
            throw Error("geometry", cat + "unipotent pair of weight " + std::to_string(f.weight) +
                                        " but g^a != 1");
          }
        } else if (f.kind == FactorKind::DenomTwisted) {
          const Cyclotomic ga = root->pow(f.weight).value();
          const Cyclotomic gma = root->pow(-f.weight).value();
          if (!(f.zeta == ga) && !(f.zeta == gma)) {
            throw Error("geometry", cat + "twisted factor zeta = " + f.zeta.str() + " is not g^(+-" +
                                        std::to_string(f.weight) + ")");
          }
        }
      }
    }
  }
  if (!haveIdentity) throw Error("geometry", where + "the identity vertex is missing");
}

LocalizationDatum buildP1(long A, Sign polarization) {
  if (A < 0) throw Error("geometry", "buildP1 needs A >= 0");
  const FactorSpec pair{FactorKind::DenomUnipotent, Cyclotomic(1), 1, polarization};
  Contribution south{0, Cyclotomic(1), {{FactorKind::Numerator, Cyclotomic(1), -1, Sign::Plus}, pair},
                     polarization};
  Contribution north{A, Cyclotomic(1), {{FactorKind::Numerator, Cyclotomic(1), 1, Sign::Plus}, pair},
                     polarization};
  LocalizationDatum d;
  d.dimM = 2;
  d.label = "P1(A=" + std::to_string(A) + ")";
  d.vertices.push_back(VertexBlock{Cyclotomic(1), {std::move(south), std::move(north)}});
  return d;
}

std::vector<RootOfUnity> enumerateVertexRoots(std::span<const long> weights) {
  std::set<RootOfUnity> roots;
  for (long a : weights) {
    if (a <= 0) throw Error("geometry", "weights must be positive integers");
    for (long k = 0; k < a; ++k) roots.insert(RootOfUnity::reduced(a, k));
  }
  return {roots.begin(), roots.end()};
}

std::vector<Cyclotomic> enumerateVertices(std::span<const long> weights) {
  std::vector<Cyclotomic> out;
  for (const auto& r : enumerateVertexRoots(weights)) out.push_back(r.value());
  return out;
}

LocalizationDatum buildPushedSymbol(std::span<const long> weights) {
  if (weights.empty()) throw Error("geometry", "pushed symbol needs at least one weight");
  LocalizationDatum d;
  d.dimM = 2 * static_cast<int>(weights.size());
  d.label = "pushed(";
  for (std::size_t j = 0; j < weights.size(); ++j) d.label += (j ? "," : "") + std::to_string(weights[j]);
  d.label += ")";
  for (const auto& g : enumerateVertexRoots(weights)) {
    Contribution c;
    c.polarization = Sign::Plus;
    for (long a : weights) {
      if (g.pow(a).isOne()) {
        c.factors.push_back({FactorKind::Numerator, Cyclotomic(1), -a, Sign::Plus});
        c.factors.push_back({FactorKind::DenomUnipotent, Cyclotomic(1), a, Sign::Plus});
      } else {
        c.factors.push_back({FactorKind::Numerator, g.pow(a).value(), -a, Sign::Plus});
        c.factors.push_back({FactorKind::DenomTwisted, g.pow(-a).value(), a, Sign::Plus});
      }
    }
    d.vertices.push_back(VertexBlock{g.value(), {std::move(c)}});
  }
  return d;
}

LocalizationDatum twistNumerators(const LocalizationDatum& datum, const NumeratorTwist& twist) {
  LocalizationDatum out = datum;
  for (auto& block : out.vertices) {
    for (auto& c : block.contributions) {
      c.prefactorWeight += twist.shift;
      c.prefactorZeta *= twist.scale;
      for (const auto& [zeta, a] : twist.factors) {
        c.factors.push_back({FactorKind::Numerator, zeta, a, Sign::Plus});
      }
    }
  }
  return out;
}

NumeratorTwist spinorTwist(long rho) {
  // e^{i rho theta} - e^{-i rho theta} = e^{i rho theta} (1 - e^{-2 i rho theta})
  return NumeratorTwist{rho, Cyclotomic(1), {{Cyclotomic(1), -2 * rho}}};
}

MultiplicityTable weylAntisymmetrize(const MultiplicityTable& m, long rho, long lambdaMin, long lambdaMax) {
  if (rho <= 0) throw Error("geometry", "rho must be positive");
  if (lambdaMin - rho < m.lambdaMin() || lambdaMax + rho > m.lambdaMax()) {
    throw Error("geometry", "insufficient window: antisymmetrizing on [" + std::to_string(lambdaMin) + ", " +
                                std::to_string(lambdaMax) + "] needs values on [" +
                                std::to_string(lambdaMin - rho) + ", " + std::to_string(lambdaMax + rho) + "]");
  }
  MultiplicityTable out(lambdaMin, lambdaMax);
  for (long l = lambdaMin; l <= lambdaMax; ++l) out.set(l, m.at(l + rho) - m.at(l - rho));
  return out;
}

MultiplicityTable weylAntisymmetrize(const MultiplicityTable& m, long rho) {
  if (m.lambdaMax() - m.lambdaMin() < 2 * rho) {
    throw Error("geometry", "insufficient window: table narrower than 2*rho");
  }
  return weylAntisymmetrize(m, rho, m.lambdaMin() + rho, m.lambdaMax() - rho);
}

MultiplicityTable dominantExtract(const MultiplicityTable& mTilde, long rho) {
  if (rho <= 0) throw Error("geometry", "rho must be positive");
  for (long l = mTilde.lambdaMin(); l <= mTilde.lambdaMax(); ++l) {
    if (!mTilde.contains(-l)) continue;
    if (mTilde.at(-l) != -mTilde.at(l)) {
      throw Error("geometry", "table is not anti-invariant at lambda = " + std::to_string(l) + ": m(" +
                                  std::to_string(l) + ") = " + mTilde.at(l).str() + ", m(" +
                                  std::to_string(-l) + ") = " + mTilde.at(-l).str());
    }
  }
  const long lo = std::max<long>(1, mTilde.lambdaMin());
  MultiplicityTable out(lo, mTilde.lambdaMax());
  for (long l = lo; l <= mTilde.lambdaMax(); ++l) out.set(l, mTilde.at(l));
  return out;
}

}  // namespace emlindex::geometry
