#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "emlindex/exact/cyclotomic.hpp"
#include "emlindex/qtheta.hpp"
#include "emlindex/xispace/family.hpp"
#include "emlindex/xispace/multiplicity_table.hpp"

/// Localization data for rank-one torus actions, the builders that produce
/// them, and the SU(2) reduction helpers.
///
/// Calibration table (locked by the oracle tests):
///  * A VertexBlock with vertex g stores the germ of the character at g^{-1};
///    the block's lattice values are multiplied by g^lambda.
///  * A weight a with g^a = 1 contributes 1/(1 - e^{i a theta}), written as
///    numerator (1 - e^{-i a theta}) over a unipotent pair.
///  * A weight a with g^a != 1 contributes 1/(1 - g^{-a} e^{i a theta}),
///    written as numerator (1 - g^{a} e^{-i a theta}) over a twisted pair
///    with zeta = g^{-a}.
///  * Poles are polarized "+" (theta + i0), which puts the support of the
///    leading spline on the positive side.
namespace emlindex::geometry {

using exact::Cyclotomic;
using qtheta::FactorSpec;
using qtheta::Sign;
using xispace::MultiplicityTable;

/// zeta0 e^{i mu theta} * prod(factors), one fixed component's term.
struct Contribution {
  long prefactorWeight = 0;
  Cyclotomic prefactorZeta{1};
  std::vector<FactorSpec> factors;
  Sign polarization = Sign::Plus;

  int unipotentPairs() const;
  friend bool operator==(const Contribution&, const Contribution&) = default;
};

struct VertexBlock {
  Cyclotomic g{1};
  std::vector<Contribution> contributions;

  friend bool operator==(const VertexBlock&, const VertexBlock&) = default;
};

struct LocalizationDatum {
  int dimM = 2;  // real dimension
  int dimG = 1;
  std::vector<VertexBlock> vertices;
  std::string label;

  int dMax() const { return dimM - dimG; }
  friend bool operator==(const LocalizationDatum&, const LocalizationDatum&) = default;
};

/// Throws emlindex::Error naming the first broken invariant: dimensions,
/// distinct root-of-unity vertices including 1, zeta/g coherence of every
/// factor, uniform polarization per contribution.
void validate(const LocalizationDatum& datum);

/// Twisted dbar on P^1 with the line bundle L^A (both fixed points at g = 1).
LocalizationDatum buildP1(long A, Sign polarization = Sign::Plus);

/// Pushed symbol on C^n whose torus weights are the given positive integers.
LocalizationDatum buildPushedSymbol(std::span<const long> weights);

/// All roots of unity zeta with zeta^{a_j} = 1 for some j, sorted by
/// (order, exponent); always starts with 1.
std::vector<exact::RootOfUnity> enumerateVertexRoots(std::span<const long> weights);
std::vector<Cyclotomic> enumerateVertices(std::span<const long> weights);

/// Extra character multiplied into every contribution:
/// scale * e^{i shift theta} * prod_j (1 - zeta_j e^{i a_j theta}).
struct NumeratorTwist {
  long shift = 0;
  Cyclotomic scale{1};
  std::vector<std::pair<Cyclotomic, long>> factors;
};

LocalizationDatum twistNumerators(const LocalizationDatum& datum, const NumeratorTwist& twist);

/// The twist by the T-character of the spinor superspace of su(2)/t,
/// e^{i rho theta} - e^{-i rho theta}.
NumeratorTwist spinorTwist(long rho = 1);

/// m~(lambda) = m(lambda + rho) - m(lambda - rho) on [min + rho, max - rho].
MultiplicityTable weylAntisymmetrize(const MultiplicityTable& m, long rho);
/// Same, on an explicit target window; throws when m does not cover
/// [lambdaMin - rho, lambdaMax + rho].
MultiplicityTable weylAntisymmetrize(const MultiplicityTable& m, long rho, long lambdaMin, long lambdaMax);

/// Restriction of an anti-invariant table to lambda > 0 (the coefficient of
/// V_lambda, highest weight lambda - rho).  Throws emlindex::Error naming the
/// offending lambda when m~(-lambda) != -m~(lambda) inside the window.
MultiplicityTable dominantExtract(const MultiplicityTable& mTilde, long rho);

/// Sum of the assembled contributions of one vertex.
qtheta::QSeries assembleVertex(const VertexBlock& block, int truncationOrder);

/// Transformed families, one per vertex, in datum order.
std::vector<xispace::VertexFamily> computeFamilies(const LocalizationDatum& datum, int truncationOrder);

MultiplicityTable computeMultiplicity(const LocalizationDatum& datum, int truncationOrder, long lambdaMin,
                                      long lambdaMax, Sign eps);

}  // namespace emlindex::geometry
