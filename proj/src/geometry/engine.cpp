#include "emlindex/error.hpp"
#include "emlindex/geometry.hpp"

namespace emlindex::geometry {

qtheta::QSeries assembleVertex(const VertexBlock& block, int truncationOrder) {
  qtheta::QSeries total(truncationOrder);
  for (const auto& c : block.contributions) {
    total += qtheta::assembleContribution(c.prefactorWeight, c.prefactorZeta, c.factors, truncationOrder);
  }
  return total;
}

std::vector<xispace::VertexFamily> computeFamilies(const LocalizationDatum& datum, int truncationOrder) {
  validate(datum);
  std::vector<xispace::VertexFamily> out;
  out.reserve(datum.vertices.size());
  for (const auto& block : datum.vertices) {
    out.push_back({block.g, xispace::transformFamily(assembleVertex(block, truncationOrder), datum.dMax())});
  }
  return out;
}

MultiplicityTable computeMultiplicity(const LocalizationDatum& datum, int truncationOrder, long lambdaMin,
                                      long lambdaMax, Sign eps) {
  return xispace::multiplicity(computeFamilies(datum, truncationOrder), lambdaMin, lambdaMax, eps);
}

}  // namespace emlindex::geometry
