#pragma once

#include <vector>

#include "emlindex/exact/rational.hpp"

namespace emlindex::exact {

/// n-th Bernoulli number with B_1 = -1/2, from sum_{k<=n} C(n+1,k) B_k = 0.
Rational bernoulli(int n);

/// Taylor coefficients [c_0, c_2, ..., c_maxOrder] of
///   B(x) = x^2 / (2 - 2 cos x) = ((x/2) / sin(x/2))^2 = sum_t c_{2t} x^{2t},
/// the per-weight factor of the inverse J-class.  Only even Bernoulli
/// numbers enter: c_{2t} = (-1)^t (1 - 2t) B_{2t} / (2t)!.
/// Throws emlindex::Error for odd or negative maxOrder.
std::vector<Rational> bSeriesCoefficients(int maxOrder);

}  // namespace emlindex::exact
