#include "emlindex/exact/bernoulli.hpp"

#include <mutex>

#include "emlindex/error.hpp"

namespace emlindex::exact {

Rational bernoulli(int n) {
  if (n < 0) throw Error("exact", "bernoulli index must be nonnegative");
  // Shared memo; entries are appended under the lock and never mutated.
  static std::mutex mu;
  static std::vector<Rational> memo{Rational(1)};
  std::lock_guard<std::mutex> lock(mu);
  for (int m = static_cast<int>(memo.size()); m <= n; ++m) {
    if (m >= 3 && m % 2 == 1) {
      memo.emplace_back(0);
      continue;
    }
    Rational acc(0);
    for (int k = 0; k < m; ++k) acc += binomial(m + 1, k) * memo[static_cast<std::size_t>(k)];
    memo.push_back(-acc / Rational(m + 1));
  }
  return memo[static_cast<std::size_t>(n)];
}

std::vector<Rational> bSeriesCoefficients(int maxOrder) {
  if (maxOrder < 0 || maxOrder % 2 != 0) {
    throw Error("exact", "bSeriesCoefficients needs an even nonnegative order, got " +
                             std::to_string(maxOrder));
  }
  std::vector<Rational> c;
  for (int t = 0; 2 * t <= maxOrder; ++t) {
    const Rational sign = (t % 2 == 0) ? Rational(1) : Rational(-1);
    c.push_back(sign * Rational(1 - 2 * t) * bernoulli(2 * t) / factorial(2 * t));
  }
  return c;
}

}  // namespace emlindex::exact
