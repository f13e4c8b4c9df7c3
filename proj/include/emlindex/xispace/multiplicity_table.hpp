#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "emlindex/exact/rational.hpp"

namespace emlindex::xispace {

using exact::Rational;

/// Multiplicity values on the integer window [lambdaMin, lambdaMax].
class MultiplicityTable {
 public:
  MultiplicityTable() = default;
  /// Zero-filled table; an empty window (lambdaMax < lambdaMin) is allowed.
  MultiplicityTable(long lambdaMin, long lambdaMax);

  long lambdaMin() const { return lo_; }
  long lambdaMax() const { return hi_; }
  bool contains(long lambda) const { return lambda >= lo_ && lambda <= hi_; }
  std::size_t size() const { return values_.size(); }
  bool empty() const { return values_.empty(); }

  const Rational& at(long lambda) const;
  void set(long lambda, const Rational& value);
  /// Zero outside the window.
  Rational valueOr0(long lambda) const { return contains(lambda) ? at(lambda) : Rational(0); }

  /// Window points whose value is not an integer.
  std::vector<long> nonIntegral() const;
  /// Nonzero entries in increasing lambda.
  std::vector<std::pair<long, Rational>> support() const;
  /// Same support and values (windows may differ).
  bool sameValues(const MultiplicityTable& o) const;
  /// First point of this table's window where the two tables differ.
  std::optional<long> firstMismatch(const MultiplicityTable& o) const;

  friend bool operator==(const MultiplicityTable&, const MultiplicityTable&) = default;
  std::string str() const;

 private:
  long lo_ = 0;
  long hi_ = -1;
  std::vector<Rational> values_;
};

}  // namespace emlindex::xispace
