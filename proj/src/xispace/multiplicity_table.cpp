#include "emlindex/xispace/multiplicity_table.hpp"

#include <sstream>

#include "emlindex/error.hpp"

namespace emlindex::xispace {

MultiplicityTable::MultiplicityTable(long lambdaMin, long lambdaMax) : lo_(lambdaMin), hi_(lambdaMax) {
  if (hi_ >= lo_) values_.assign(static_cast<std::size_t>(hi_ - lo_ + 1), Rational(0));
}

const Rational& MultiplicityTable::at(long lambda) const {
  if (!contains(lambda)) {
    throw Error("xispace", "lambda " + std::to_string(lambda) + " outside window [" +
                               std::to_string(lo_) + ", " + std::to_string(hi_) + "]");
  }
  return values_[static_cast<std::size_t>(lambda - lo_)];
}

void MultiplicityTable::set(long lambda, const Rational& value) {
  if (!contains(lambda)) {
    throw Error("xispace", "lambda " + std::to_string(lambda) + " outside window");
  }
  values_[static_cast<std::size_t>(lambda - lo_)] = value;
}

std::vector<long> MultiplicityTable::nonIntegral() const {
  std::vector<long> out;
  for (long l = lo_; l <= hi_; ++l) {
    if (!at(l).isInteger()) out.push_back(l);
  }
  return out;
}

std::vector<std::pair<long, Rational>> MultiplicityTable::support() const {
  std::vector<std::pair<long, Rational>> out;
  for (long l = lo_; l <= hi_; ++l) {
    if (!at(l).isZero()) out.emplace_back(l, at(l));
  }
  return out;
}

bool MultiplicityTable::sameValues(const MultiplicityTable& o) const { return support() == o.support(); }

std::optional<long> MultiplicityTable::firstMismatch(const MultiplicityTable& o) const {
  for (long l = lo_; l <= hi_; ++l) {
    if (at(l) != o.valueOr0(l)) return l;
  }
  return std::nullopt;
}

std::string MultiplicityTable::str() const {
  std::ostringstream os;
  for (long l = lo_; l <= hi_; ++l) {
    os << "  " << l << ": " << at(l);
    if (!at(l).isInteger()) os << "  [non-integral]";
    os << "\n";
  }
  return os.str();
}

}  // namespace emlindex::xispace
