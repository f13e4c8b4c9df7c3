#include "emlindex/cli/serialize.hpp"

#include "emlindex/error.hpp"

namespace emlindex::cli {

using exact::CyclotomicPolynomial;
using geometry::Contribution;
using geometry::LocalizationDatum;
using geometry::VertexBlock;
using qtheta::FactorKind;
using qtheta::FactorSpec;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw Error("cli", path + ": " + what); }

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

long parseLong(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long>();
}

const Json& array(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

}  // namespace

Json toJson(const Rational& r) { return r.str(); }

Json toJson(const Cyclotomic& z) {
  Json coords = Json::array();
  for (const auto& c : z.coords()) coords.push_back(c.str());
  return {{"order", z.order()}, {"coords", coords}};
}

Json toJson(const CyclotomicPolynomial& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(toJson(c));
  return out;
}

Json toJson(const FactorSpec& f) {
  return {{"kind", qtheta::factorKindName(f.kind)},
          {"zeta", toJson(f.zeta)},
          {"weight", f.weight},
          {"polarization", std::string(1, qtheta::signChar(f.polarization))}};
}

Json toJson(const Contribution& c) {
  Json factors = Json::array();
  for (const auto& f : c.factors) factors.push_back(toJson(f));
  return {{"prefactorWeight", c.prefactorWeight},
          {"prefactorZeta", toJson(c.prefactorZeta)},
          {"polarization", std::string(1, qtheta::signChar(c.polarization))},
          {"factors", factors}};
}

Json toJson(const VertexBlock& v) {
  Json cs = Json::array();
  for (const auto& c : v.contributions) cs.push_back(toJson(c));
  return {{"g", toJson(v.g)}, {"contributions", cs}};
}

Json toJson(const LocalizationDatum& d) {
  Json vs = Json::array();
  for (const auto& v : d.vertices) vs.push_back(toJson(v));
  return {{"label", d.label}, {"dimM", d.dimM}, {"dimG", d.dimG}, {"vertices", vs}};
}

Json toJson(const xispace::SplineDistribution& s) {
  Json bps = Json::array(), pieces = Json::array(), deltas = Json::array();
  for (const auto& b : s.breakpoints()) bps.push_back(b.str());
  for (const auto& p : s.pieces()) pieces.push_back(toJson(p));
  for (const auto& d : s.deltas()) {
    deltas.push_back({{"point", d.point.str()}, {"order", d.order}, {"coeff", toJson(d.coeff)}});
  }
  return {{"breakpoints", bps}, {"pieces", pieces}, {"deltas", deltas}, {"text", s.str()}};
}

Json toJson(const MultiplicityTable& t) {
  Json values = Json::array();
  for (long l = t.lambdaMin(); l <= t.lambdaMax(); ++l) values.push_back(t.at(l).str());
  Json nonInt = Json::array();
  for (long l : t.nonIntegral()) nonInt.push_back(l);
  return {{"lambdaMin", t.lambdaMin()}, {"lambdaMax", t.lambdaMax()}, {"values", values}, {"nonIntegral", nonInt}};
}

Rational parseRational(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a \"p/q\" string or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(path, e.what());
  }
}

Cyclotomic parseCyclotomic(const Json& j, const std::string& path) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(parseRational(j, path));
  const long order = parseLong(field(j, "order", path), path + ".order");
  if (order < 1 || order > 100000) fail(path + ".order", "order must be a positive integer");
  const auto& cs = array(field(j, "coords", path), path + ".coords");
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < cs.size(); ++i) coords.push_back(parseRational(cs[i], path + ".coords[" + std::to_string(i) + "]"));
  if (static_cast<long>(coords.size()) != exact::totient(order)) {
    fail(path + ".coords", "expected " + std::to_string(exact::totient(order)) + " coordinates for order " + std::to_string(order));
  }
  return Cyclotomic::fromCoordinates(static_cast<int>(order), std::move(coords));
}

Sign parseSignField(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "+") return Sign::Plus;
    if (s == "-") return Sign::Minus;
  }
  fail(path, "expected \"+\" or \"-\"");
}

namespace {

FactorSpec parseFactor(const Json& j, const std::string& path) {
  FactorSpec f;
  const auto& kind = field(j, "kind", path);
  if (!kind.is_string()) fail(path + ".kind", "expected a string");
  try {
    f.kind = qtheta::parseFactorKind(kind.get<std::string>());
  } catch (const Error& e) {
    fail(path + ".kind", e.what());
  }
  f.zeta = parseCyclotomic(field(j, "zeta", path), path + ".zeta");
  f.weight = parseLong(field(j, "weight", path), path + ".weight");
  f.polarization = j.contains("polarization") ? parseSignField(j["polarization"], path + ".polarization") : Sign::Plus;
  try {
    qtheta::validateFactor(f);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return f;
}

Contribution parseContribution(const Json& j, const std::string& path) {
  Contribution c;
  c.prefactorWeight = parseLong(field(j, "prefactorWeight", path), path + ".prefactorWeight");
  c.prefactorZeta = j.contains("prefactorZeta") ? parseCyclotomic(j["prefactorZeta"], path + ".prefactorZeta") : Cyclotomic(1);
  c.polarization = parseSignField(field(j, "polarization", path), path + ".polarization");
  const auto& fs = array(field(j, "factors", path), path + ".factors");
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const std::string p = path + ".factors[" + std::to_string(i) + "]";
    c.factors.push_back(parseFactor(fs[i], p));
    const auto& f = c.factors.back();
    if (f.kind != FactorKind::Numerator && f.polarization != c.polarization) {
      fail(p + ".polarization", "mixed polarization within one contribution");
    }
  }
  return c;
}

}  // namespace

LocalizationDatum parseDatum(const Json& j, const std::string& path) {
  LocalizationDatum d;
  d.label = j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "";
  d.dimM = static_cast<int>(parseLong(field(j, "dimM", path), path + ".dimM"));
  d.dimG = j.contains("dimG") ? static_cast<int>(parseLong(j["dimG"], path + ".dimG")) : 1;
  if (d.dimG != 1) fail(path + ".dimG", "only rank one is supported");
  if (d.dimM < 2 || d.dimM % 2) fail(path + ".dimM", "expected an even dimension >= 2");
  const auto& vs = array(field(j, "vertices", path), path + ".vertices");
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const std::string p = path + ".vertices[" + std::to_string(i) + "]";
    VertexBlock v;
    v.g = parseCyclotomic(field(vs[i], "g", p), p + ".g");
    const auto& cs = array(field(vs[i], "contributions", p), p + ".contributions");
    for (std::size_t k = 0; k < cs.size(); ++k) {
      v.contributions.push_back(parseContribution(cs[k], p + ".contributions[" + std::to_string(k) + "]"));
    }
    d.vertices.push_back(std::move(v));
  }
  try {
    geometry::validate(d);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return d;
}

oracle::OracleSpec parseOracleSpec(const Json& j, const std::string& path) {
  oracle::OracleSpec s;
  const auto& kind = field(j, "kind", path);
  const std::string k = kind.is_string() ? kind.get<std::string>() : "";
  if (k == "p1Character") {
    s.kind = oracle::OracleKind::P1Character;
    s.A = parseLong(field(j, "A", path), path + ".A");
  } else if (k == "partitionDP") {
    s.kind = oracle::OracleKind::PartitionDP;
    const auto& ws = array(field(j, "weights", path), path + ".weights");
    for (std::size_t i = 0; i < ws.size(); ++i) s.weights.push_back(parseLong(ws[i], path + ".weights[" + std::to_string(i) + "]"));
  } else if (k == "rationalSeries") {
    s.kind = oracle::OracleKind::RationalSeries;
    const auto& num = field(j, "numerator", path);
    if (!num.is_object()) fail(path + ".numerator", "expected an object of exponent: coefficient");
    for (const auto& [e, c] : num.items()) {
      long expo = 0;
      try {
        expo = std::stol(e);
      } catch (const std::exception&) {
        fail(path + ".numerator", "exponent key \"" + e + "\" is not an integer");
      }
      s.numerator[expo] += parseLong(c, path + ".numerator." + e);
    }
    const auto& den = array(field(j, "denominator", path), path + ".denominator");
    for (std::size_t i = 0; i < den.size(); ++i) s.denominator.push_back(parseLong(den[i], path + ".denominator[" + std::to_string(i) + "]"));
  } else {
    fail(path + ".kind", "expected one of p1Character, partitionDP, rationalSeries");
  }
  try {
    oracle::validate(s);
  } catch (const Error& e) {
    fail(path, e.what());
  }
  return s;
}

std::string serializeDatum(const LocalizationDatum& d) { return toJson(d).dump(2) + "\n"; }

LocalizationDatum parseDatum(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("cli", std::string("$: malformed JSON: ") + e.what());
  }
  return parseDatum(j, "$");
}

}  // namespace emlindex::cli
