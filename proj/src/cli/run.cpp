#include "emlindex/cli/run.hpp"

#include <algorithm>
#include <sstream>

#include "emlindex/error.hpp"

namespace emlindex::cli {

using exact::RationalPolynomial;
using geometry::LocalizationDatum;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw Error("cli", path + ": " + what); }

std::string joinValues(const MultiplicityTable& t, long lo, long hi) {
  std::string out;
  for (long l = lo; l <= hi; ++l) {
    if (l > lo) out += ",";
    out += t.at(l).str();
  }
  return out;
}

int maxUnipotentPairs(const LocalizationDatum& d) {
  int u = 0;
  for (const auto& v : d.vertices)
    for (const auto& c : v.contributions) u = std::max(u, c.unipotentPairs());
  return u;
}

std::vector<long> parseLongArray(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array of integers");
  std::vector<long> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer()) fail(path + "[" + std::to_string(i) + "]", "expected an integer");
    out.push_back(j[i].get<long>());
  }
  return out;
}

}  // namespace

const char* taskName(Task t) {
  switch (t) {
    case Task::Splines: return "splines";
    case Task::Multiplicity: return "multiplicity";
    case Task::Verify: return "verify";
    case Task::Em: return "em";
    case Task::Csv: return "csv";
  }
  return "?";
}

Task parseTask(const std::string& s) {
  for (Task t : {Task::Splines, Task::Multiplicity, Task::Verify, Task::Em, Task::Csv}) {
    if (s == taskName(t)) return t;
  }
  throw Error("cli", "unknown task \"" + s + "\" (expected splines, multiplicity, verify, em, csv)");
}

JobConfig parseConfig(const Json& j) {
  if (!j.is_object()) fail("$", "expected an object");
  JobConfig c;
  if (!j.contains("datum")) fail("$", "missing field \"datum\"");
  const Json& d = j["datum"];
  if (!d.is_object()) fail("$.datum", "expected an object");
  if (d.contains("inline")) {
    c.datum.builder = "inline";
    c.datum.inlineDatum = parseDatum(d["inline"], "$.datum.inline");
  } else {
    if (!d.contains("builder") || !d["builder"].is_string()) fail("$.datum.builder", "expected a builder name");
    c.datum.builder = d["builder"].get<std::string>();
    if (d.contains("A")) {
      if (!d["A"].is_number_integer()) fail("$.datum.A", "expected an integer");
      c.datum.A = d["A"].get<long>();
    }
    if (d.contains("weights")) c.datum.weights = parseLongArray(d["weights"], "$.datum.weights");
    if (d.contains("rho")) {
      if (!d["rho"].is_number_integer()) fail("$.datum.rho", "expected an integer");
      c.datum.rho = d["rho"].get<long>();
    }
  }
  if (j.contains("oracle")) c.oracle = parseOracleSpec(j["oracle"], "$.oracle");
  if (j.contains("truncationOrder")) {
    if (!j["truncationOrder"].is_number_integer()) fail("$.truncationOrder", "expected an integer");
    c.truncationOrder = j["truncationOrder"].get<int>();
  }
  if (j.contains("window")) {
    const auto w = parseLongArray(j["window"], "$.window");
    if (w.size() != 2) fail("$.window", "expected [lambdaMin, lambdaMax]");
    c.window = {w[0], w[1]};
  }
  if (j.contains("eps")) c.eps = parseSignField(j["eps"], "$.eps");
  if (j.contains("tasks")) {
    const Json& ts = j["tasks"];
    if (!ts.is_array()) fail("$.tasks", "expected an array");
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (!ts[i].is_string()) fail("$.tasks[" + std::to_string(i) + "]", "expected a string");
      try {
        c.tasks.push_back(parseTask(ts[i].get<std::string>()));
      } catch (const Error& e) {
        fail("$.tasks[" + std::to_string(i) + "]", e.what());
      }
    }
  }
  if (j.contains("emPolynomial")) {
    const Json& p = j["emPolynomial"];
    if (!p.is_array()) fail("$.emPolynomial", "expected an array");
    for (std::size_t i = 0; i < p.size(); ++i) c.emPolynomial.push_back(parseRational(p[i], "$.emPolynomial[" + std::to_string(i) + "]"));
  }
  if (j.contains("csv")) {
    const Json& o = j["csv"];
    if (o.contains("order")) {
      if (!o["order"].is_number_integer()) fail("$.csv.order", "expected an integer");
      c.csvOrder = o["order"].get<int>();
    }
    if (o.contains("step")) c.csvStep = parseRational(o["step"], "$.csv.step");
  }
  if (j.contains("output")) {
    const Json& o = j["output"];
    if (o.contains("json") && o["json"].is_string()) c.jsonPath = o["json"].get<std::string>();
    if (o.contains("csv") && o["csv"].is_string()) c.csvPath = o["csv"].get<std::string>();
  }
  return c;
}

JobConfig parseConfig(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error("cli", std::string("$: malformed JSON: ") + e.what());
  }
  return parseConfig(j);
}

void validateConfig(const JobConfig& c) {
  if (c.tasks.empty()) fail("$.tasks", "no task requested");
  if (c.truncationOrder < 0) fail("$.truncationOrder", "must be >= 0");
  if (c.window && c.window->second < c.window->first) fail("$.window", "empty window");
  const bool em = std::find(c.tasks.begin(), c.tasks.end(), Task::Em) != c.tasks.end();
  if (em && c.emPolynomial.empty()) fail("$.emPolynomial", "the em task needs a polynomial");
  if (c.csvStep <= Rational(0)) fail("$.csv.step", "must be positive");
  if (c.csvOrder < 0) fail("$.csv.order", "must be >= 0");
}

LocalizationDatum buildDatum(const DatumSource& s) {
  if (s.builder == "inline") {
    if (!s.inlineDatum) fail("$.datum", "inline datum missing");
    return *s.inlineDatum;
  }
  if (s.builder == "p1") return geometry::buildP1(s.A);
  if (s.builder == "pushed") return geometry::buildPushedSymbol(s.weights);
  if (s.builder == "p1-spinor") {
    auto d = geometry::twistNumerators(geometry::buildP1(s.A), geometry::spinorTwist(s.rho));
    d.label = "P1(A=" + std::to_string(s.A) + ") spinor-twisted, rho=" + std::to_string(s.rho);
    return d;
  }
  fail("$.datum.builder", "unknown builder \"" + s.builder + "\" (expected p1, pushed, p1-spinor)");
}

std::pair<long, long> defaultWindow(const DatumSource& s) {
  if (s.builder == "p1") return {-5, s.A + 5};
  if (s.builder == "p1-spinor") return {-5 - s.rho, s.A + 5 + s.rho};
  return {0, 20};
}

std::optional<oracle::OracleSpec> defaultOracle(const DatumSource& s) {
  oracle::OracleSpec o;
  if (s.builder == "p1") {
    o.kind = oracle::OracleKind::P1Character;
    o.A = s.A;
  } else if (s.builder == "pushed") {
    o.kind = oracle::OracleKind::PartitionDP;
    o.weights = s.weights;
  } else if (s.builder == "p1-spinor") {
    // (x^rho - x^-rho)(1 - x^{A+1})/(1 - x), the telescoped twisted character
    o.kind = oracle::OracleKind::RationalSeries;
    o.numerator[s.rho] += 1;
    o.numerator[-s.rho] -= 1;
    o.numerator[s.A + 1 + s.rho] -= 1;
    o.numerator[s.A + 1 - s.rho] += 1;
    o.denominator = {1};
  } else {
    return std::nullopt;
  }
  return o;
}

ReportBundle run(const JobConfig& config) {
  validateConfig(config);
  ReportBundle out;
  Json& doc = out.document;
  std::ostringstream text;
  Json notes = Json::array();

  const LocalizationDatum datum = buildDatum(config.datum);
  geometry::validate(datum);
  const auto [lo, hi] = config.window ? *config.window : defaultWindow(config.datum);
  if (hi < lo) fail("$.window", "empty window");

  auto has = [&](Task t) { return std::find(config.tasks.begin(), config.tasks.end(), t) != config.tasks.end(); };
  const RationalPolynomial f(config.emPolynomial);

  int Q = config.truncationOrder;
  int needed = datum.dMax();
  if (has(Task::Em)) needed = std::max(needed, f.degree() + 2 * maxUnipotentPairs(datum));
  if (has(Task::Csv)) needed = std::max(needed, config.csvOrder);
  if (Q < needed) {
    notes.push_back("truncation order raised from " + std::to_string(Q) + " to " + std::to_string(needed));
    Q = needed;
  }

  doc["datum"] = toJson(datum);
  doc["truncationOrder"] = Q;
  doc["window"] = {lo, hi};
  doc["eps"] = std::string(1, qtheta::signChar(config.eps));
  Json tasks = Json::array();
  for (Task t : config.tasks) tasks.push_back(taskName(t));
  doc["tasks"] = tasks;

  text << "datum: " << (datum.label.empty() ? config.datum.builder : datum.label) << "  dMax=" << datum.dMax()
       << "  Q=" << Q << "  eps=" << qtheta::signChar(config.eps) << "\n";

  const auto families = geometry::computeFamilies(datum, Q);

  if (has(Task::Splines)) {
    Json fams = Json::array();
    for (const auto& vf : families) {
      Json members = Json::object();
      for (const auto& [k, m] : vf.family.members) {
        if (m.isZero()) continue;
        members[std::to_string(k)] = toJson(m);
        text << "m_" << k << " at g=" << vf.vertex.str() << ":\n" << m.str();
      }
      fams.push_back({{"vertex", toJson(vf.vertex)}, {"members", members}});
    }
    doc["splines"] = fams;
  }

  std::optional<MultiplicityTable> table;
  if (has(Task::Multiplicity) || has(Task::Verify) || has(Task::Em)) {
    table = xispace::multiplicity(families, lo, hi, config.eps);
    const auto nonInt = table->nonIntegral();
    if (!nonInt.empty()) notes.push_back("non-integral multiplicities at " + std::to_string(nonInt.size()) + " weights");
  }

  if (has(Task::Multiplicity)) {
    doc["multiplicity"] = toJson(*table);
    text << "multiplicity [" << lo << ".." << hi << "]: " << joinValues(*table, lo, hi) << "\n";
  }

  if (has(Task::Verify)) {
    Json v;
    const auto spec = config.oracle ? config.oracle : defaultOracle(config.datum);
    if (!spec) {
      v = {{"verdict", "FAIL"}, {"reason", "no oracle available for this datum"}};
      text << "verify: FAIL (no oracle available)\n";
      out.success = false;
    } else {
      // partition functions are compared on lambda >= 0 only
      long vlo = lo;
      if (spec->kind == oracle::OracleKind::PartitionDP && vlo < 0) {
        vlo = std::min(0L, hi + 1);
        notes.push_back("verify restricted to lambda >= 0 for the partition-function oracle");
      }
      const auto want = oracle::evaluate(*spec, vlo, hi);
      MultiplicityTable got(vlo, hi);
      for (long l = vlo; l <= hi; ++l) got.set(l, table->at(l));
      const auto mismatch = got.firstMismatch(want);
      v["window"] = {vlo, hi};
      if (mismatch) {
        v["verdict"] = "FAIL";
        v["firstMismatch"] = {{"lambda", *mismatch}, {"engine", got.at(*mismatch).str()}, {"oracle", want.at(*mismatch).str()}};
        text << "verify: FAIL at lambda=" << *mismatch << " engine=" << got.at(*mismatch).str()
             << " oracle=" << want.at(*mismatch).str() << "\n";
        out.success = false;
      } else {
        v["verdict"] = "PASS";
        text << "verify: PASS (" << (hi - vlo + 1) << " values)\n";
      }
    }
    doc["verify"] = v;
  }

  if (has(Task::Em)) {
    if (families.size() != 1) fail("$.tasks", "the em task needs a single-vertex datum");
    const auto& fam = families[0].family;
    if (!compactSupportCheck(fam, lo, hi)) fail("$.window", "family is not compactly supported inside the window");
    const Rational lhs = oracle::emDirectSum(*table, f);
    const auto rhs = xispace::emPairing(fam, f);
    Json perOrder = Json::array();
    for (const auto& r : rhs.perOrder) perOrder.push_back(r.str());
    const bool equal = lhs == rhs.total;
    const bool stable = rhs.stabilizationOrder <= std::max(0, f.degree()) + fam.gradingShift;
    doc["em"] = {{"polynomial", f.str("xi")},
                 {"lhs", lhs.str()},
                 {"rhs", rhs.total.str()},
                 {"perOrder", perOrder},
                 {"stabilizationOrder", rhs.stabilizationOrder},
                 {"verdict", equal && stable ? "PASS" : "FAIL"}};
    text << "em: f=" << f.str("xi") << " LHS=" << lhs.str() << " RHS=" << rhs.total.str()
         << " stabilization k=" << rhs.stabilizationOrder << (equal && stable ? " PASS" : " FAIL") << "\n";
    if (!(equal && stable)) out.success = false;
  }

  if (has(Task::Csv)) {
    const auto& member = families[0].family.member(config.csvOrder);
    out.csv = xispace::samplesToCsv(xispace::sampleSpline(member, lo, hi, config.csvStep));
    doc["csv"] = {{"order", config.csvOrder},
                  {"step", config.csvStep.str()},
                  {"vertex", toJson(families[0].vertex)},
                  {"note", "presentation only; decimal columns are rounded"}};
    if (!config.csvPath.empty()) doc["csv"]["path"] = config.csvPath;
  }

  doc["notes"] = notes;
  for (const auto& n : notes) text << "note: " << n.get<std::string>() << "\n";
  doc["success"] = out.success;
  out.text = text.str();
  return out;
}

}  // namespace emlindex::cli
