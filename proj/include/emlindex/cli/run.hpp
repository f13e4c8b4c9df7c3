#pragma once

#include <optional>
#include <string>
#include <vector>

#include "emlindex/cli/serialize.hpp"

namespace emlindex::cli {

enum class Task { Splines, Multiplicity, Verify, Em, Csv };

const char* taskName(Task t);
Task parseTask(const std::string& s);

/// Either a named builder ("p1", "pushed", "p1-spinor") or an inline datum.
struct DatumSource {
  std::string builder = "p1";
  long A = 0;
  std::vector<long> weights;
  long rho = 1;
  std::optional<geometry::LocalizationDatum> inlineDatum;
};

struct JobConfig {
  DatumSource datum;
  std::optional<oracle::OracleSpec> oracle;
  int truncationOrder = 8;
  std::optional<std::pair<long, long>> window;
  Sign eps = Sign::Plus;
  std::vector<Task> tasks;
  std::vector<Rational> emPolynomial;  // constant term first
  int csvOrder = 0;
  Rational csvStep{1, 4};
  std::string jsonPath;
  std::string csvPath;
};

JobConfig parseConfig(const Json& j);
JobConfig parseConfig(const std::string& text);
/// Throws on an empty window, an empty task list or a missing em polynomial.
void validateConfig(const JobConfig& c);

struct ReportBundle {
  Json document;
  std::string text;
  std::string csv;
  bool success = true;
};

geometry::LocalizationDatum buildDatum(const DatumSource& s);
/// The default window for a datum source when none is given.
std::pair<long, long> defaultWindow(const DatumSource& s);
/// The oracle used by the verify task; nullopt for inline data without one.
std::optional<oracle::OracleSpec> defaultOracle(const DatumSource& s);

ReportBundle run(const JobConfig& config);

}  // namespace emlindex::cli
