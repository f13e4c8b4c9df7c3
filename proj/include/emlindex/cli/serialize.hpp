#pragma once

#include <string>

#include "json.hpp"

#include "emlindex/geometry.hpp"
#include "emlindex/oracle.hpp"
#include "emlindex/xispace/family.hpp"

namespace emlindex::cli {

using Json = nlohmann::json;
using exact::Cyclotomic;
using exact::Rational;
using qtheta::Sign;
using xispace::MultiplicityTable;

/// Exact values travel as strings; cyclotomics as {"order": N, "coords": [...]}.
Json toJson(const Rational& r);
Json toJson(const Cyclotomic& z);
Json toJson(const exact::CyclotomicPolynomial& p);
Json toJson(const qtheta::FactorSpec& f);
Json toJson(const geometry::Contribution& c);
Json toJson(const geometry::VertexBlock& v);
Json toJson(const geometry::LocalizationDatum& d);
Json toJson(const xispace::SplineDistribution& s);
Json toJson(const MultiplicityTable& t);

/// Schema errors are reported as "cli: <json path>: <problem>".
Rational parseRational(const Json& j, const std::string& path);
Cyclotomic parseCyclotomic(const Json& j, const std::string& path);
Sign parseSignField(const Json& j, const std::string& path);
geometry::LocalizationDatum parseDatum(const Json& j, const std::string& path = "$");
oracle::OracleSpec parseOracleSpec(const Json& j, const std::string& path);

std::string serializeDatum(const geometry::LocalizationDatum& d);
geometry::LocalizationDatum parseDatum(const std::string& text);

}  // namespace emlindex::cli
