#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "emlindex/cli/run.hpp"
#include "emlindex/error.hpp"

using namespace emlindex;
using namespace emlindex::cli;

namespace {

std::vector<std::string> splitCommas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::pair<long, long> parseWindow(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw Error("cli", "--window expects lo..hi, got \"" + s + "\"");
  try {
    return {std::stol(s.substr(0, dots)), std::stol(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw Error("cli", "--window expects integers, got \"" + s + "\"");
  }
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cli", "cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error("cli", "cannot write " + path);
  out << content;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler-MacLaurin index multiplicities for rank-one torus actions"};
  app.require_subcommand(1);
  auto* runCmd = app.add_subcommand("run", "compute splines, multiplicities and checks for one datum");

  std::string config, builder, weights, window, poly, eps, json, csv, csvStep, datumFile;
  std::optional<long> A, rho;
  std::optional<int> Q, csvOrder;
  std::vector<std::string> tasks;
  runCmd->add_option("--config", config, "JSON job configuration");
  runCmd->add_option("--builder", builder, "p1, pushed or p1-spinor");
  runCmd->add_option("--datum", datumFile, "JSON localization datum (overrides --builder)");
  runCmd->add_option("--A", A, "line bundle degree for p1 builders");
  runCmd->add_option("--weights", weights, "comma separated weights for the pushed builder");
  runCmd->add_option("--rho", rho, "spinor shift for p1-spinor");
  runCmd->add_option("--task", tasks, "splines, multiplicity, verify, em, csv (repeatable or comma separated)");
  runCmd->add_option("--window", window, "lambda window lo..hi");
  runCmd->add_option("--poly", poly, "em polynomial coefficients, constant term first");
  runCmd->add_option("--Q", Q, "truncation order in q");
  runCmd->add_option("--eps", eps, "limit direction + or -");
  runCmd->add_option("--json", json, "write the machine-readable report here");
  runCmd->add_option("--csv", csv, "write sampled spline CSV here");
  runCmd->add_option("--csv-order", csvOrder, "family member k sampled by the csv task");
  runCmd->add_option("--csv-step", csvStep, "sampling step p/q");

  CLI11_PARSE(app, argc, argv);

  try {
    JobConfig job;
    if (!config.empty()) job = parseConfig(slurp(config));
    if (!builder.empty()) {
      job.datum = DatumSource{};
      job.datum.builder = builder;
    }
    if (!datumFile.empty()) {
      job.datum.builder = "inline";
      job.datum.inlineDatum = parseDatum(slurp(datumFile));
    }
    if (A) job.datum.A = *A;
    if (rho) job.datum.rho = *rho;
    if (!weights.empty()) {
      job.datum.weights.clear();
      for (const auto& w : splitCommas(weights)) job.datum.weights.push_back(std::stol(w));
    }
    if (!tasks.empty()) {
      job.tasks.clear();
      for (const auto& t : tasks)
        for (const auto& name : splitCommas(t)) job.tasks.push_back(parseTask(name));
    }
    if (!window.empty()) job.window = parseWindow(window);
    if (!poly.empty()) {
      job.emPolynomial.clear();
      for (const auto& c : splitCommas(poly)) job.emPolynomial.push_back(exact::Rational::parse(c));
    }
    if (Q) job.truncationOrder = *Q;
    if (!eps.empty()) job.eps = qtheta::parseSign(eps);
    if (csvOrder) job.csvOrder = *csvOrder;
    if (!csvStep.empty()) job.csvStep = exact::Rational::parse(csvStep);
    if (!json.empty()) job.jsonPath = json;
    if (!csv.empty()) job.csvPath = csv;

    const auto report = run(job);
    std::cout << report.text;
    if (!job.jsonPath.empty()) writeFile(job.jsonPath, report.document.dump(2) + "\n");
    if (!report.csv.empty()) {
      if (job.csvPath.empty()) {
        std::cout << report.csv;
      } else {
        writeFile(job.csvPath, report.csv);
      }
    }
    return report.success ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
