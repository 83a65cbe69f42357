// Command-line front end: evaluate construction scripts on exact points,
// print normalized script text, or run the property-check suites.
//
// Exit codes: 0 success / all checks clean, 2 an evaluation came out
// undefined or a suite reported failures, 1 usage, file, or syntax errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tarski/verify.hpp"

namespace {

using tarski::Num;
using tarski::Point;
using tarski::Rat;
using json = nlohmann::ordered_json;

std::string readFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::vector<Point> readPoints(const std::string& path) {
  json doc = json::parse(readFile(path));
  if (!doc.is_array())
    throw std::runtime_error(path + ": expected a JSON array of points");
  std::vector<Point> pts;
  for (const json& e : doc) {
    if (!e.is_object() || !e.contains("x") || !e.contains("y"))
      throw std::runtime_error(path + ": each point needs \"x\" and \"y\"");
    pts.push_back({Num::parse(e.at("x").get<std::string>()),
                   Num::parse(e.at("y").get<std::string>())});
  }
  return pts;
}

std::array<Rat, 4> parseViewBox(const std::string& text) {
  std::array<Rat, 4> box;
  std::istringstream in(text);
  std::string part;
  for (int i = 0; i < 4; ++i) {
    if (!std::getline(in, part, ','))
      throw std::runtime_error("viewbox needs four comma-separated values");
    Num v = Num::parse(part);
    if (!v.rational()) throw std::runtime_error("viewbox values must be rational");
    box[i] = v.ratValue();
  }
  if (std::getline(in, part, ','))
    throw std::runtime_error("viewbox needs exactly four values");
  return box;
}

json pointJson(const std::string& name, const Point& p) {
  json e;
  e["name"] = name;
  e["x"] = p.x.str();
  e["y"] = p.y.str();
  return e;
}

int cmdRun(const std::string& scriptPath, const std::string& argsPath,
           bool withTrace, const std::string& svgPath,
           const std::string& viewBox, unsigned bits) {
  tarski::ScriptAst ast = tarski::parseScript(readFile(scriptPath));
  std::vector<Point> args = readPoints(argsPath);
  tarski::ConstructionResult res = tarski::evalScript(ast, args);

  if (!svgPath.empty()) {
    std::ofstream out(svgPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + svgPath);
    out << tarski::emitSvg(res, parseViewBox(viewBox), bits);
  }

  if (!res.defined) {
    json err;
    err["binding"] = res.failedBinding;
    err["reason"] = tarski::reasonName(res.reason);
    std::cout << err.dump(2) << "\n";
    return 2;
  }

  json out;
  out["name"] = ast.name;
  out["outputs"] = json::array();
  for (const auto& [name, p] : res.outputs) out["outputs"].push_back(pointJson(name, p));
  if (withTrace) {
    out["trace"] = json::array();
    for (const tarski::TraceEntry& t : res.trace) {
      json e = pointJson(t.name, t.value.point());
      e["builtin"] = t.call.builtin;
      e["args"] = t.call.args;
      out["trace"].push_back(e);
    }
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmdParse(const std::string& scriptPath) {
  std::cout << tarski::printScript(tarski::parseScript(readFile(scriptPath)));
  return 0;
}

int cmdCheck(const std::string& suite, std::uint64_t seed, std::uint64_t trials,
             const std::string& jsonPath) {
  std::vector<tarski::SuiteReport> reports;
  std::vector<std::string> names;
  if (suite == "all")
    names = tarski::suiteNames();
  else
    names.push_back(suite);

  std::uint64_t failures = 0;
  for (const std::string& name : names) {
    tarski::SuiteReport rep = tarski::runSuite(name, seed, trials);
    failures += rep.failures.size();
    std::cout << rep.suite << ": passed=" << rep.passed
              << " skipped=" << rep.skipped
              << " failures=" << rep.failures.size() << "\n";
    reports.push_back(std::move(rep));
  }

  if (!jsonPath.empty()) {
    std::ofstream out(jsonPath, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + jsonPath);
    out << (suite == "all" ? tarski::reportJson(reports)
                           : tarski::reportJson(reports.front()));
  }
  return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ruler-and-compass constructions over a Euclidean field"};
  app.require_subcommand(1);

  std::string scriptPath, argsPath, svgPath, viewBox = "-5,-5,5,5";
  unsigned bits = 24;
  bool withTrace = false;
  CLI::App* run = app.add_subcommand("run", "evaluate a script on input points");
  run->add_option("script", scriptPath, "script file")->required();
  run->add_option("--args", argsPath, "JSON array of {\"x\",\"y\"} point literals")
      ->required();
  run->add_flag("--trace", withTrace, "include every binding in the output");
  run->add_option("--svg", svgPath, "also write an SVG plot to this file");
  run->add_option("--bits", bits, "plot precision in bits (default 24)");
  run->add_option("--viewbox", viewBox, "plot window x0,y0,x1,y1 (default -5,-5,5,5)");

  std::string parsePath;
  CLI::App* parse = app.add_subcommand("parse", "check a script and print its normal form");
  parse->add_option("script", parsePath, "script file")->required();

  std::string suite;
  std::uint64_t seed = 1, trials = 100;
  std::string jsonPath;
  CLI::App* check = app.add_subcommand("check", "run a property-check suite");
  check->add_option("--suite", suite, "suite name or 'all'")->required();
  check->add_option("--seed", seed, "sample stream seed (default 1)");
  check->add_option("--trials", trials, "verdicts required per proposition (default 100)");
  check->add_option("--json", jsonPath, "write the full report to this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (run->parsed())
      return cmdRun(scriptPath, argsPath, withTrace, svgPath, viewBox, bits);
    if (parse->parsed()) return cmdParse(parsePath);
    return cmdCheck(suite, seed, trials, jsonPath);
  } catch (const std::exception& e) {
    std::cerr << "tgs: " << e.what() << "\n";
    return 1;
  }
}
