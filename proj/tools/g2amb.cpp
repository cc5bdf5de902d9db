#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "g2amb/g2alg.hpp"
#include "g2amb/models.hpp"
#include "g2amb/planefield.hpp"
#include "g2amb/verify.hpp"
#include "json.hpp"

using namespace g2a;

namespace {

constexpr int kUsage = 2;

std::vector<Expr> parse_list(const std::string& text, std::size_t n, const char* what) {
  const SymbolTable symbols = model_symbols();
  std::vector<Expr> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Expr v = parse(item, symbols);
    if (!v.is_constant()) throw std::invalid_argument(std::string(what) + " entries must be rational numbers");
    out.push_back(v);
  }
  if (out.size() != n)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(n) + " comma-separated values");
  return out;
}

SVector rational_vector(const std::string& text) {
  SVector v;
  for (const Expr& e : parse_list(text, 7, "vector")) v.push_back(e.constant());
  return v;
}

nlohmann::ordered_json to_json(const Report& r, bool timings) {
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"id", c.id}, {"status", to_string(c.status)}, {"witness", c.witness}, {"ms", timings ? c.ms : 0.0}});
  return {{"suite", r.suite}, {"version", kReportVersion}, {"checks", checks}, {"status", to_string(r.status())}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of G2 ambient metric constructions"};
  app.require_subcommand(1);

  std::string suite, I, F, point, json_path;
  int depth = 3;
  bool timings = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("--I", I, "I(x) in the expression grammar");
  verify->add_option("--F", F, "F(q) in the expression grammar");
  verify->add_option("--point", point, "Evaluation point overrides, e.g. x=1,t=2");
  verify->add_option("--depth", depth, "Holonomy filtration depth")->check(CLI::NonNegativeNumber);
  verify->add_option("--json", json_path, "Write a JSON report to this path");
  verify->add_flag("--timings", timings, "Record wall times in the report");

  std::string x, y;
  auto* classify = app.add_subcommand("classify-pair", "Orbit type of a pair of null vectors");
  classify->add_option("--x", x, "Seven rationals")->required();
  classify->add_option("--y", y, "Seven rationals")->required();

  std::string coeffs;
  auto* roots = app.add_subcommand("root-type", "Root type of a binary quartic a0 + a1 u + ... + a4 u^4");
  roots->add_option("--coeffs", coeffs, "a0,a1,a2,a3,a4")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*verify) {
      SuiteOptions opt;
      if (!I.empty()) opt.I = I;
      if (!F.empty()) opt.F = F;
      if (!point.empty()) opt.point = parse_point(point);
      opt.depth = depth;
      Report r = run_suite(suite, opt);
      for (const auto& c : r.checks) {
        std::cout << to_string(c.status) << "  " << c.id;
        if (!c.witness.empty()) std::cout << "  " << c.witness;
        if (timings) std::cout << "  (" << c.ms << " ms)";
        std::cout << "\n";
      }
      std::cout << suite << ": " << to_string(r.status()) << "\n";
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) throw std::invalid_argument("cannot write " + json_path);
        out << to_json(r, timings).dump(2) << "\n";
      }
      return r.status() == CheckStatus::Pass ? 0 : 1;
    }
    if (*classify) {
      PairClassification c = classify_pair(rational_vector(x), rational_vector(y));
      std::cout << to_string(c.label) << " stabilizer dim " << c.stabilizer_dim << " fingerprint " << c.fingerprint_label
                << "\n";
      return c.agrees ? 0 : 1;
    }
    if (*roots) {
      Quartic q;
      auto v = parse_list(coeffs, 5, "coeffs");
      for (std::size_t i = 0; i < 5; ++i) q.a[i] = v[i];
      std::cout << root_type_string(root_type(q)) << "\n";
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
