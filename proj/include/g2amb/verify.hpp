#pragma once

#include <optional>
#include <string>
#include <vector>

#include "g2amb/holonomy.hpp"

namespace g2a {

inline constexpr const char* kReportVersion = "1.0";

enum class CheckStatus { Pass, Fail, Discrepancy };
std::string to_string(CheckStatus s);  // pass, fail, recorded-discrepancy

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Fail;
  bool ok = false;  // the checked statement holds; false for discrepancies too
  std::string witness;
  double ms = 0;
};

struct Report {
  std::string suite;
  std::vector<CheckResult> checks;  // sorted by id
  // Pass iff no check failed; recorded discrepancies never block.
  CheckStatus status() const;
  const CheckResult* find(const std::string& id) const;
};

struct SuiteOptions {
  std::optional<std::string> I;  // i-family and structure-equations default to an opaque I, holonomy to x
  std::optional<std::string> F;  // fq-family defaults to an opaque F
  Point point;                   // holonomy evaluation point; empty means default_point()
  int depth = 3;
};

const std::vector<std::string>& suite_names();
// Throws std::invalid_argument for an unknown suite or an unusable --I/--F, ParseError for bad syntax.
Report run_suite(const std::string& name, const SuiteOptions& options);

// t=2, x=1, y=3, p=-1, q=2, z=5, rho=1.
Point default_point();
// "x=1/2,t=3": overrides of default_point() with rational values.
Point parse_point(const std::string& text);

}  // namespace g2a
