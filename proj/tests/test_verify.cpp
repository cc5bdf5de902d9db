#include <algorithm>

#include "doctest.h"
#include "g2amb/parse.hpp"
#include "g2amb/verify.hpp"

using namespace g2a;

TEST_CASE("suites pass with discrepancies recorded") {
  for (const char* name : {"g2", "structure-equations", "quartics", "holonomy"}) {
    Report r = run_suite(name, {});
    CHECK(r.status() == CheckStatus::Pass);
    CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                         [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
  }
  Report g2 = run_suite("g2", {});
  REQUIRE(g2.find("g2.trace-identity"));
  CHECK(g2.find("g2.trace-identity")->status == CheckStatus::Discrepancy);
  CHECK(g2.find("g2.trace-identity")->witness == "trace form / inner = 1/6");
  CHECK(g2.find("g2.dimension")->status == CheckStatus::Pass);
  CHECK(to_string(CheckStatus::Discrepancy) == "recorded-discrepancy");
}

TEST_CASE("family suites and their branches") {
  SuiteOptions flat;
  flat.F = "q^2";
  Report f = run_suite("fq-family", flat);
  CHECK(f.status() == CheckStatus::Pass);
  CHECK(f.find("fq-family.trivial-holonomy"));
  CHECK_FALSE(f.find("fq-family.holonomy-h5"));

  SuiteOptions linear;
  linear.I = "x";
  Report i = run_suite("i-family", linear);
  CHECK(i.status() == CheckStatus::Pass);
  REQUIRE(i.find("i-family.holonomy-dimension"));
  CHECK(i.find("i-family.holonomy-dimension")->ok);
  CHECK_FALSE(run_suite("i-family", {}).find("i-family.holonomy-dimension"));

  SuiteOptions singular = linear;
  singular.point = parse_point("t=0");
  CHECK(run_suite("holonomy", singular).status() == CheckStatus::Fail);
}

TEST_CASE("suite errors") {
  CHECK_THROWS_AS(run_suite("nope", {}), std::invalid_argument);
  SuiteOptions bad;
  bad.F = "x*q^2";
  CHECK_THROWS_AS(run_suite("fq-family", bad), std::invalid_argument);
  bad.F = "q";
  CHECK_THROWS_AS(run_suite("fq-family", bad), std::invalid_argument);
  bad.F = "q^";
  CHECK_THROWS_AS(run_suite("fq-family", bad), ParseError);
}

TEST_CASE("points") {
  Point p = parse_point("x=1/2,rho=-3");
  CHECK(p.at("x") == Expr::rational(1, 2));
  CHECK(p.at("rho") == Expr(-3));
  CHECK(p.at("t") == Expr(2));
  CHECK_THROWS_AS(parse_point("w=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_point("x=y"), std::invalid_argument);
}
