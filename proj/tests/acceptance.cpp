#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "g2amb/verify.hpp"

using namespace g2a;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

// Every listed check must hold; recorded discrepancies count as failures here.
void require(Result& r, const Report& report, const std::vector<std::string>& ids, const std::string& context = "") {
  for (const auto& id : ids) {
    const CheckResult* c = report.find(id);
    if (!c) {
      r.ok = false;
      r.detail += " [" + context + id + ": missing]";
    } else if (!c->ok) {
      r.ok = false;
      r.detail += " [" + context + id + ": " + c->witness + "]";
    }
  }
}

SuiteOptions with_I(const std::string& I) {
  SuiteOptions o;
  o.I = I;
  return o;
}

SuiteOptions with_F(const std::string& F) {
  SuiteOptions o;
  o.F = F;
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Result()> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list = {
      {1, "Ricci-flat ambient metric, I family", 60,
       [] {
         Result r;
         require(r, run_suite("i-family", {}), {"i-family.ricci-flat"});
         return r;
       }},
      {2, "ambient curvature equals the listed tensor, I family", 60,
       [] {
         Result r;
         require(r, run_suite("i-family", {}), {"i-family.curvature-listed"});
         return r;
       }},
      {3, "parallel 3-form with H(Phi) = g, I family", 120,
       [] {
         Result r;
         require(r, run_suite("i-family", {}), {"i-family.nabla-phi", "i-family.h-identity"});
         return r;
       }},
      {4, "holonomy filtration (1,3,4,5), listed span and h5 at three points", 120,
       [] {
         Result r;
         for (const char* pt : {"t=2,x=1,y=3,p=-1,q=2,z=5,rho=1", "t=1,x=-2,y=1,p=3,q=-1,z=0,rho=2",
                                "t=3,x=4,y=-1,p=2,q=1,z=1,rho=-3"}) {
           SuiteOptions o = with_I("x");
           o.point = parse_point(pt);
           require(r, run_suite("holonomy", o), {"holonomy.filtration-pattern", "holonomy.psi-span", "holonomy.h5-fingerprint"},
                   std::string(pt) + " ");
         }
         return r;
       }},
      {5, "almost Einstein ODEs for both families", 120,
       [] {
         Result r;
         require(r, run_suite("i-family", {}), {"i-family.einstein-ode"});
         require(r, run_suite("fq-family", {}), {"fq-family.einstein-ode"});
         return r;
       }},
      {6, "parallel null pair for both families", 120,
       [] {
         Result r;
         require(r, run_suite("i-family", {}), {"i-family.null-pair"});
         require(r, run_suite("fq-family", {}), {"fq-family.null-pair"});
         return r;
       }},
      {7, "Ricci-flat ambient metric, F(q) family", 120,
       [] {
         Result r;
         require(r, run_suite("fq-family", {}), {"fq-family.ricci-flat"});
         return r;
       }},
      {8, "flat exponents", 5,
       [] {
         Result r;
         require(r, run_suite("quartics", {}), {"quartics.flat-exponents", "quartics.nonflat-exponent"});
         return r;
       }},
      {9, "g2 algebra, stabilizers and fixed vectors", 30,
       [] {
         Result r;
         require(r, run_suite("g2", {}),
                 {"g2.dimension", "g2.skew", "g2.annihilates-phi", "g2.classify.K", "g2.classify.H5", "g2.classify.R3",
                  "g2.classify.SL2", "g2.fixed-vectors-h5"});
         return r;
       }},
      {10, "cross product trace identity", 10,
       [] {
         Result r;
         require(r, run_suite("g2", {}), {"g2.trace-identity"});
         return r;
       }},
      {11, "symmetry membership", 60,
       [] {
         Result r;
         require(r, run_suite("fq-family", {}), {"fq-family.symmetries", "fq-family.exp-y-symmetries"});
         return r;
       }},
      {12, "structure equations of the explicit section", 30,
       [] {
         Result r;
         require(r, run_suite("structure-equations", {}),
                 {"structure-equations.d-eta1", "structure-equations.d-eta2", "structure-equations.d-eta5",
                  "structure-equations.d-pi1"});
         return r;
       }},
      {13, "trivial holonomy for F = q^2", 30,
       [] {
         Result r;
         require(r, run_suite("fq-family", with_F("q^2")), {"fq-family.trivial-holonomy"});
         return r;
       }},
      {14, "property suites across the catalog", 120,
       [] {
         Result r;
         for (const char* I : {"I", "x", "x^2 + 1"})
           require(r, run_suite("i-family", with_I(I)),
                   {"i-family.d-squared", "i-family.nabla-g", "i-family.curvature-symmetries"}, std::string("I=") + I + " ");
         for (const char* F : {"F", "q^2", "q^3", "q^(1/3)"})
           require(r, run_suite("fq-family", with_F(F)),
                   {"fq-family.d-squared", "fq-family.nabla-g", "fq-family.curvature-symmetries"},
                   std::string("F=") + F + " ");
         require(r, run_suite("g2", {}), {"g2.jacobi"});
         require(r, run_suite("holonomy", {}), {"holonomy.jacobi"});
         require(r, run_suite("quartics", {}), {"quartics.substitution-invariance"});
         return r;
       }},
  };
  return list;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) only = std::atoi(argv[1]);
  if (argc > 2 || only < 0 || only > static_cast<int>(criteria().size())) {
    std::cerr << "usage: acceptance [criterion number]\n";
    return 2;
  }
  bool all_ok = true;
  for (const auto& c : criteria()) {
    if (only && c.id != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r = {false, std::string(" [error: ") + e.what() + "]"};
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) {
      r.ok = false;
      r.detail += " [over budget]";
    }
    all_ok = all_ok && r.ok;
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s / %.0f s", s, c.budget_s);
    std::cout << "criterion " << c.id << ": " << (r.ok ? "PASS" : "FAIL") << "  " << c.name << "  (" << time << ")"
              << r.detail << "\n";
  }
  return all_ok ? 0 : 1;
}
