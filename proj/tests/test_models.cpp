#include "doctest.h"
#include "g2amb/models.hpp"
#include "g2amb/planefield.hpp"

using namespace g2a;

namespace {

const SymbolTable& table() {
  static const SymbolTable t = model_symbols();
  return t;
}

Expr P(const std::string& s) { return parse(s, table()); }

const IModel& i_model() {
  static const IModel m = build_i_model(P("I"));
  return m;
}

const FqModel& f_model() {
  static const FqModel m = build_fq_model(P("F"));
  return m;
}

bool all_ok(const std::vector<AxiomCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

const AxiomCheck& find(const std::vector<AxiomCheck>& checks, const std::string& name) {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw std::out_of_range(name);
}

}  // namespace

TEST_CASE("model specializations") {
  CHECK(build_i_model(Expr(0)).F == P("-(q^2 + y^2)/2"));
  CHECK(i_model().F == P("-(q^2 + 10/3*I*p^2 + (1 + I^2 - I'')*y^2)/2"));
  FqModel flat = build_fq_model(P("q^2"));
  CHECK(flat.psi_f2.is_zero());
  CHECK(flat.expected_curvature.is_zero_tensor());
  CHECK_THROWS_AS(build_fq_model(P("q")), std::invalid_argument);
}

TEST_CASE("ambient metric restricts to the base metric") {
  std::map<std::string, Expr> slice = {{"t", Expr(1)}, {"x", P("x")}, {"y", P("y")}, {"p", P("p")},
                                       {"q", P("q")},  {"z", P("z")}, {"rho", Expr(0)}};
  for (const MetricField* g_amb : {&i_model().g_amb, &f_model().g_amb}) {
    const MetricField& g = g_amb == &i_model().g_amb ? i_model().g : f_model().g;
    Tensor restricted = pullback(g_amb->tensor(), ambient_chart(), base_chart(), slice);
    CHECK((restricted - g.tensor()).is_zero_tensor());
  }
}

TEST_CASE("parallel null pairs") {
  CHECK(all_ok(parallel_pair_check(i_model())));
  CHECK(all_ok(parallel_pair_check(f_model())));
  const IModel& m = i_model();
  Expr eps = Expr::rational(1, 100);
  auto perturbed = [&](const Expr& sigma) {
    VectorField v = m.xi(sigma);
    v[ambient_chart().require("y")] += eps;
    return v;
  };
  auto checks = parallel_pair_check(m.g_amb, m.phi_amb, perturbed, m.ode_a, m.ode_b, m.ode_argument);
  CHECK_FALSE(find(checks, "xi1 parallel").ok);
  CHECK_FALSE(find(checks, "xi1 parallel").witness.empty());
}

TEST_CASE("defining 2-forms") {
  CHECK(defining_form_from_ambient(i_model().phi_amb) == i_model().phi);
  CHECK(defining_form_from_ambient(f_model().phi_amb) == f_model().phi);
  // the kernel of phi_I is the derived plane field
  const IModel& m = i_model();
  PlaneField d = from_monge(m.F);
  for (const auto& x : d.derived()) CHECK(m.phi.interior(x).is_zero_form());
  Matrix<Expr> comps(5, 5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) comps(i, j) = m.phi.component({i, j});
  CHECK(rank(comps) == 2);
}

TEST_CASE("ambient 3-form contractions") {
  const IModel& m = i_model();
  const Chart& ch = ambient_chart();
  Form e1 = m.phi_amb.interior(m.amb_frame.vector(1));
  CHECK(e1.component({static_cast<int>(ch.require("t")), static_cast<int>(ch.require("rho"))}).is_zero());
  for (std::size_t b = 0; b < 7; ++b) {
    const VectorField& x = m.amb_frame.vector(b);
    CHECK(m.phi_amb.interior(x).interior(x).is_zero_form());
  }
}

TEST_CASE("structure equations of the explicit section") {
  auto residuals = structure_equation_residuals(build_cartan_section(P("I")));
  REQUIRE(residuals.size() == 7);
  std::map<std::string, std::string> nonzero;
  for (const auto& r : residuals)
    if (!r.zero) nonzero[r.name] = r.witness;
  CHECK(nonzero == std::map<std::string, std::string>{{"d eta1", "dx^dy: -q*I + y*I^2 - y*I'' + y"},
                                                      {"d eta3", "dx^dy: I"},
                                                      {"d eta4", "dx^dy: I'"},
                                                      {"d pi2", "dx^dy: -I^2"}});
  auto variant = structure_equation_residuals(build_cartan_section(P("I"), true));
  CHECK(variant[0].witness == "dx^dy: -q*I");
  std::vector<std::string> zero_section;
  for (const auto& r : structure_equation_residuals(build_cartan_section(Expr(0))))
    if (!r.zero) zero_section.push_back(r.name + " " + r.witness);
  CHECK(zero_section == std::vector<std::string>{"d eta1 dx^dy: y", "d eta3 dx^dq: -1"});
}

TEST_CASE("aEs to symmetry correspondence") {
  const IModel& m = i_model();
  SymbolPtr s = ode_solution("sigma", "x", m.ode_a, m.ode_b);
  Expr sigma = s->derivative(0);
  VectorField forward = aes_to_symmetry(sigma, m.g, m.phi);
  VectorField listed = m.symmetry(sigma);
  Expr factor = Expr(-9) * Expr(m.C);
  for (std::size_t i = 0; i < 5; ++i) CHECK(forward[i] == factor * listed[i]);
  CHECK(conformal_killing_residual(m.g, forward).is_zero_tensor());
  // conformal Killing but not a symmetry of the plane field
  CHECK_FALSE(symmetry_check(forward, from_monge(m.F)));
  Expr c = symmetry_to_aes(forward, m.g, m.phi) / sigma;
  CHECK(c == Expr(Scalar::radical(Rational(1, 3), Rational(1, 3), Rational(1, 3), 0)));
  CHECK(symmetry_to_aes(listed, m.g, m.phi) / sigma ==
        Expr(Scalar::radical(Rational(-2, 27), Rational(1, 6), Rational(2, 3), 0)));
  for (const auto& v : aes_to_symmetry(Expr(0), m.g, m.phi)) CHECK(v.is_zero());
}

TEST_CASE("integral curves of the parallel field") {
  auto r = integral_curve_residual(i_model());
  CHECK(r.rho.is_zero());
  CHECK(r.z_ratio == Expr::rational(1, 2));
  CHECK_FALSE(r.z.is_zero());
}
