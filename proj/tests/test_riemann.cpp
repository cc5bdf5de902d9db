#include "doctest.h"
#include "g2amb/g2alg.hpp"
#include "g2amb/models.hpp"
#include "g2amb/riemann.hpp"

using namespace g2a;

namespace {

const SymbolTable& table() {
  static const SymbolTable t = model_symbols();
  return t;
}

Expr P(const char* s) { return parse(s, table()); }

const IModel& i_model() {
  static const IModel m = build_i_model(P("I"));
  return m;
}

const FqModel& fq_model() {
  static const FqModel m = build_fq_model(P("F"));
  return m;
}

Tensor metric2(const Expr& a, const Expr& b) {
  Tensor g(2, 0, 2, Symmetry::Symmetric);
  g.at({0, 0}) = a;
  g.at({1, 1}) = b;
  return g;
}

bool parallel_metric(const MetricField& g) { return covariant_derivative(g, g.tensor()).is_zero_tensor(); }

}  // namespace

TEST_CASE("christoffel symbols of simple metrics") {
  const Chart plane({"x", "y"});
  MetricField flat(plane, metric2(1, 1));
  CHECK(flat.christoffel().is_zero_tensor());

  const Chart cone({"t", "x"});
  Expr t = Expr::coord("t");
  MetricField g(cone, metric2(1, t * t));
  CHECK(g.christoffel().at({1, 0, 1}) == t.inverse());
  CHECK(g.christoffel().at({0, 1, 1}) == -t);
  CHECK_THROWS_AS(MetricField(plane, metric2(1, 0)), std::domain_error);
}

TEST_CASE("catalog metrics are parallel") {
  CHECK(parallel_metric(i_model().g));
  CHECK(parallel_metric(i_model().g_amb));
  CHECK(parallel_metric(fq_model().g));
  CHECK(parallel_metric(fq_model().g_amb));
}

TEST_CASE("curvature symmetries") {
  for (const MetricField* g : {&i_model().g, &i_model().g_amb, &fq_model().g}) {
    Curvature c = riemann_ricci(*g);
    CHECK(check_symmetries(c.down).all());
  }
  const Chart sphere({"x", "y"});
  Expr x = Expr::coord("x");
  MetricField g(sphere, metric2(1, x * x + 1));
  Curvature c = riemann_ricci(g);
  CHECK(check_symmetries(c.down).all());
  CHECK_FALSE(c.down.is_zero_tensor());
}

TEST_CASE("I-family ambient metric") {
  const IModel& m = i_model();
  Curvature c = riemann_ricci(m.g_amb);
  CHECK(c.ricci.is_zero_tensor());
  for (const auto& a : ambient_axioms(m.g_amb, m.g)) {
    INFO(a.name << " " << a.witness);
    CHECK(a.ok);
  }
  // Coframe components: R(E1, E5, E1, E5) = 3/2 t^2, frozen from an independent coordinate computation.
  Tensor r = m.amb_frame.expand(c.down);
  Expr t = Expr::coord("t");
  CHECK(r.at({1, 5, 1, 5}) == Expr::rational(3, 2) * t * t);
  Tensor scaled = Expr::rational(1, 10) * m.amb_frame.expand(m.expected_curvature);
  CHECK((r - scaled).is_zero_tensor());
  CHECK(m.g_amb.determinant() == Expr::rational(81, 8) * t.pow(12));
}

TEST_CASE("dropping the rho term breaks Ricci flatness") {
  const IModel& m = i_model();
  Tensor bare = ambient_metric(m.g.tensor(), Tensor(5, 0, 2, Symmetry::Symmetric));
  MetricField g(ambient_chart(), bare);
  auto axioms = ambient_axioms(g, m.g);
  CHECK(axioms.at(0).ok);
  CHECK(axioms.at(1).ok);
  CHECK(axioms.at(2).ok);
  CHECK_FALSE(axioms.at(3).ok);
}

TEST_CASE("F(q) ambient metric") {
  const FqModel& m = fq_model();
  Curvature c = riemann_ricci(m.g_amb);
  CHECK(c.ricci.is_zero_tensor());
  CHECK((c.down - m.expected_curvature).is_zero_tensor());
  for (const auto& a : ambient_axioms(m.g_amb, m.g)) {
    INFO(a.name << " " << a.witness);
    CHECK(a.ok);
  }
}

TEST_CASE("F(q) representative with the listed cubic exponent") {
  const FqModel& m = fq_model();
  // The exponent-3 term is a rank-3 tensor and cannot enter a metric; exponent 2 reproduces g.
  CHECK(fq_last_term(m.F, 3).rank() == 3);
  Tensor rest = m.g.tensor() - fq_last_term(m.F, 2);
  CHECK((rest + fq_last_term(m.F, 2) - m.g.tensor()).is_zero_tensor());
  CHECK_FALSE(fq_last_term(m.F, 2).is_zero_tensor());
}

TEST_CASE("trivial holonomy for F = q^2") {
  FqModel m = build_fq_model(P("q^2"));
  CHECK(riemann_ricci(m.g_amb).down.is_zero_tensor());
  CHECK(m.psi_f2.is_zero());
}

TEST_CASE("conformal Killing fields of g_I") {
  const IModel& m = i_model();
  VectorField dz{0, 0, 0, 0, 1};
  CHECK(conformal_killing_residual(m.g, dz).is_zero_tensor());
  SymbolPtr s = ode_solution("sigma", "x", m.ode_a, m.ode_b);
  CHECK(conformal_killing_residual(m.g, m.symmetry(s->derivative(0))).is_zero_tensor());
  VectorField random{P("y"), P("x*p"), 0, P("q^2"), 1};
  CHECK_FALSE(conformal_killing_residual(m.g, random).is_zero_tensor());
  SymbolPtr free = FunctionSymbol::make("sigma", "x");
  CHECK_FALSE(conformal_killing_residual(m.g, m.symmetry(free->derivative(0))).is_zero_tensor());
}

TEST_CASE("Einstein scale residuals") {
  SymbolPtr s = FunctionSymbol::make("sigma", "x");
  Expr sigma = s->derivative(0), s2 = s->derivative(2);
  const IModel& m = i_model();
  EinsteinResidual r = einstein_scale_residual(sigma, m.g);
  Tensor expected = (Expr(3) * sigma.inverse() * (s2 - Expr::rational(1, 3) * m.I * sigma)) *
                    sym_product(Form::basis(5, {0}), Form::basis(5, {0}));
  CHECK((r.ricci - expected).is_zero_tensor());
  CHECK(r.lambda.is_zero());

  const FqModel& f = fq_model();
  SymbolPtr u = FunctionSymbol::make("sigma", "q");
  Expr su = u->derivative(0);
  Expr f2 = f.F.diff("q").diff("q"), f3 = f2.diff("q"), f4 = f3.diff("q");
  Expr ode = Expr(10) * f2 * f2 * u->derivative(2) - Expr(40) * f3 * f2 * u->derivative(1) +
             (Expr(-17) * f4 * f2 + Expr(56) * f3 * f3) * su;
  EinsteinResidual rf = einstein_scale_residual(su, f.g);
  CHECK_FALSE(rf.ricci.is_zero_tensor());
  bool proportional = true;
  for (std::size_t k = 0; k < rf.ricci.size(); ++k) {
    Expr ratio = rf.ricci.flat(k) / ode;
    for (AtomId a : ratio.atoms())
      if (atom_info(a).kind == AtomKind::Function && atom_info(a).name == "sigma" && atom_info(a).order > 0)
        proportional = false;
  }
  CHECK(proportional);
  CHECK(einstein_scale_residual(Expr(1), MetricField(Chart({"x", "y"}), metric2(1, 1))).ricci.is_zero_tensor());
}

TEST_CASE("volume forms and H(phi) on the ambient space") {
  const IModel& m = i_model();
  Form vol = volume_form(m.g_amb, m.amb_frame);
  Expr t = Expr::coord("t");
  Form frame_wedge = Form::scalar(7, Expr(1));
  for (const auto& w : m.amb_frame.forms()) frame_wedge = frame_wedge.wedge(w);
  CHECK(vol.get(127) / frame_wedge.get(127) == Expr(Scalar::radical(9, Rational(-3, 2), 0, 0)) * t.pow(6));
  // With the listed constant, H(Phi) = 6^(1/9) g; rescaling Phi by 6^(-1/6) gives H(Phi) = g.
  CHECK_FALSE(h_identity_check(m.phi_amb, m.g_amb, vol));
  const Expr fix_i(Scalar::radical(1, Rational(-1, 6), Rational(-1, 6), 0));
  CHECK(h_identity_check(fix_i * m.phi_amb, m.g_amb, vol));
  CHECK_FALSE(h_identity_check(fix_i * m.phi_amb, m.g_amb, Expr(2) * vol));
  CHECK(covariant_derivative(m.g_amb, to_tensor(m.phi_amb)).is_zero_tensor());

  const FqModel& f = fq_model();
  Form vf = volume_form(f.g_amb, f.amb_frame);
  // Likewise H(Phi) is a constant multiple of g for the listed constant; (2/3)^(1/6) fixes it.
  CHECK_FALSE(h_identity_check(f.phi_amb, f.g_amb, vf));
  const Expr fix_f(Scalar::radical(1, Rational(1, 6), Rational(-1, 6), 0));
  CHECK(h_identity_check(fix_f * f.phi_amb, f.g_amb, vf));
  CHECK(covariant_derivative(f.g_amb, to_tensor(f.phi_amb)).is_zero_tensor());

  CHECK_THROWS_AS(volume_form(MetricField(Chart({"x", "y"}), metric2(1, P("1 + x^2"))),
                              Coframe(Chart({"x", "y"}), {Form::basis(2, {0}), Form::basis(2, {1})})),
                  std::domain_error);
}

TEST_CASE("serial and parallel kernels agree") {
  const IModel& m = i_model();
  MetricField serial(ambient_chart(), m.g_amb.tensor(), Exec::serial());
  MetricField parallel(ambient_chart(), m.g_amb.tensor(), Exec::with_threads(4));
  CHECK((serial.christoffel() - parallel.christoffel()).is_zero_tensor());
  Curvature a = riemann_ricci(serial), b = riemann_ricci(parallel);
  CHECK((a.down - b.down).is_zero_tensor());
  CHECK((a.up - b.up).is_zero_tensor());
  const FqModel& f = fq_model();
  MetricField fs(ambient_chart(), f.g_amb.tensor(), Exec::serial());
  MetricField fp(ambient_chart(), f.g_amb.tensor(), Exec::with_threads(3));
  CHECK((riemann_ricci(fs).down - riemann_ricci(fp).down).is_zero_tensor());
}
