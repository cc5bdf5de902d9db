#include "g2amb/models.hpp"

#include <stdexcept>

namespace g2a {

namespace {

Expr coord(const char* name) { return Expr::coord(name); }
Expr R(long n, long d = 1) { return Expr::rational(n, d); }

Tensor outer(const Form& a, const Form& b) { return tensor_product(to_tensor(a), to_tensor(b)); }

Tensor wedge_square(const Form& a, const Form& b) {
  Tensor ab = outer(a, b) - outer(b, a);
  return tensor_product(ab, ab);
}

}  // namespace

const Chart& base_chart() {
  static const Chart c({"x", "y", "p", "q", "z"});
  return c;
}

const Chart& ambient_chart() {
  static const Chart c({"t", "x", "y", "p", "q", "z", "rho"});
  return c;
}

SymbolTable model_symbols() { return SymbolTable::standard(); }

std::vector<Form> monge_coframe(const Expr& f) {
  const std::size_t n = base_chart().dim();
  auto d = [n](int i) { return Form::basis(n, {i}); };
  Expr fq = f.diff("q");
  Expr p = coord("p"), q = coord("q");
  return {
      d(1) - p * d(0),
      d(4) - f * d(0) - fq * (d(2) - q * d(0)),
      d(2) - q * d(0),
      d(3),
      d(0),
  };
}

Form lift(const Form& a) {
  if (a.dim() != base_chart().dim()) throw std::invalid_argument("lift expects a base form");
  Form r(ambient_chart().dim(), a.degree());
  for (const auto& [m, v] : a.components()) r.add(m << 1, v);
  return r;
}

Tensor lift(const Tensor& t) {
  if (t.dim() != base_chart().dim()) throw std::invalid_argument("lift expects a base tensor");
  Tensor r(ambient_chart().dim(), t.contra(), t.co(), t.symmetry());
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.flat(k).is_zero()) continue;
    std::vector<int> idx = t.unflatten(k);
    for (int& i : idx) ++i;
    r.at(idx) = t.flat(k);
  }
  return r;
}

VectorField lift(const VectorField& v) {
  VectorField r(ambient_chart().dim());
  for (std::size_t i = 0; i < v.size(); ++i) r[i + 1] = v[i];
  return r;
}

Coframe ambient_coframe(const std::vector<Form>& omega) {
  const std::size_t n = ambient_chart().dim();
  std::vector<Form> forms{Form::basis(n, {0})};
  for (const auto& w : omega) forms.push_back(lift(w));
  forms.push_back(Form::basis(n, {6}));
  return Coframe(ambient_chart(), std::move(forms));
}

Tensor ambient_metric(const Tensor& g, const Tensor& correction) {
  const std::size_t n = ambient_chart().dim();
  Expr t = coord("t"), rho = coord("rho");
  Tensor G(n, 0, 2, Symmetry::Symmetric);
  G.at({0, 0}) = Expr(2) * rho;
  G.at({0, 6}) = t;
  G.at({6, 0}) = t;
  return G + (t * t) * (lift(g) + rho * lift(correction));
}

Tensor quadratic(const std::vector<Form>& forms, const std::vector<QuadTerm>& terms) {
  Tensor g(forms.at(0).dim(), 0, 2, Symmetry::Symmetric);
  for (const auto& [c, a, b] : terms)
    g = g + c * sym_product(forms.at(static_cast<std::size_t>(a)), forms.at(static_cast<std::size_t>(b)));
  return g;
}

SymbolPtr ode_solution(const std::string& name, const std::string& argument, const Expr& a, const Expr& b) {
  return FunctionSymbol::make_with_rule(name, argument, 2, [&](const SymbolPtr& s) {
    return a * s->derivative(1) + b * s->derivative(0);
  });
}

Expr psi_operator(const Expr& u, const std::string& var) {
  Expr u1 = u.diff(var), u2 = u1.diff(var), u3 = u2.diff(var), u4 = u3.diff(var);
  return Expr(10) * u4 * u.pow(3) - Expr(80) * u3 * u1 * u.pow(2) - Expr(51) * u2.pow(2) * u.pow(2) +
         Expr(336) * u2 * u1.pow(2) * u - Expr(224) * u1.pow(4);
}

VectorField IModel::xi(const Expr& sigma) const {
  const Chart& ch = ambient_chart();
  VectorField v(ch.dim());
  Expr tinv = coord("t").inverse();
  v[ch.require("z")] = R(-2, 3) * tinv * sigma.diff("x");
  v[ch.require("rho")] = tinv * sigma;
  return v;
}

VectorField IModel::symmetry(const Expr& sigma) const {
  VectorField v(base_chart().dim());
  const VectorField& e3 = base_frame.vector(2);
  const VectorField& e4 = base_frame.vector(3);
  Expr s1 = sigma.diff("x");
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = R(-1, 9) * (sigma * e3[i] + Expr(4) * s1 * e4[i]);
  return v;
}

namespace {

void require_single_variable(const Expr& e, const std::string& var, const char* message) {
  for (const auto& c : ambient_chart().names())
    if (c != var && e.depends_on(c)) throw std::invalid_argument(message);
  for (AtomId a : e.atoms())
    if (atom_info(a).kind == AtomKind::Function && atom_info(a).symbol->argument() != var)
      throw std::invalid_argument(message);
}

}  // namespace

IModel build_i_model(const Expr& I, Exec exec) {
  require_single_variable(I, "x", "I must depend on x only");
  IModel m;
  m.I = I;
  Expr y = coord("y"), p = coord("p"), q = coord("q"), t = coord("t");
  Expr I2 = I.diff("x").diff("x");
  m.F = R(-1, 2) * (q * q + R(10, 3) * I * p * p + (Expr(1) + I * I - I2) * y * y);
  m.omega = monge_coframe(m.F);
  m.base_frame = Coframe(base_chart(), m.omega);
  m.amb_frame = ambient_coframe(m.omega);
  const auto& w = m.omega;
  Tensor g = quadratic(w, {{Expr(-3) * I, 0, 0}, {Expr(3), 0, 3}, {Expr(-10) * I * p, 0, 4}, {Expr(-3), 1, 4}, {Expr(-2), 2, 2}});
  Tensor corr = R(-2, 3) * I * sym_product(w[4], w[4]);
  m.g = MetricField(base_chart(), g, exec);
  m.g_amb = MetricField(ambient_chart(), ambient_metric(g, corr), exec);
  m.C = Scalar::radical(1, Rational(-5, 6), Rational(-1, 3), 0);

  const auto& A = m.amb_frame.forms();  // dt, w1..w5, drho
  auto w3 = [&](int a, int b, int c) { return A[a].wedge(A[b]).wedge(A[c]); };
  Expr t2 = t * t, t3 = t2 * t, rho = coord("rho");
  Form phi = Expr(-9) * t2 * w3(0, 1, 2) + Expr(-2) * t2 * w3(0, 3, 6) + Expr(-3) * t3 * w3(1, 3, 4) +
             Expr(10) * t3 * I * p * w3(1, 3, 5) - t3 * I * w3(1, 5, 6) + Expr(3) * t3 * w3(2, 3, 5) +
             t3 * w3(4, 5, 6) + rho * (Expr(-3) * t2 * I * w3(0, 1, 5) + t2 * w3(0, 4, 5));
  m.phi_amb = Expr(m.C) * phi;
  m.phi = Expr(-9) * Expr(m.C) * w[0].wedge(w[1]);

  m.expected_curvature = Expr(15) * t2 * wedge_square(A[1], A[5]);

  // psi list over the ambient frame: d_t, E1..E5, d_rho
  const Coframe& cf = m.amb_frame;
  auto E = [&](int a) { return cf.vector(static_cast<std::size_t>(a)); };
  auto endo = [&](const Expr& c, int vec, int form) { return c * endomorphism(E(vec), A[form]); };
  Expr tinv = t.inverse();
  const int dt = 0, drho = 6, e1 = 1, e2 = 2, e3 = 3, e4 = 4;
  const int w1 = 1, w3f = 3, w4 = 4, w5 = 5;
  Expr one(1);
  m.psi = {
      endo(one, e2, w1) + endo(one, e4, w5),
      endo(tinv, e2, dt) + endo(Expr(15), drho, w5),
      endo(Expr(4), e2, w3f) + endo(Expr(-3), e3, w5) + endo(Expr(-6) * tinv, e4, dt) + endo(Expr(90), drho, w1),
      endo(Expr(3), e1, w5) + endo(Expr(3), e2, w4) + endo(Expr(-10) * I * p, e2, w5) + endo(Expr(9) * tinv, e3, dt) +
          endo(Expr(6) * I, e4, w5) + endo(Expr(180), drho, w3f),
      endo(tinv, e1, dt) + endo(tinv * I, e4, dt) + endo(Expr(15) * I, drho, w1) + endo(Expr(-15), drho, w4) +
          endo(Expr(50) * I * p, drho, w5),
  };
  m.ode_a = Expr(0);
  m.ode_b = R(1, 3) * I;
  return m;
}

VectorField FqModel::xi(const Expr& sigma) const {
  const Chart& ch = ambient_chart();
  VectorField v(ch.dim());
  Expr tinv = coord("t").inverse();
  Expr f2 = F.diff("q").diff("q");
  v[ch.require("y")] = R(1, 15) * f2.pow(-4) * tinv * sigma.diff("q");
  v[ch.require("rho")] = tinv * sigma;
  return v;
}

Tensor fq_last_term(const Expr& F, int k) {
  Expr f2 = F.diff("q").diff("q");
  std::vector<Form> w = monge_coframe(F);
  Tensor r = to_tensor(Form::scalar(w[2].dim(), Expr(-20) * f2.pow(4)));
  for (int i = 0; i < k; ++i) r = tensor_product(r, to_tensor(w[2]));
  return r;
}

FqModel build_fq_model(const Expr& F, Exec exec) {
  require_single_variable(F, "q", "F must depend on q only");
  FqModel m;
  m.F = F;
  Expr f1 = F.diff("q"), f2 = f1.diff("q"), f3 = f2.diff("q"), f4 = f3.diff("q");
  if (f2.is_zero()) throw std::invalid_argument("F'' vanishes identically");
  Expr t = coord("t"), rho = coord("rho"), p = coord("p"), q = coord("q"), x = coord("x"), y = coord("y"), z = coord("z");
  m.omega = monge_coframe(F);
  m.base_frame = Coframe(base_chart(), m.omega);
  m.amb_frame = ambient_coframe(m.omega);
  const auto& w = m.omega;
  Tensor g = quadratic(w, {{Expr(30) * f2.pow(4), 0, 3},
                           {Expr(-3) * f4 * f2 + Expr(4) * f3 * f3, 1, 1},
                           {Expr(-10) * f3 * f2 * f2, 1, 2},
                           {Expr(30) * f2.pow(3), 1, 4},
                           {Expr(-20) * f2.pow(4), 2, 2}});
  Tensor corr = (-(Expr(17) * f4 * f2 - Expr(56) * f3 * f3) / (Expr(5) * f2 * f2)) * sym_product(w[3], w[3]);
  m.g = MetricField(base_chart(), g, exec);
  m.g_amb = MetricField(ambient_chart(), ambient_metric(g, corr), exec);
  m.C = Scalar::radical(1, Rational(1, 3), Rational(5, 3), Rational(3, 2));

  const auto& A = m.amb_frame.forms();
  auto w3 = [&](int a, int b, int c) { return A[a].wedge(A[b]).wedge(A[c]); };
  Expr t2 = t * t, t3 = t2 * t;
  Form phi = f2.pow(5) * t2 * w3(0, 1, 2) + R(1, 9) * f3 * t2 * w3(0, 2, 6) - R(1, 45) * f2.pow(2) * t2 * w3(0, 3, 6) +
             R(5, 3) * f3 * f2.pow(4) * t3 * w3(1, 2, 4) - R(1, 3) * f2.pow(6) * t3 * w3(1, 3, 4) -
             R(1, 3) * f2.pow(5) * t3 * w3(2, 3, 5) +
             R(1, 900) * (f4 - Expr(168) * f3 * f3 / f2) * t3 * w3(2, 4, 6) + R(7, 90) * f3 * f2 * t3 * w3(3, 4, 6) +
             R(1, 90) * f2.pow(2) * t3 * w3(4, 5, 6) +
             rho * (R(1, 900) * (Expr(103) * f4 - Expr(504) * f3 * f3 / f2) * t2 * w3(0, 2, 4) +
                    R(7, 90) * f3 * f2 * t2 * w3(0, 3, 4) + R(1, 90) * f2.pow(2) * t2 * w3(0, 4, 5));
  m.phi_amb = Expr(m.C) * phi;
  m.phi = Expr(m.C) * f2.pow(5) * w[0].wedge(w[1]);
  m.psi_f2 = psi_operator(f2);
  m.expected_curvature = R(3, 20) * t2 * f2.pow(-2) * m.psi_f2 * wedge_square(A[2], A[4]);
  m.ode_a = Expr(4) * f3 / f2;
  m.ode_b = (Expr(17) * f4 * f2 - Expr(56) * f3 * f3) / (Expr(10) * f2 * f2);

  Expr Fv = F;
  SymbolPtr integral = FunctionSymbol::make_with_rule("intFppF", "q", 1, [&](const SymbolPtr&) { return f2 * Fv; });
  auto vf = [](std::vector<Expr> c) { return VectorField(std::move(c)); };
  m.symmetries = {
      vf({1, 0, 0, 0, 0}),
      vf({0, 1, 0, 0, 0}),
      vf({0, 0, 0, 0, 1}),
      vf({x, Expr(2) * y, p, 0, z}),
      vf({0, x, 1, 0, 0}),
      vf({f1, p * f1 - z, q * f1 - F, 0, integral->derivative(0)}),
  };
  return m;
}

}  // namespace g2a

namespace g2a {

namespace {

// (2,0) tensor phi^{ab} = g^{ac} g^{bd} phi_{cd}.
Tensor raise_both(const MetricField& g, const Tensor& phi) {
  const std::size_t n = g.dim();
  const auto& inv = g.inverse();
  Tensor half(n, 1, 1);  // phi^a_d
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t d = 0; d < n; ++d) {
      Expr s;
      for (std::size_t c = 0; c < n; ++c)
        if (!inv(a, c).is_zero()) s += inv(a, c) * phi.at({int(c), int(d)});
      half.at({int(a), int(d)}) = s;
    }
  Tensor up(n, 2, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Expr s;
      for (std::size_t d = 0; d < n; ++d)
        if (!inv(b, d).is_zero()) s += inv(b, d) * half.at({int(a), int(d)});
      up.at({int(a), int(b)}) = s;
    }
  return up;
}

}  // namespace

CartanSection build_cartan_section(const Expr& I, bool with_y2) {
  const std::size_t n = base_chart().dim();
  auto d = [n](int i) { return Form::basis(n, {i}); };
  Expr y = coord("y"), p = coord("p"), q = coord("q");
  Expr I1 = I.diff("x"), I2 = I1.diff("x");
  Expr k = Expr(1) + I * I - I2;
  Expr last = R(1, 2) * k * (with_y2 ? y * y : Expr(1));
  CartanSection s;
  s.I = I;
  s.eta = {
      d(4) + R(7, 3) * p * I * d(1) + q * d(2) - (R(1, 2) * q * q + R(2, 3) * I * p * p - last) * d(0),
      d(1) - p * d(0),
      -d(2) + q * d(0),
      d(3) - I * d(0),
      d(0),
  };
  s.pi1 = Form(n, 1);
  s.pi2 = -I1 * d(1) - R(4, 3) * I * d(2) + (k * y - R(4, 3) * I1 * p - I * q) * d(0);
  const auto& e = s.eta;
  const Form& p1 = s.pi1;
  const Form& p2 = s.pi2;
  s.names = {"d eta1", "d eta2", "d eta3", "d eta4", "d eta5", "d pi1", "d pi2"};
  s.rhs = {
      Expr(2) * e[0].wedge(p1) + e[1].wedge(p2) + e[2].wedge(e[3]),
      e[1].wedge(p1) + e[2].wedge(e[4]),
      I * e[1].wedge(e[4]) + e[2].wedge(p1) + e[3].wedge(e[3]),
      R(4, 3) * I * e[2].wedge(e[4]) + e[3].wedge(p1) + e[4].wedge(p2),
      Form(n, 2),
      Form(n, 2),
      -p1.wedge(p2) - I * e[3].wedge(e[4]) + e[1].wedge(e[4]),
  };
  return s;
}

std::string form_witness(const Chart& chart, const Form& a) {
  if (a.is_zero_form()) return "";
  const auto& [mask, v] = *a.components().begin();
  std::string s;
  for (int i : mask_indices(mask)) s += (s.empty() ? "d" : "^d") + chart.name(static_cast<std::size_t>(i));
  return (s.empty() ? "1" : s) + ": " + v.str();
}

std::vector<EquationResidual> structure_equation_residuals(const CartanSection& s) {
  std::vector<Form> lhs = s.eta;
  lhs.push_back(s.pi1);
  lhs.push_back(s.pi2);
  std::vector<EquationResidual> out;
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    EquationResidual r;
    r.name = s.names[k];
    r.residual = exterior_derivative(base_chart(), lhs[k]) - s.rhs[k];
    r.zero = r.residual.is_zero_form();
    r.witness = form_witness(base_chart(), r.residual);
    out.push_back(std::move(r));
  }
  return out;
}

VectorField aes_to_symmetry(const Expr& sigma, const MetricField& g, const Form& phi) {
  const std::size_t n = g.dim();
  Tensor up = raise_both(g, to_tensor(phi));
  Tensor dup = covariant_derivative(g, up);  // nabla_c phi^{ab} at (a, b, c)
  VectorField xi(n);
  for (std::size_t a = 0; a < n; ++a) {
    Expr s;
    for (std::size_t b = 0; b < n; ++b) {
      const Expr& pab = up.at({int(a), int(b)});
      if (!pab.is_zero()) s += pab * sigma.diff(g.chart().atom(b));
      s += R(1, 4) * dup.at({int(b), int(a), int(b)}) * sigma;
    }
    xi[a] = s;
  }
  return xi;
}

Expr symmetry_to_aes(const VectorField& xi, const MetricField& g, const Form& phi) {
  const std::size_t n = g.dim();
  const auto& inv = g.inverse();
  Tensor low = to_tensor(phi);
  Tensor dxi = covariant_derivative(g, vector_tensor(xi));  // nabla_c xi^b at (b, c)
  Tensor dphi = covariant_derivative(g, low);               // nabla_c phi_{ab} at (a, b, c)
  Expr r;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        if (inv(a, c).is_zero()) continue;
        r += low.at({int(a), int(b)}) * inv(a, c) * dxi.at({int(b), int(c)});
      }
  for (std::size_t a = 0; a < n; ++a) {
    if (xi[a].is_zero()) continue;
    Expr div;
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (!inv(b, c).is_zero()) div += inv(b, c) * dphi.at({int(a), int(b), int(c)});
    r -= R(1, 2) * xi[a] * div;
  }
  return r;
}

std::vector<AxiomCheck> parallel_pair_check(const MetricField& g_amb, const Form& phi_amb,
                                            const std::function<VectorField(const Expr&)>& xi,
                                            const Expr& ode_a, const Expr& ode_b, const std::string& argument) {
  SymbolPtr s1 = ode_solution("sigma1", argument, ode_a, ode_b);
  SymbolPtr s2 = ode_solution("sigma2", argument, ode_a, ode_b);
  const VectorField x1 = xi(s1->derivative(0)), x2 = xi(s2->derivative(0));
  std::vector<AxiomCheck> out;
  auto add = [&](std::string name, bool ok, std::string witness) {
    out.push_back({std::move(name), ok, ok ? "" : std::move(witness)});
  };
  for (const auto& [name, x] : {std::pair{"xi1", &x1}, std::pair{"xi2", &x2}}) {
    Expr norm = g_amb.inner(*x, *x);
    add(std::string(name) + " null", norm.is_zero(), norm.str());
    Tensor dx = covariant_derivative(g_amb, vector_tensor(*x));
    add(std::string(name) + " parallel", dx.is_zero_tensor(), first_nonzero_witness(dx));
  }
  add("independent", span_rank(std::vector<VectorField>{x1, x2}) == 2, "rank < 2");
  Form c = phi_amb.interior(x1).interior(x2);
  add("Phi(xi1, xi2, .) = 0", c.is_zero_form(), form_witness(g_amb.chart(), c));
  return out;
}

std::vector<AxiomCheck> parallel_pair_check(const IModel& m) {
  return parallel_pair_check(m.g_amb, m.phi_amb, [&](const Expr& s) { return m.xi(s); }, m.ode_a, m.ode_b,
                             m.ode_argument);
}

std::vector<AxiomCheck> parallel_pair_check(const FqModel& m) {
  return parallel_pair_check(m.g_amb, m.phi_amb, [&](const Expr& s) { return m.xi(s); }, m.ode_a, m.ode_b,
                             m.ode_argument);
}

Form defining_form_from_ambient(const Form& phi_amb) {
  VectorField dt(ambient_chart().dim());
  dt[0] = Expr(1);
  Form f = phi_amb.interior(dt);
  std::map<std::string, Expr> embed{{"t", Expr(1)}, {"rho", Expr(0)}};
  for (const auto& name : base_chart().names()) embed.emplace(name, Expr::coord(name));
  return pullback(f, ambient_chart(), base_chart(), embed);
}

IntegralCurveResidual integral_curve_residual(const IModel& m) {
  SymbolPtr s = ode_solution("sigma", "x", m.ode_a, m.ode_b);
  Expr sigma = s->derivative(0), sigma1 = s->derivative(1);
  const Expr c(m.C);
  // gamma(tau) = (C/sigma, x0, y0, p0, q0, z0 - sigma sigma' tau / (3C), rho0 + sigma^2 tau / C)
  Expr z_velocity = -(sigma * sigma1) / (Expr(3) * c);
  Expr rho_velocity = sigma * sigma / c;
  VectorField v = m.xi(sigma);
  std::map<std::string, Expr> on_leaf{{"t", c / sigma}};
  Expr xz = v[ambient_chart().require("z")].subs(on_leaf);
  Expr xr = v[ambient_chart().require("rho")].subs(on_leaf);
  IntegralCurveResidual r;
  r.z = z_velocity - xz;
  r.rho = rho_velocity - xr;
  r.z_ratio = xz.is_zero() ? Expr(0) : z_velocity / xz;
  return r;
}

}  // namespace g2a
