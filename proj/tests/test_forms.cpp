#include <random>

#include "doctest.h"
#include "g2amb/forms.hpp"
#include "g2amb/parse.hpp"

using namespace g2a;

namespace {

const SymbolTable& table() {
  static const SymbolTable t = SymbolTable::standard();
  return t;
}

Expr P(const char* s) { return parse(s, table()); }

const Chart& base() {
  static const Chart c({"x", "y", "p", "q", "z"});
  return c;
}

Form one(std::vector<const char*> comps) {
  std::vector<Expr> v;
  for (const char* s : comps) v.push_back(P(s));
  return Form::one_form(v);
}

Form dx(int i) { return Form::basis(base().dim(), {i}); }

Expr random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2), pick(0, 4);
  Expr r;
  for (int k = 0; k < 3; ++k) {
    Expr m = Expr(coef(rng));
    for (int j = 0; j < 2; ++j) m *= base().coord(static_cast<std::size_t>(pick(rng))).pow(expo(rng));
    r += m;
  }
  return r;
}

Form random_form(std::mt19937& rng, int degree) {
  Form f(5, degree);
  for (std::uint32_t m = 0; m < 32; ++m)
    if (std::popcount(m) == degree && rng() % 2) f.add(m, random_poly(rng));
  return f;
}

VectorField random_vector(std::mt19937& rng) {
  VectorField v;
  for (int i = 0; i < 5; ++i) v.push_back(random_poly(rng));
  return v;
}

// Monge coframe for z' = F(x, y, y', y'', z).
std::vector<Form> monge(const Expr& f) {
  Expr fq = f.diff("q");
  Expr q = P("q"), p = P("p");
  return {
      dx(1) - p * dx(0),
      dx(4) - f * dx(0) - fq * (dx(2) - q * dx(0)),
      dx(2) - q * dx(0),
      dx(3),
      dx(0),
  };
}

}  // namespace

TEST_CASE("exterior derivative basics") {
  Form w1 = one({"-p", "1", "0", "0", "0"});
  CHECK(exterior_derivative(base(), w1) == dx(0).wedge(dx(2)));
  CHECK(exterior_derivative(base(), dx(0)).is_zero_form());
  Form f = Form::scalar(5, P("x*y^2"));
  CHECK(exterior_derivative(base(), f) == P("y^2") * dx(0) + P("2*x*y") * dx(1));
}

TEST_CASE("wedge signs and components") {
  CHECK(wedge_sign(0b01, 0b10) == 1);
  CHECK(wedge_sign(0b10, 0b01) == -1);
  CHECK(wedge_sign(0b11, 0b01) == 0);
  Form a = Form::basis(5, {3, 1});
  CHECK(a.get(0b01010) == Expr(-1));
  CHECK(a.component({3, 1}) == Expr(1));
  CHECK(a.component({1, 1}).is_zero());
}

TEST_CASE("random form identities") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 6; ++trial) {
    int k = 1 + trial % 2, l = 1 + (trial / 2) % 2;
    Form a = random_form(rng, k), b = random_form(rng, l);
    VectorField xi = random_vector(rng);
    Form da = exterior_derivative(base(), a);
    CHECK(exterior_derivative(base(), da).is_zero_form());
    // Leibniz
    Form lhs = exterior_derivative(base(), a.wedge(b));
    Form rhs = da.wedge(b) + ((k % 2) ? -a.wedge(exterior_derivative(base(), b)) : a.wedge(exterior_derivative(base(), b)));
    CHECK(lhs == rhs);
    // graded commutativity
    Form ab = a.wedge(b), ba = b.wedge(a);
    CHECK(ab == (((k * l) % 2) ? -ba : ba));
    // Cartan formula
    Form cartan = exterior_derivative(base(), a.interior(xi)) + da.interior(xi);
    CHECK(lie_derivative(base(), xi, a) == cartan);
    // interior product is alternating
    if (k >= 2) CHECK(a.interior(xi).interior(xi).is_zero_form());
    // tensor round trip
    CHECK(to_form(to_tensor(a)) == a);
    // Lie derivative of forms matches the tensor version
    CHECK((to_tensor(lie_derivative(base(), xi, a)) - lie_derivative(base(), xi, to_tensor(a))).is_zero_tensor());
  }
}

TEST_CASE("Lie derivative of functions and brackets") {
  std::mt19937 rng(11);
  VectorField x = random_vector(rng), y = random_vector(rng);
  Expr f = random_poly(rng);
  Expr lhs = apply(base(), bracket(base(), x, y), f);
  Expr rhs = apply(base(), x, apply(base(), y, f)) - apply(base(), y, apply(base(), x, f));
  CHECK((lhs - rhs).is_zero());
  CHECK(lie_derivative(base(), {0, 0, 0, 0, 1}, one({"-p", "1", "0", "0", "0"})).is_zero_form());
}

TEST_CASE("Monge coframe duality and interior products") {
  Coframe cf(base(), monge(P("q^2")));
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = 0; b < 5; ++b) {
      Expr v = cf.form(a).evaluate({cf.vector(b)});
      CHECK(v == Expr(a == b ? 1 : 0));
    }
  // E5 = d_x + p d_y + q d_p + F d_z
  VectorField e5 = cf.vector(4);
  CHECK(e5[0] == Expr(1));
  CHECK(e5[1] == P("p"));
  CHECK(e5[2] == P("q"));
  CHECK(e5[3].is_zero());
  CHECK(e5[4] == P("q^2"));
  Form w45 = cf.form(3).wedge(cf.form(4));
  CHECK(w45.interior(cf.vector(3)) == cf.form(4));
  // expansion over the coframe and reassembly
  std::mt19937 rng(3);
  Form a = random_form(rng, 2);
  CHECK(cf.assemble(cf.expand(a)) == a);
  Tensor g = sym_product(cf.form(0), cf.form(3));
  Tensor gc = cf.expand(g);
  CHECK(gc.at({0, 3}) == Expr::rational(1, 2));
  CHECK(gc.at({3, 0}) == Expr::rational(1, 2));
  CHECK(gc.at({0, 0}).is_zero());
  CHECK((cf.assemble(gc) - g).is_zero_tensor());
}

TEST_CASE("pullbacks") {
  Chart line({"x"});
  SymbolTable t = table();
  std::map<std::string, Expr> jet = {
      {"x", P("x")}, {"y", P("I")}, {"p", P("I'")}, {"q", P("I''")}, {"z", P("x^3")}};
  Form w3 = one({"-q", "0", "1", "0", "0"});
  CHECK(pullback(w3, base(), line, jet).is_zero_form());
  Form di = differential(base(), P("I"));
  CHECK(pullback(di, base(), line, jet) == P("I'") * Form::basis(1, {0}));
  // pullback commutes with d and wedge
  std::mt19937 rng(5);
  Chart plane({"x", "y"});
  std::map<std::string, Expr> s = {
      {"x", P("x")}, {"y", P("y^2")}, {"p", P("x*y")}, {"q", P("x + y")}, {"z", P("1")}};
  Form a = random_form(rng, 1), b = random_form(rng, 1);
  CHECK(pullback(exterior_derivative(base(), a), base(), plane, s) ==
        exterior_derivative(plane, pullback(a, base(), plane, s)));
  CHECK(pullback(a.wedge(b), base(), plane, s) ==
        pullback(a, base(), plane, s).wedge(pullback(b, base(), plane, s)));
  // tensor pullback agrees with the form pullback on alternating tensors
  Form c = a.wedge(b);
  CHECK((pullback(to_tensor(c), base(), plane, s) - to_tensor(pullback(c, base(), plane, s))).is_zero_tensor());
}

TEST_CASE("tensor products") {
  Tensor a = vector_tensor({P("x"), 0, 0, 0, 0});
  Tensor b = to_tensor(dx(1));
  Tensor ab = tensor_product(b, a);
  CHECK(ab.contra() == 1);
  CHECK(ab.at({0, 1}) == P("x"));
  Tensor e = endomorphism({P("x"), 0, 0, 0, 0}, dx(1));
  CHECK((ab - e).is_zero_tensor());
  CHECK(evaluate(to_tensor(dx(0).wedge(dx(1))), {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}}) == Expr(1));
  CHECK(sym_product(dx(0), dx(1)).satisfies_symmetry());
  CHECK_THROWS(to_form(sym_product(dx(0), dx(1))));
}
