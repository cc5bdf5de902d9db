#include "doctest.h"
#include "g2amb/g2alg.hpp"
#include "g2amb/holonomy.hpp"
#include "g2amb/models.hpp"

using namespace g2a;

namespace {

Point point(long t, long x, long y, long p, long q, long z, long rho) {
  return {{"t", Expr(t)}, {"x", Expr(x)}, {"y", Expr(y)}, {"p", Expr(p)},
          {"q", Expr(q)}, {"z", Expr(z)}, {"rho", Expr(rho)}};
}

const IModel& linear_model() {
  static const IModel m = build_i_model(Expr::coord("x"));
  return m;
}

std::vector<Tensor> scaled_rho_rows(std::vector<Tensor> psi, const Scalar& lambda) {
  for (auto& t : psi)
    for (int b = 0; b < 7; ++b) t.at({6, b}) = Expr(lambda) * t.at({6, b});
  return psi;
}

}  // namespace

TEST_CASE("evaluation at points") {
  Point pt = point(2, 1, 3, -1, 2, 5, 1);
  CHECK(evaluate_at(Expr::coord("x") * Expr::coord("t"), pt) == Scalar(2));
  CHECK_THROWS_AS(evaluate_at(Expr::coord("t").inverse(), point(0, 1, 3, -1, 2, 5, 1)), std::domain_error);
}

TEST_CASE("filtration dimensions for I = x") {
  const IModel& m = linear_model();
  for (const Point& pt : {point(2, 1, 3, -1, 2, 5, 1), point(1, -2, 1, 3, -1, 0, 2), point(3, 4, -1, 2, 1, 1, -3)}) {
    Filtration f = v_filtration(m.g_amb, 3, pt);
    CHECK(f.dims() == std::vector<std::size_t>{1, 3, 4, 5});
  }
  for (const Point& pt : {point(2, 1, 3, -1, 2, 5, 1), point(1, 2, 2, 1, 1, 1, 1), point(5, -1, 0, 0, 3, 2, 1),
                          point(1, 3, -2, 4, 1, 0, -1), point(2, 0, 1, 1, -2, 7, 2)}) {
    Filtration f = v_filtration(m.g_amb, 3, pt);
    CHECK(lie_fingerprint(f.span(3)).label == "h5");
  }
}

TEST_CASE("filtration spans against the listed endomorphisms") {
  const IModel& m = linear_model();
  Filtration f = v_filtration(m.g_amb, 3, point(2, 1, 3, -1, 2, 5, 1));
  CHECK(span_matches(f, 0, {m.psi[0]}));
  CHECK_FALSE(span_matches(f, 0, {m.psi[1]}));
  CHECK_FALSE(span_matches(f, 1, {m.psi[0], m.psi[1], m.psi[2]}));
  CHECK_FALSE(span_matches(f, 3, m.psi));
  auto fixed = scaled_rho_rows(m.psi, Scalar(Rational(1, 10)));
  CHECK(span_matches(f, 1, {fixed[0], fixed[1], fixed[2]}));
  CHECK(span_matches(f, 2, {fixed[0], fixed[1], fixed[2], fixed[3]}));
  CHECK(span_matches(f, 3, fixed));
  LieBasis alg = LieBasis::generated_by(f.span(3));
  CHECK(alg.dim() == 5);
  CHECK(alg.jacobi());
}

TEST_CASE("filtration for F(q)") {
  Expr q = Expr::coord("q");
  Point pt = point(2, 1, 3, -1, 2, 5, 1);
  Filtration cubic = v_filtration(build_fq_model(q.pow(3)).g_amb, 3, pt);
  CHECK(cubic.dims().back() == 5);
  CHECK(lie_fingerprint(cubic.span(static_cast<int>(cubic.levels().size()) - 1)).label == "h5");
  Filtration flat = v_filtration(build_fq_model(q.pow(2)).g_amb, 3, pt);
  for (auto d : flat.dims()) CHECK(d == 0);
}

TEST_CASE("singular points are rejected") {
  CHECK_THROWS(v_filtration(linear_model().g_amb, 1, point(0, 1, 3, -1, 2, 5, 1)));
  Point missing = point(2, 1, 3, -1, 2, 5, 1);
  missing.erase("rho");
  CHECK_THROWS(v_filtration(linear_model().g_amb, 1, missing));
}

TEST_CASE("listed h5 basis") {
  auto listed = h5_basis();
  CHECK(lie_fingerprint(listed).dim == 7);
  listed[0](5, 4) = Scalar(-1);
  LieFingerprint fp = lie_fingerprint(listed);
  CHECK(fp.dim == 5);
  CHECK(fp.label == "h5");
  CHECK(LieBasis::generated_by(listed).jacobi());
}
