#include <cmath>
#include <random>

#include "doctest.h"
#include "g2amb/scalar.hpp"

using namespace g2a;

namespace {

Scalar rad(long c, long a2, long b2, long a3 = 0, long b3 = 1, long a5 = 0, long b5 = 1) {
  return Scalar::radical(Rational(c), Rational(a2, b2), Rational(a3, b3), Rational(a5, b5));
}

}  // namespace

TEST_CASE("square root of two squares to two") {
  Scalar s = rad(1, 1, 2);
  CHECK(s * s == Scalar(2));
  CHECK((s * s - Scalar(2)).is_zero());
}

TEST_CASE("product of square roots folds into one radical") {
  Scalar six = Scalar::radical(1, Rational(1, 2), Rational(1, 2), 0);
  CHECK(rad(1, 1, 2) * rad(1, 0, 1, 1, 2) == six);
  CHECK(std::abs(six.to_double() - std::sqrt(6.0)) < 1e-12);
}

TEST_CASE("integer parts of exponents fold into the coefficient") {
  Scalar s = Scalar::radical(1, Rational(7, 2), 0, 0);
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms()[0].second == 8);
  CHECK(std::abs(s.to_double() - std::pow(2.0, 3.5)) < 1e-9);
  Scalar neg = Scalar::radical(1, Rational(-5, 6), Rational(-1, 3), 0);
  CHECK(std::abs(neg.to_double() - std::pow(2.0, -5.0 / 6) * std::pow(3.0, -1.0 / 3)) < 1e-12);
}

TEST_CASE("exponent denominators outside the supported set are rejected") {
  CHECK_THROWS_AS(Scalar::radical(1, Rational(1, 13), 0, 0), std::domain_error);
}

TEST_CASE("multi-term inverse") {
  Scalar a = Scalar(1) + rad(1, 1, 2);
  CHECK(a * a.inverse() == Scalar(1));
  Scalar b = rad(2, 1, 3) - rad(1, 0, 1, 1, 2) + Scalar(Rational(3, 7)) + rad(1, 0, 1, 0, 1, 1, 4);
  Scalar bi = b.inverse();
  CHECK(b * bi == Scalar(1));
  CHECK(std::abs(bi.to_double() - 1 / b.to_double()) < 1e-12);
}

TEST_CASE("rational powers of single terms") {
  CHECK(Scalar(8).pow(Rational(1, 3)) == Scalar(2));
  CHECK(Scalar(Rational(4, 9)).pow(Rational(-1, 2)) == Scalar(Rational(3, 2)));
  CHECK(Scalar(2).pow(Rational(1, 2)) == rad(1, 1, 2));
  CHECK(Scalar(-27).pow(Rational(1, 3)) == Scalar(-3));
  CHECK_THROWS_AS(Scalar(-1).pow(Rational(1, 2)), std::domain_error);
  CHECK_THROWS_AS(Scalar(7).pow(Rational(1, 2)), std::domain_error);
  Scalar c = rad(1, -5, 6, -1, 3);
  CHECK(c.pow(6) == Scalar(Rational(1, 288)));
}

TEST_CASE("sign of radical sums") {
  CHECK((rad(1, 1, 2) - Scalar(Rational(141, 100))).sign() == 1);
  CHECK((rad(1, 1, 2) - Scalar(Rational(142, 100))).sign() == -1);
  CHECK(Scalar().sign() == 0);
}

TEST_CASE("ring laws on random radicals match float evaluation") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9), num(0, 11), den(1, 12);
  auto random_scalar = [&] {
    Scalar s;
    for (int i = 0; i < 3; ++i) s += rad(coef(rng), num(rng), den(rng), num(rng), den(rng), num(rng), den(rng));
    return s;
  };
  for (int trial = 0; trial < 30; ++trial) {
    Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    double ref = a.to_double() * (b.to_double() + c.to_double());
    CHECK(std::abs((a * (b + c)).to_double() - ref) <= 1e-12 * std::max(1.0, std::abs(ref)));
  }
}

TEST_CASE("printing") {
  CHECK(Scalar(Rational(-3, 4)).str() == "-3/4");
  CHECK(rad(1, 1, 2).str() == "2^(1/2)");
  CHECK((Scalar(1) + rad(-2, 1, 2)).str() == "1 - 2*2^(1/2)");
}
