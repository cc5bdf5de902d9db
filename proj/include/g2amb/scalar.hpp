#pragma once

#include <gmpxx.h>

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace g2a {

using Rational = mpq_class;

// Radical exponents are stored as numerators over this denominator (lcm of 1..12).
inline constexpr long kRadicalDen = 27720;

// 2^(e[0]/D) * 3^(e[1]/D) * 5^(e[2]/D) with every e[i] in [0, D).
struct Radical {
  std::array<long, 3> e{0, 0, 0};
  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0; }
  auto operator<=>(const Radical&) const = default;
};

// Element of the field Q(2^(1/D), 3^(1/D), 5^(1/D)) restricted to denominators dividing D.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v);
  Scalar(const Rational& v);

  // coeff * 2^e2 * 3^e3 * 5^e5; throws std::domain_error if an exponent denominator does not divide D.
  static Scalar radical(const Rational& coeff, const Rational& e2, const Rational& e3,
                        const Rational& e5);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  bool is_single_term() const { return terms_.size() == 1; }
  Rational rational() const;  // throws if not rational
  const std::vector<std::pair<Radical, Rational>>& terms() const { return terms_; }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.terms_ == b.terms_; }

  Scalar inverse() const;  // throws std::domain_error on zero
  Scalar pow(long n) const;
  // Rational power of a single-term value; throws std::domain_error when the result
  // leaves the field (or is not real).
  Scalar pow(const Rational& r) const;

  int sign() const;  // -1, 0, 1 using high-precision evaluation
  double to_double() const;
  std::size_t hash() const;
  int compare(const Scalar& o) const;  // structural total order
  std::string str() const;

 private:
  void add_term(const Radical& r, const Rational& c);
  static Scalar from_terms(std::vector<std::pair<Radical, Rational>> t);
  std::vector<std::pair<Radical, Rational>> terms_;  // sorted by radical, nonzero coefficients
};

bool is_zero(const Scalar& s);

// num/den in lowest terms.
Rational ratio(long num, long den);

}  // namespace g2a
