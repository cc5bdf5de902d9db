#include "g2amb/scalar.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace g2a {
namespace {

constexpr std::array<long, 3> kPrimes{2, 3, 5};
constexpr std::size_t kMaxGroupOrder = 2048;

// Product of two radical monomials; the integer overflow of each exponent is folded into coeff.
Radical mul_radical(const Radical& a, const Radical& b, Rational& coeff) {
  Radical r;
  for (int i = 0; i < 3; ++i) {
    long e = a.e[i] + b.e[i];
    if (e >= kRadicalDen) {
      e -= kRadicalDen;
      coeff *= kPrimes[i];
    }
    r.e[i] = e;
  }
  return r;
}

Radical add_mod(const Radical& a, const Radical& b) {
  Radical r;
  for (int i = 0; i < 3; ++i) r.e[i] = (a.e[i] + b.e[i]) % kRadicalDen;
  return r;
}

// Splits a numerator over kRadicalDen into floor part and remainder in [0, D).
std::pair<long, long> split_exponent(long n) {
  long q = n / kRadicalDen;
  long r = n % kRadicalDen;
  if (r < 0) {
    r += kRadicalDen;
    --q;
  }
  return {q, r};
}

Rational prime_power(long p, long k) {
  mpz_class v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k < 0 ? -k : k));
  return k < 0 ? Rational(mpz_class(1), v) : Rational(v);
}

long exponent_numerator(const Rational& e) {
  mpz_class den = e.get_den();
  if (kRadicalDen % den.get_si() != 0 || !den.fits_slong_p())
    throw std::domain_error("radical exponent denominator must divide 27720");
  mpz_class num = e.get_num() * (kRadicalDen / den.get_si());
  if (!num.fits_slong_p()) throw std::domain_error("radical exponent too large");
  return num.get_si();
}

// Strips the factors 2, 3, 5 from n, returning their multiplicities.
std::array<long, 3> strip_primes(mpz_class& n) {
  std::array<long, 3> k{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    while (n != 0 && mpz_divisible_ui_p(n.get_mpz_t(), kPrimes[i])) {
      n /= kPrimes[i];
      ++k[i];
    }
  }
  return k;
}

std::vector<Rational> solve_dense(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = a.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw std::domain_error("singular multiplication matrix");
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) a[col][j] *= inv;
    b[col] *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (std::size_t j = col; j < n; ++j)
        if (a[col][j] != 0) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

Scalar::Scalar(long v) {
  if (v != 0) terms_.emplace_back(Radical{}, Rational(v));
}

Scalar::Scalar(const Rational& v) {
  if (v != 0) terms_.emplace_back(Radical{}, v);
}

Scalar Scalar::radical(const Rational& coeff, const Rational& e2, const Rational& e3,
                       const Rational& e5) {
  if (coeff == 0) return {};
  Rational c = coeff;
  Radical r;
  const std::array<long, 3> n{exponent_numerator(e2), exponent_numerator(e3), exponent_numerator(e5)};
  for (int i = 0; i < 3; ++i) {
    auto [q, rem] = split_exponent(n[i]);
    c *= prime_power(kPrimes[i], q);
    r.e[i] = rem;
  }
  Scalar s;
  s.terms_.emplace_back(r, c);
  return s;
}

Scalar Scalar::from_terms(std::vector<std::pair<Radical, Rational>> t) {
  std::sort(t.begin(), t.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Scalar s;
  for (auto& [r, c] : t) {
    if (!s.terms_.empty() && s.terms_.back().first == r)
      s.terms_.back().second += c;
    else
      s.terms_.emplace_back(r, std::move(c));
    if (s.terms_.back().second == 0) s.terms_.pop_back();
  }
  return s;
}

bool Scalar::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_one());
}

Rational Scalar::rational() const {
  if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
  return terms_.empty() ? Rational(0) : terms_[0].second;
}

void Scalar::add_term(const Radical& r, const Rational& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), r,
                             [](const auto& t, const Radical& key) { return t.first < key; });
  if (it != terms_.end() && it->first == r) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c != 0) {
    terms_.insert(it, {r, c});
  }
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  for (auto& t : s.terms_) t.second = -t.second;
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (terms_.size() == 1 && o.terms_.size() == 1 && terms_[0].first == o.terms_[0].first) {
    terms_[0].second += o.terms_[0].second;
    if (terms_[0].second == 0) terms_.clear();
    return *this;
  }
  for (const auto& [r, c] : o.terms_) add_term(r, c);
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  for (const auto& [r, c] : o.terms_) add_term(r, -c);
  return *this;
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    Rational c = a.terms_[0].second * b.terms_[0].second;
    Radical r = mul_radical(a.terms_[0].first, b.terms_[0].first, c);
    Scalar s;
    s.terms_.emplace_back(r, std::move(c));
    return s;
  }
  std::vector<std::pair<Radical, Rational>> t;
  t.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ra, ca] : a.terms_)
    for (const auto& [rb, cb] : b.terms_) {
      Rational c = ca * cb;
      Radical r = mul_radical(ra, rb, c);
      t.emplace_back(r, std::move(c));
    }
  return Scalar::from_terms(std::move(t));
}

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

Scalar Scalar::inverse() const {
  if (terms_.empty()) throw std::domain_error("division by zero scalar");
  if (terms_.size() == 1) {
    const auto& [r, c] = terms_[0];
    Rational coeff = 1 / c;
    Radical inv;
    for (int i = 0; i < 3; ++i) {
      if (r.e[i] == 0) continue;
      inv.e[i] = kRadicalDen - r.e[i];
      coeff /= kPrimes[i];
    }
    Scalar s;
    s.terms_.emplace_back(inv, coeff);
    return s;
  }
  // Multiplication by *this is a linear map on the span of the group generated by its radicals;
  // the inverse is the preimage of 1.
  std::vector<Radical> group{Radical{}};
  std::map<Radical, std::size_t> index{{Radical{}, 0}};
  for (std::size_t k = 0; k < group.size(); ++k) {
    for (const auto& [r, c] : terms_) {
      Radical h = add_mod(group[k], r);
      if (index.emplace(h, group.size()).second) {
        group.push_back(h);
        if (group.size() > kMaxGroupOrder) throw std::domain_error("radical group too large to invert");
      }
    }
  }
  const std::size_t n = group.size();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& [r, c] : terms_) {
      Rational coeff = c;
      Radical h = mul_radical(r, group[j], coeff);
      m[index.at(h)][j] += coeff;
    }
  std::vector<Rational> rhs(n);
  rhs[0] = 1;
  std::vector<Rational> x = solve_dense(std::move(m), std::move(rhs));
  std::vector<std::pair<Radical, Rational>> t;
  for (std::size_t j = 0; j < n; ++j)
    if (x[j] != 0) t.emplace_back(group[j], x[j]);
  return from_terms(std::move(t));
}

Scalar Scalar::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  Scalar result(1), base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

Scalar Scalar::pow(const Rational& r) const {
  if (r.get_den() == 1) {
    if (!r.get_num().fits_slong_p()) throw std::domain_error("exponent too large");
    return pow(r.get_num().get_si());
  }
  if (terms_.empty()) {
    if (r > 0) return {};
    throw std::domain_error("zero to a non-positive power");
  }
  if (terms_.size() != 1) throw std::domain_error("rational power of a multi-term scalar: " + str());
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw std::domain_error("exponent too large");
  const long m = r.get_num().get_si();
  const long d = r.get_den().get_si();
  const auto& [rad, c] = terms_[0];
  mpz_class num = abs(c.get_num());
  mpz_class den = c.get_den();
  std::array<long, 3> kn = strip_primes(num);
  std::array<long, 3> kd = strip_primes(den);
  int sign_c = sgn(c.get_num());
  if (sign_c < 0) {
    if (d % 2 == 0) throw std::domain_error("even root of a negative scalar");
    if (m % 2 == 0) sign_c = 1;
  }
  mpz_class rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(d)) ||
      !mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(d)))
    throw std::domain_error("root of " + str() + " is not in the radical field");
  Rational coeff = sign_c * Rational(rn, rd);
  coeff = Scalar(coeff).pow(m).rational();
  Radical out;
  for (int i = 0; i < 3; ++i) {
    // exponent numerator of prime i before the power, then times m/d
    mpz_class e = mpz_class(kn[i] - kd[i]) * kRadicalDen + rad.e[i];
    e *= m;
    if (!mpz_divisible_ui_p(e.get_mpz_t(), static_cast<unsigned long>(d)))
      throw std::domain_error("root of " + str() + " needs an exponent denominator outside 27720");
    e /= d;
    if (!e.fits_slong_p()) throw std::domain_error("exponent too large");
    auto [q, rem] = split_exponent(e.get_si());
    coeff *= prime_power(kPrimes[i], q);
    out.e[i] = rem;
  }
  Scalar s;
  s.terms_.emplace_back(out, coeff);
  return s;
}

int Scalar::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_[0].second);
  constexpr mpfr_prec_t prec = 1024;
  mpfr_t sum, term, base, ex;
  mpfr_inits2(prec, sum, term, base, ex, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_zero(sum, 1);
  for (const auto& [r, c] : terms_) {
    mpfr_set_q(term, c.get_mpq_t(), MPFR_RNDN);
    for (int i = 0; i < 3; ++i) {
      if (r.e[i] == 0) continue;
      mpfr_set_ui(base, static_cast<unsigned long>(kPrimes[i]), MPFR_RNDN);
      mpfr_set_si(ex, r.e[i], MPFR_RNDN);
      mpfr_div_si(ex, ex, kRadicalDen, MPFR_RNDN);
      mpfr_pow(base, base, ex, MPFR_RNDN);
      mpfr_mul(term, term, base, MPFR_RNDN);
    }
    mpfr_add(sum, sum, term, MPFR_RNDN);
  }
  int s = mpfr_sgn(sum);
  mpfr_clears(sum, term, base, ex, static_cast<mpfr_ptr>(nullptr));
  if (s == 0) throw std::logic_error("nonzero scalar evaluated to zero");
  return s > 0 ? 1 : -1;
}

double Scalar::to_double() const {
  double v = 0;
  for (const auto& [r, c] : terms_) {
    double t = c.get_d();
    for (int i = 0; i < 3; ++i)
      if (r.e[i] != 0) t *= std::pow(static_cast<double>(kPrimes[i]), static_cast<double>(r.e[i]) / kRadicalDen);
    v += t;
  }
  return v;
}

std::size_t Scalar::hash() const {
  std::size_t h = terms_.size();
  for (const auto& [r, c] : terms_) {
    for (long e : r.e) h = h * 1000003u ^ static_cast<std::size_t>(e);
    h = h * 1000003u ^ mpz_get_ui(c.get_num_mpz_t());
    h = h * 1000003u ^ mpz_get_ui(c.get_den_mpz_t());
  }
  return h;
}

int Scalar::compare(const Scalar& o) const {
  const std::size_t n = std::min(terms_.size(), o.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (terms_[i].first != o.terms_[i].first) return terms_[i].first < o.terms_[i].first ? -1 : 1;
    int c = cmp(terms_[i].second, o.terms_[i].second);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  if (terms_.size() == o.terms_.size()) return 0;
  return terms_.size() < o.terms_.size() ? -1 : 1;
}

namespace {

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + q.get_str() + ")";
}

std::string term_str(const Radical& r, const Rational& c) {
  std::string rad;
  for (int i = 0; i < 3; ++i) {
    if (r.e[i] == 0) continue;
    if (!rad.empty()) rad += "*";
    rad += std::to_string(kPrimes[i]) + "^(" + ratio(r.e[i], kRadicalDen).get_str() + ")";
  }
  if (rad.empty()) return c.get_den() == 1 ? c.get_num().get_str() : c.get_str();
  if (c == 1) return rad;
  if (c == -1) return "-" + rad;
  if (c < 0) return "-" + rational_str(-c) + "*" + rad;
  return rational_str(c) + "*" + rad;
}

}  // namespace

std::string Scalar::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    std::string t = term_str(terms_[i].first, terms_[i].second);
    if (i == 0)
      s = t;
    else if (t[0] == '-')
      s += " - " + t.substr(1);
    else
      s += " + " + t;
  }
  return s;
}

bool is_zero(const Scalar& s) { return s.is_zero(); }

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace g2a
