#pragma once

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "g2amb/atom.hpp"
#include "g2amb/scalar.hpp"

namespace g2a {

// Exponents of monomials are numerators over kRadicalDen, so fractional powers share the integer path.
inline constexpr std::int64_t kExpDen = kRadicalDen;

// Product of atom powers, stored as packed (atom id << 32 | exponent) words sorted by atom id.
class Mono {
 public:
  using Word = std::uint64_t;
  Mono() = default;
  static Mono atom(AtomId a, std::int32_t e);

  static AtomId atom_of(Word w) { return static_cast<AtomId>(w >> 32); }
  static std::int32_t exp_of(Word w) { return static_cast<std::int32_t>(static_cast<std::uint32_t>(w)); }
  static Word pack(AtomId a, std::int32_t e) {
    return (static_cast<Word>(a) << 32) | static_cast<std::uint32_t>(e);
  }

  bool is_one() const { return w_.empty(); }
  std::size_t size() const { return w_.size(); }
  AtomId atom_at(std::size_t i) const { return atom_of(w_[i]); }
  std::int32_t exp_at(std::size_t i) const { return exp_of(w_[i]); }
  std::int32_t exponent(AtomId a) const;
  bool has_power_atoms() const;

  Mono operator*(const Mono& o) const;
  Mono inverse() const;
  Mono without(AtomId a) const;
  Mono with_exponent(AtomId a, std::int32_t e) const;

  // Lexicographic with smaller ids weighing more; compatible with multiplication.
  friend int compare(const Mono& a, const Mono& b);
  friend bool operator==(const Mono& a, const Mono& b) { return a.w_ == b.w_; }
  std::size_t hash() const;

  const auto& words() const { return w_; }

 private:
  boost::container::small_vector<Word, 6> w_;
};

// Order on monomials by atom content rather than id; stable across processes.
int compare_content(const Mono& a, const Mono& b);

struct Term {
  Mono m;
  Scalar c;
};

// Sparse Laurent-Puiseux polynomial; terms sorted by descending monomial order, no zero coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(const Scalar& c);
  static Poly monomial(Mono m, Scalar c);
  static Poly from_terms(std::vector<Term> terms);  // any order, duplicates merged
  static Poly from_sorted(std::vector<Term> terms);  // already descending, distinct, nonzero

  bool is_zero() const { return t_.empty(); }
  bool is_single_term() const { return t_.size() == 1; }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].m.is_one()); }
  std::size_t size() const { return t_.size(); }
  const std::vector<Term>& terms() const { return t_; }
  const Term& leading() const { return t_.front(); }

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const Mono& m, const Scalar& c) const;
  Poly pow(unsigned n) const;
  friend bool operator==(const Poly& a, const Poly& b);
  friend int compare(const Poly& a, const Poly& b);  // structural total order
  std::size_t hash() const;

  // Exact quotient if divisor divides *this in the Laurent ring, otherwise nullopt.
  std::optional<Poly> divide_exact(const Poly& divisor) const;

  // Monomial content: the monomial with per-atom minimal exponent (absent atoms count as 0).
  Mono content() const;
  // Term that is largest in the content order; used to make factors monic canonically.
  const Term& canonical_leading() const;
  bool has_power_atoms() const;

 private:
  std::vector<Term> t_;
};

}  // namespace g2a
