#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g2amb/poly.hpp"

namespace g2a {

// A value outside the supported field, e.g. exp of a nonzero rational or 7^(1/2).
struct InexactValue : std::domain_error {
  using std::domain_error::domain_error;
};

struct Factor {
  Poly p;  // nonconstant, no monomial content, canonically monic
  int mult = 1;
};

struct ExprData {
  Poly num;
  std::vector<Factor> den;  // sorted structurally, distinct
};

// Rational function over atoms: numerator polynomial over a product of primitive factors.
// Values are immutable and always normalized; zero-testing is exact.
class Expr {
 public:
  Expr();
  Expr(int v) : Expr(Scalar(static_cast<long>(v))) {}
  Expr(long v) : Expr(Scalar(v)) {}
  Expr(const Rational& v) : Expr(Scalar(v)) {}
  Expr(const Scalar& s);
  explicit Expr(Poly p);

  static Expr coord(std::string_view name);
  static Expr atom(AtomId a);
  // exp of a Q-linear combination of coordinates; throws std::domain_error otherwise.
  static Expr exp(const Expr& linear);
  static Expr rational(long num, long den) { return Expr(ratio(num, den)); }

  bool is_zero() const { return d_->num.is_zero(); }
  bool is_constant() const { return d_->den.empty() && d_->num.is_constant(); }
  bool is_polynomial() const { return d_->den.empty(); }
  Scalar constant() const;  // throws if not constant
  const Poly& numerator() const { return d_->num; }
  const std::vector<Factor>& denominator() const { return d_->den; }
  const std::shared_ptr<const ExprData>& data() const { return d_; }

  Expr operator-() const;
  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }
  friend Expr operator+(const Expr& a, const Expr& b);
  friend Expr operator-(const Expr& a, const Expr& b);
  friend Expr operator*(const Expr& a, const Expr& b);
  friend Expr operator/(const Expr& a, const Expr& b);
  // Structural equality of normal forms; use is_zero(a - b) for semantic equality.
  friend bool operator==(const Expr& a, const Expr& b);

  Expr inverse() const;
  Expr pow(long n) const;
  // Rational powers extract monomial and scalar parts; other bases become Power atoms.
  Expr pow(const Rational& r) const;

  Expr diff(std::string_view coordinate) const;
  Expr diff(AtomId coordinate) const;
  // Replaces coordinates; function atoms whose argument is replaced by anything but itself throw.
  Expr subs(const std::map<std::string, Expr>& values) const;
  // Replaces every function symbol named `name` (all derivative orders) by `g` and its derivatives.
  Expr subs_function(std::string_view name, const Expr& g) const;

  std::vector<AtomId> atoms() const;  // sorted by content
  bool depends_on(std::string_view coordinate) const;
  bool has_function_atoms() const;
  std::size_t hash() const;
  std::string str() const;

 private:
  explicit Expr(std::shared_ptr<const ExprData> d) : d_(std::move(d)) {}
  friend Expr make_expr(Poly num, std::vector<Factor> num_factors, std::vector<Factor> den, bool cancel);
  std::shared_ptr<const ExprData> d_;
};

bool is_zero(const Expr& e);
std::string to_string(const Poly& p);

// Opaque function of one coordinate, optionally constrained by a rewrite rule
// f^(k) = rule, applied whenever the k-th derivative is produced.
class FunctionSymbol : public std::enable_shared_from_this<FunctionSymbol> {
 public:
  static std::shared_ptr<const FunctionSymbol> make(std::string name, std::string argument);
  // The builder receives the new symbol so the rule may refer to the symbol's lower derivatives.
  static std::shared_ptr<const FunctionSymbol> make_with_rule(
      std::string name, std::string argument, int order,
      const std::function<Expr(const std::shared_ptr<const FunctionSymbol>&)>& builder);

  const std::string& name() const { return name_; }
  const std::string& argument() const { return argument_; }
  std::uint64_t serial() const { return serial_; }
  int rule_order() const { return rule_order_; }  // -1 when unconstrained

  // The k-th derivative as an Expr (an atom below the rule order, rewritten at or above it).
  Expr derivative(int k) const;

 private:
  FunctionSymbol(std::string name, std::string argument);
  std::string name_;
  std::string argument_;
  std::uint64_t serial_;
  int rule_order_ = -1;
  Expr rule_;
  mutable std::mutex cache_mutex_;
  mutable std::map<int, Expr> cache_;
};

using SymbolPtr = std::shared_ptr<const FunctionSymbol>;

}  // namespace g2a
