#include "g2amb/expr.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <stdexcept>

namespace g2a {
namespace {

const std::shared_ptr<const ExprData>& zero_data() {
  static const auto z = std::make_shared<const ExprData>();
  return z;
}

struct ContentSplit {
  Scalar c;
  Mono m;
  Poly prim;  // 1 when the input is a single term
};

// p = c * m * prim with prim free of monomial content and canonically monic.
ContentSplit split_content(const Poly& p) {
  if (p.is_single_term()) return {p.leading().c, p.leading().m, Poly(Scalar(1))};
  Mono m = p.content();
  Poly q = p.scaled(m.inverse(), Scalar(1));
  Scalar c = q.canonical_leading().c;
  return {c, m, q.scaled(Mono{}, c.inverse())};
}

bool factor_less(const Factor& a, const Factor& b) { return compare(a.p, b.p) < 0; }

std::vector<Factor> merge_factors(std::vector<Factor> fs) {
  std::sort(fs.begin(), fs.end(), factor_less);
  std::vector<Factor> out;
  for (auto& f : fs) {
    if (!out.empty() && out.back().p == f.p)
      out.back().mult += f.mult;
    else
      out.push_back(std::move(f));
  }
  out.erase(std::remove_if(out.begin(), out.end(), [](const Factor& f) { return f.mult == 0; }), out.end());
  return out;
}

Poly expand(const std::vector<Factor>& fs) {
  Poly r(Scalar(1));
  for (const auto& f : fs) r = r * f.p.pow(static_cast<unsigned>(f.mult));
  return r;
}

// Splits a monic primitive polynomial by trial division against known factors.
std::vector<Factor> split_known(Poly p, const std::vector<const std::vector<Factor>*>& known) {
  std::vector<Factor> out;
  for (const auto* list : known)
    for (const auto& f : *list) {
      if (p.is_constant()) break;
      int k = 0;
      while (!p.is_constant()) {
        auto q = p.divide_exact(f.p);
        if (!q) break;
        p = std::move(*q);
        ++k;
      }
      if (k > 0) out.push_back({f.p, k});
    }
  if (!p.is_constant()) out.push_back({std::move(p), 1});
  return out;
}

std::string rational_exponent(std::int64_t n) {
  Rational e = ratio(n, kExpDen);
  if (e == 1) return "";
  if (e.get_den() == 1) return e > 0 ? "^" + e.get_str() : "^(" + e.get_str() + ")";
  return "^(" + e.get_str() + ")";
}

std::string atom_str(AtomId a) {
  const AtomInfo& info = atom_info(a);
  switch (info.kind) {
    case AtomKind::Coordinate:
      return info.name;
    case AtomKind::Function:
      return info.name + std::string(static_cast<std::size_t>(info.order), '\'');
    case AtomKind::Exp:
      return "exp(" + info.name + ")";
    case AtomKind::Power:
      return "(" + to_string(info.base->num) + ")";
  }
  return "?";
}

std::string term_str(const Term& t) {
  std::vector<std::pair<AtomId, std::int32_t>> fs;
  for (std::size_t i = 0; i < t.m.size(); ++i) fs.emplace_back(t.m.atom_at(i), t.m.exp_at(i));
  std::sort(fs.begin(), fs.end(), [](const auto& u, const auto& v) { return compare_atoms(u.first, v.first) < 0; });
  std::string mono;
  for (const auto& [a, e] : fs) {
    if (!mono.empty()) mono += "*";
    mono += atom_str(a) + rational_exponent(e);
  }
  std::string coeff;
  if (t.c.is_rational()) {
    Rational q = t.c.rational();
    if (mono.empty()) return q.get_str();
    if (q == 1) return mono;
    if (q == -1) return "-" + mono;
    Rational aq = abs(q);
    coeff = (q < 0 ? "-" : "") + (aq.get_den() == 1 ? aq.get_str() : "(" + aq.get_str() + ")");
  } else if (t.c.is_single_term()) {
    coeff = t.c.str();
    if (mono.empty()) return coeff;
  } else {
    coeff = "(" + t.c.str() + ")";
    if (mono.empty()) return coeff;
  }
  return coeff + "*" + mono;
}

std::atomic<std::uint64_t> g_symbol_serial{1};

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::vector<const Term*> ts;
  for (const auto& t : p.terms()) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](const Term* a, const Term* b) { return compare_content(a->m, b->m) > 0; });
  std::string s;
  for (const Term* t : ts) {
    std::string x = term_str(*t);
    if (s.empty())
      s = x;
    else if (x[0] == '-')
      s += " - " + x.substr(1);
    else
      s += " + " + x;
  }
  return s;
}

Expr make_expr(Poly num, std::vector<Factor> num_factors, std::vector<Factor> den, bool cancel) {
  if (num.is_zero()) return Expr();
  den = merge_factors(std::move(den));
  if (!num_factors.empty()) {
    num_factors = merge_factors(std::move(num_factors));
    for (auto& nf : num_factors) {
      auto it = std::lower_bound(den.begin(), den.end(), nf, factor_less);
      if (it != den.end() && it->p == nf.p) {
        int k = std::min(nf.mult, it->mult);
        nf.mult -= k;
        it->mult -= k;
      }
    }
    den.erase(std::remove_if(den.begin(), den.end(), [](const Factor& f) { return f.mult == 0; }), den.end());
    num = num * expand(num_factors);
  }
  if (cancel && !num.is_single_term()) {
    for (auto& f : den) {
      while (f.mult > 0) {
        auto q = num.divide_exact(f.p);
        if (!q) break;
        num = std::move(*q);
        --f.mult;
      }
    }
    den.erase(std::remove_if(den.begin(), den.end(), [](const Factor& f) { return f.mult == 0; }), den.end());
  }
  if (num.has_power_atoms()) {
    bool out_of_range = false;
    for (const auto& t : num.terms())
      for (std::size_t i = 0; i < t.m.size(); ++i)
        if ((t.m.atom_at(i) & kPowerAtomBit) && (t.m.exp_at(i) < 0 || t.m.exp_at(i) >= kExpDen))
          out_of_range = true;
    if (out_of_range) {
      // B^(n/D) with n outside [0, D) becomes B^k * B^(r/D)
      Expr sum;
      for (const auto& t : num.terms()) {
        Mono kept;
        Expr extra(1);
        for (std::size_t i = 0; i < t.m.size(); ++i) {
          AtomId a = t.m.atom_at(i);
          std::int32_t e = t.m.exp_at(i);
          if ((a & kPowerAtomBit) && (e < 0 || e >= kExpDen)) {
            std::int32_t k = e / static_cast<std::int32_t>(kExpDen);
            std::int32_t r = e % static_cast<std::int32_t>(kExpDen);
            if (r < 0) {
              r += static_cast<std::int32_t>(kExpDen);
              --k;
            }
            kept = kept * Mono::atom(a, r);
            Poly base = atom_info(a).base->num;
            extra *= k >= 0 ? Expr(base.pow(static_cast<unsigned>(k)))
                            : make_expr(Poly(Scalar(1)), {}, {{base, -k}}, false);
          } else {
            kept = kept * Mono::atom(a, e);
          }
        }
        sum += Expr(Poly::monomial(kept, t.c)) * extra;
      }
      return sum * make_expr(Poly(Scalar(1)), {}, std::move(den), false);
    }
  }
  auto d = std::make_shared<ExprData>();
  d->num = std::move(num);
  d->den = std::move(den);
  return Expr(std::shared_ptr<const ExprData>(std::move(d)));
}

Expr::Expr() : d_(zero_data()) {}

Expr::Expr(const Scalar& s) : Expr() {
  if (!s.is_zero()) {
    auto d = std::make_shared<ExprData>();
    d->num = Poly(s);
    d_ = std::move(d);
  }
}

Expr::Expr(Poly p) : Expr() { *this = make_expr(std::move(p), {}, {}, false); }

Expr Expr::coord(std::string_view name) { return atom(coordinate_atom(name)); }

Expr Expr::atom(AtomId a) { return Expr(Poly::monomial(Mono::atom(a, static_cast<std::int32_t>(kExpDen)), Scalar(1))); }

Expr Expr::exp(const Expr& linear) {
  if (!linear.is_polynomial()) throw InexactValue("exp argument must be linear in coordinates");
  Mono m;
  for (const auto& t : linear.numerator().terms()) {
    if (t.m.size() != 1 || t.m.exp_at(0) != kExpDen ||
        atom_info(t.m.atom_at(0)).kind != AtomKind::Coordinate || !t.c.is_rational())
      throw InexactValue("exp argument must be a rational linear combination of coordinates: " + linear.str());
    Rational c = t.c.rational() * kExpDen;
    if (c.get_den() != 1 || !c.get_num().fits_sint_p())
      throw InexactValue("exp coefficient denominator must divide 27720");
    m = m * Mono::atom(exp_atom(atom_info(t.m.atom_at(0)).name), static_cast<std::int32_t>(c.get_num().get_si()));
  }
  return Expr(Poly::monomial(m, Scalar(1)));
}

Scalar Expr::constant() const {
  if (!is_constant()) throw std::domain_error("expression is not constant: " + str());
  return d_->num.is_zero() ? Scalar() : d_->num.leading().c;
}

Expr Expr::operator-() const {
  if (is_zero()) return *this;
  auto d = std::make_shared<ExprData>(*d_);
  d->num = -d->num;
  return Expr(std::shared_ptr<const ExprData>(std::move(d)));
}

namespace {

Expr add_sub(const Expr& a, const Expr& b, bool subtract) {
  if (b.is_zero()) return a;
  if (a.is_zero()) return subtract ? -b : b;
  if (a.denominator().empty() && b.denominator().empty())
    return Expr(subtract ? a.numerator() - b.numerator() : a.numerator() + b.numerator());
  // common denominator: per-factor maximum multiplicity
  std::vector<Factor> lcm;
  std::vector<Factor> fa = a.denominator(), fb = b.denominator();
  std::vector<Factor> extra_a, extra_b;  // factors missing from each side
  std::size_t i = 0, j = 0;
  while (i < fa.size() || j < fb.size()) {
    int c = i == fa.size() ? 1 : j == fb.size() ? -1 : compare(fa[i].p, fb[j].p);
    if (c < 0) {
      lcm.push_back(fa[i]);
      extra_b.push_back(fa[i]);
      ++i;
    } else if (c > 0) {
      lcm.push_back(fb[j]);
      extra_a.push_back(fb[j]);
      ++j;
    } else {
      int m = std::max(fa[i].mult, fb[j].mult);
      lcm.push_back({fa[i].p, m});
      if (m > fa[i].mult) extra_a.push_back({fa[i].p, m - fa[i].mult});
      if (m > fb[j].mult) extra_b.push_back({fb[j].p, m - fb[j].mult});
      ++i;
      ++j;
    }
  }
  Poly na = a.numerator() * expand(extra_a);
  Poly nb = b.numerator() * expand(extra_b);
  return make_expr(subtract ? na - nb : na + nb, {}, std::move(lcm), true);
}

}  // namespace

Expr operator+(const Expr& a, const Expr& b) { return add_sub(a, b, false); }
Expr operator-(const Expr& a, const Expr& b) { return add_sub(a, b, true); }

Expr operator*(const Expr& a, const Expr& b) {
  if (a.is_zero() || b.is_zero()) return Expr();
  if (a.denominator().empty() && b.denominator().empty()) return Expr(a.numerator() * b.numerator());
  std::vector<Factor> den = a.denominator();
  den.insert(den.end(), b.denominator().begin(), b.denominator().end());
  return make_expr(a.numerator() * b.numerator(), {}, std::move(den), true);
}

Expr operator/(const Expr& a, const Expr& b) {
  if (b.is_zero()) throw std::domain_error("division by zero expression");
  if (a.is_zero()) return Expr();
  ContentSplit s = split_content(b.numerator());
  Poly num = a.numerator().scaled(s.m.inverse(), s.c.inverse());
  std::vector<Factor> den = a.denominator();
  bool cancel = false;
  if (!s.prim.is_constant()) {
    auto parts = split_known(s.prim, {&a.denominator()});
    den.insert(den.end(), parts.begin(), parts.end());
    cancel = true;
  }
  return make_expr(std::move(num), b.denominator(), std::move(den), cancel || !b.denominator().empty());
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.d_ == b.d_) return true;
  if (!(a.d_->num == b.d_->num) || a.d_->den.size() != b.d_->den.size()) return false;
  for (std::size_t i = 0; i < a.d_->den.size(); ++i)
    if (a.d_->den[i].mult != b.d_->den[i].mult || !(a.d_->den[i].p == b.d_->den[i].p)) return false;
  return true;
}

Expr Expr::inverse() const { return Expr(1) / *this; }

Expr Expr::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  if (n == 0) return Expr(1);
  if (d_->den.empty()) return Expr(d_->num.pow(static_cast<unsigned>(n)));
  std::vector<Factor> den = d_->den;
  for (auto& f : den) f.mult *= static_cast<int>(n);
  return make_expr(d_->num.pow(static_cast<unsigned>(n)), {}, std::move(den), false);
}

Expr Expr::pow(const Rational& r) const {
  if (r.get_den() == 1) {
    if (!r.get_num().fits_slong_p()) throw std::domain_error("exponent too large");
    return pow(r.get_num().get_si());
  }
  if (is_zero()) {
    if (r > 0) return Expr();
    throw std::domain_error("zero to a negative power");
  }
  auto scaled_exponent = [&](std::int64_t n) {
    Rational e = Rational(n) * r;
    if (e.get_den() != 1 || !e.get_num().fits_sint_p())
      throw InexactValue("power exponent leaves the supported denominators: " + str());
    return static_cast<std::int32_t>(e.get_num().get_si());
  };
  auto power_of_poly = [&](const Poly& base, std::int64_t mult) {
    AtomId a = power_atom(Expr(base).data());
    return Expr(Poly::monomial(Mono::atom(a, scaled_exponent(mult * kExpDen)), Scalar(1)));
  };
  ContentSplit s = split_content(d_->num);
  Mono m;
  for (std::size_t i = 0; i < s.m.size(); ++i) m = m * Mono::atom(s.m.atom_at(i), scaled_exponent(s.m.exp_at(i)));
  Expr result(Poly::monomial(m, s.c.pow(r)));
  if (!s.prim.is_constant()) result *= power_of_poly(s.prim, 1);
  for (const auto& f : d_->den) result *= power_of_poly(f.p, -f.mult);
  return result;
}

Expr Expr::diff(std::string_view coordinate) const { return diff(coordinate_atom(coordinate)); }

Expr Expr::diff(AtomId v) const {
  if (is_zero()) return *this;
  const std::string& vname = atom_info(v).name;
  std::vector<std::pair<AtomId, Expr>> cache;
  auto atom_derivative = [&](AtomId a) -> const Expr& {
    for (const auto& [b, e] : cache)
      if (b == a) return e;
    const AtomInfo& info = atom_info(a);
    Expr d;
    switch (info.kind) {
      case AtomKind::Coordinate:
        if (a == v) d = Expr(1);
        break;
      case AtomKind::Function:
        if (info.symbol->argument() == vname) d = info.symbol->derivative(info.order + 1);
        break;
      case AtomKind::Exp:
        if (info.name == vname) d = Expr::atom(a);
        break;
      case AtomKind::Power:
        d = Expr(info.base->num).diff(v);
        break;
    }
    cache.emplace_back(a, std::move(d));
    return cache.back().second;
  };
  std::vector<Term> poly_part;
  Expr rational_part;
  for (const auto& t : d_->num.terms()) {
    for (std::size_t i = 0; i < t.m.size(); ++i) {
      AtomId a = t.m.atom_at(i);
      const Expr& da = atom_derivative(a);
      if (da.is_zero()) continue;
      std::int32_t e = t.m.exp_at(i);
      Scalar c = t.c * Scalar(ratio(e, kExpDen));
      Mono rest = t.m.with_exponent(a, e - static_cast<std::int32_t>(kExpDen));
      if (da.is_polynomial()) {
        for (const auto& u : da.numerator().terms()) poly_part.push_back({rest * u.m, c * u.c});
      } else {
        rational_part += Expr(Poly::monomial(rest, c)) * da;
      }
    }
  }
  Expr dnum = Expr(Poly::from_terms(std::move(poly_part))) + rational_part;
  if (d_->den.empty()) return dnum;
  // quotient rule against the factored denominator
  Expr den_expr = make_expr(Poly(Scalar(1)), {}, d_->den, false).inverse();
  Expr log_derivative;
  for (const auto& f : d_->den) {
    Expr fp = Expr(f.p).diff(v);
    if (fp.is_zero()) continue;
    log_derivative += Expr(static_cast<long>(f.mult)) * fp / Expr(f.p);
  }
  return dnum / den_expr - *this * log_derivative;
}

Expr Expr::subs(const std::map<std::string, Expr>& values) const {
  if (is_zero() || values.empty()) return *this;
  std::vector<std::pair<AtomId, std::optional<Expr>>> cache;
  // nullopt: atom unchanged
  auto replacement = [&](AtomId a) -> const std::optional<Expr>& {
    for (const auto& [b, e] : cache)
      if (b == a) return e;
    const AtomInfo& info = atom_info(a);
    std::optional<Expr> r;
    switch (info.kind) {
      case AtomKind::Coordinate:
        if (auto it = values.find(info.name); it != values.end()) r = it->second;
        break;
      case AtomKind::Function:
        if (auto it = values.find(info.symbol->argument()); it != values.end()) {
          if (!(it->second == Expr::coord(info.symbol->argument())))
            throw std::domain_error("function symbol " + info.name + " is not specialized before substituting " +
                                    info.symbol->argument());
        }
        break;
      case AtomKind::Exp:
        if (auto it = values.find(info.name); it != values.end()) r = Expr::exp(it->second);
        break;
      case AtomKind::Power: {
        Expr b(info.base->num);
        Expr sb = b.subs(values);
        if (!(sb == b)) r = sb;
        break;
      }
    }
    cache.emplace_back(a, std::move(r));
    return cache.back().second;
  };
  auto subs_poly = [&](const Poly& p) {
    Expr sum;
    std::vector<Term> unchanged;
    for (const auto& t : p.terms()) {
      Mono kept;
      Expr factor(1);
      bool changed = false;
      for (std::size_t i = 0; i < t.m.size(); ++i) {
        AtomId a = t.m.atom_at(i);
        const auto& r = replacement(a);
        if (!r) {
          kept = kept * Mono::atom(a, t.m.exp_at(i));
        } else {
          changed = true;
          factor *= r->pow(ratio(t.m.exp_at(i), kExpDen));
        }
      }
      if (!changed)
        unchanged.push_back(t);
      else
        sum += Expr(Poly::monomial(kept, t.c)) * factor;
    }
    return sum + Expr(Poly::from_terms(std::move(unchanged)));
  };
  Expr result = subs_poly(d_->num);
  for (const auto& f : d_->den) result /= subs_poly(f.p).pow(static_cast<long>(f.mult));
  return result;
}

Expr Expr::subs_function(std::string_view name, const Expr& g) const {
  if (is_zero()) return *this;
  std::map<AtomId, std::optional<Expr>> cache;
  auto replacement = [&](AtomId a) -> const std::optional<Expr>& {
    if (auto it = cache.find(a); it != cache.end()) return it->second;
    const AtomInfo& info = atom_info(a);
    std::optional<Expr> r;
    if (info.kind == AtomKind::Function && info.name == name) {
      Expr d = g;
      for (int k = 0; k < info.order; ++k) d = d.diff(info.symbol->argument());
      r = d;
    } else if (info.kind == AtomKind::Power) {
      Expr b(info.base->num);
      Expr sb = b.subs_function(name, g);
      if (!(sb == b)) r = sb;
    }
    return cache.emplace(a, std::move(r)).first->second;
  };
  auto subs_poly = [&](const Poly& p) {
    Expr sum;
    std::vector<Term> unchanged;
    for (const auto& t : p.terms()) {
      Mono kept;
      Expr factor(1);
      bool changed = false;
      for (std::size_t i = 0; i < t.m.size(); ++i) {
        AtomId a = t.m.atom_at(i);
        const auto& r = replacement(a);
        if (!r) {
          kept = kept * Mono::atom(a, t.m.exp_at(i));
        } else {
          changed = true;
          factor *= r->pow(ratio(t.m.exp_at(i), kExpDen));
        }
      }
      if (!changed)
        unchanged.push_back(t);
      else
        sum += Expr(Poly::monomial(kept, t.c)) * factor;
    }
    return sum + Expr(Poly::from_terms(std::move(unchanged)));
  };
  Expr result = subs_poly(d_->num);
  for (const auto& f : d_->den) result /= subs_poly(f.p).pow(static_cast<long>(f.mult));
  return result;
}

std::vector<AtomId> Expr::atoms() const {
  std::set<AtomId> s;
  auto collect = [&](const Poly& p) {
    for (const auto& t : p.terms())
      for (std::size_t i = 0; i < t.m.size(); ++i) s.insert(t.m.atom_at(i));
  };
  collect(d_->num);
  for (const auto& f : d_->den) collect(f.p);
  std::vector<AtomId> v(s.begin(), s.end());
  std::sort(v.begin(), v.end(), [](AtomId a, AtomId b) { return compare_atoms(a, b) < 0; });
  return v;
}

bool Expr::depends_on(std::string_view coordinate) const {
  for (AtomId a : atoms()) {
    const AtomInfo& info = atom_info(a);
    switch (info.kind) {
      case AtomKind::Coordinate:
      case AtomKind::Exp:
        if (info.name == coordinate) return true;
        break;
      case AtomKind::Function:
        if (info.symbol->argument() == coordinate) return true;
        break;
      case AtomKind::Power:
        if (Expr(info.base->num).depends_on(coordinate)) return true;
        break;
    }
  }
  return false;
}

bool Expr::has_function_atoms() const {
  for (AtomId a : atoms()) {
    const AtomInfo& info = atom_info(a);
    if (info.kind == AtomKind::Function) return true;
    if (info.kind == AtomKind::Power && Expr(info.base->num).has_function_atoms()) return true;
  }
  return false;
}

std::size_t Expr::hash() const {
  std::size_t h = d_->num.hash();
  for (const auto& f : d_->den) h = h * 31u + f.p.hash() + static_cast<std::size_t>(f.mult);
  return h;
}

std::string Expr::str() const {
  if (d_->den.empty()) return to_string(d_->num);
  std::vector<std::string> fs;
  for (const auto& f : d_->den) {
    std::string s = "(" + to_string(f.p) + ")";
    if (f.mult != 1) s += "^" + std::to_string(f.mult);
    fs.push_back(std::move(s));
  }
  std::sort(fs.begin(), fs.end());
  std::string den;
  for (const auto& s : fs) den += (den.empty() ? "" : "*") + s;
  return "(" + to_string(d_->num) + ")/(" + den + ")";
}

bool is_zero(const Expr& e) { return e.is_zero(); }

FunctionSymbol::FunctionSymbol(std::string name, std::string argument)
    : name_(std::move(name)), argument_(std::move(argument)), serial_(g_symbol_serial.fetch_add(1)) {}

SymbolPtr FunctionSymbol::make(std::string name, std::string argument) {
  return SymbolPtr(new FunctionSymbol(std::move(name), std::move(argument)));
}

SymbolPtr FunctionSymbol::make_with_rule(std::string name, std::string argument, int order,
                                         const std::function<Expr(const SymbolPtr&)>& builder) {
  if (order < 1) throw std::invalid_argument("rewrite rule order must be positive");
  std::shared_ptr<FunctionSymbol> s(new FunctionSymbol(std::move(name), std::move(argument)));
  Expr rule = builder(s);
  for (AtomId a : rule.atoms()) {
    const AtomInfo& info = atom_info(a);
    if (info.kind == AtomKind::Function && info.symbol.get() == s.get() && info.order >= order)
      throw std::invalid_argument("rewrite rule for " + s->name_ + " refers to its own order >= rule order");
  }
  s->rule_ = std::move(rule);
  s->rule_order_ = order;
  return s;
}

Expr FunctionSymbol::derivative(int k) const {
  if (k < 0) throw std::invalid_argument("negative derivative order");
  if (rule_order_ < 0 || k < rule_order_) return Expr::atom(function_atom(shared_from_this(), k));
  if (k == rule_order_) return rule_;
  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = cache_.find(k); it != cache_.end()) return it->second;
  }
  Expr d = derivative(k - 1).diff(argument_);
  std::lock_guard lock(cache_mutex_);
  return cache_.emplace(k, std::move(d)).first->second;
}

}  // namespace g2a
