#include "g2amb/planefield.hpp"

#include <algorithm>
#include <stdexcept>

#include "g2amb/models.hpp"

namespace g2a {

namespace {

using UPoly = std::vector<Scalar>;  // coefficients, lowest degree first, no trailing zeros

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Scalar(static_cast<long>(i)) * p[i]);
  trim(d);
  return d;
}

UPoly remainder(UPoly a, const UPoly& b) {
  const Scalar lead = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    const Scalar f = a.back() * lead;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

UPoly quotient(UPoly a, const UPoly& b) {
  const Scalar lead = b.back().inverse();
  UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (!a.empty() && a.size() >= b.size()) {
    const Scalar f = a.back() * lead;
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

// Multiplicities of the roots of p (Yun's square-free decomposition).
std::vector<int> multiplicities(const UPoly& p) {
  std::vector<int> out;
  if (degree(p) < 1) return out;
  UPoly a = gcd(p, derivative(p));
  UPoly b = quotient(p, a);
  UPoly c = quotient(derivative(p), a);
  UPoly bp = derivative(b);
  UPoly d = c;
  for (std::size_t k = 0; k < d.size(); ++k) d[k] -= k < bp.size() ? bp[k] : Scalar();
  for (std::size_t k = d.size(); k < bp.size(); ++k) d.push_back(-bp[k]);
  trim(d);
  for (int i = 1; degree(b) > 0; ++i) {
    UPoly g = gcd(b, d);
    for (int k = 0; k < degree(g); ++k) out.push_back(i);
    b = quotient(b, g);
    UPoly c2 = quotient(d, g);
    UPoly b2 = derivative(b);
    d = c2;
    for (std::size_t k = 0; k < d.size(); ++k) d[k] -= k < b2.size() ? b2[k] : Scalar();
    for (std::size_t k = d.size(); k < b2.size(); ++k) d.push_back(-b2[k]);
    trim(d);
  }
  return out;
}

}  // namespace

PlaneField::PlaneField(Chart chart, std::vector<VectorField> span, std::vector<Form> annihilator)
    : chart_(std::move(chart)), span_(std::move(span)), ann_(std::move(annihilator)) {
  for (const auto& w : ann_)
    for (const auto& x : span_)
      if (!w.evaluate({x}).is_zero()) throw std::invalid_argument("annihilator does not kill the span");
  derived_ = span_;
  for (std::size_t i = 0; i < span_.size(); ++i)
    for (std::size_t j = i + 1; j < span_.size(); ++j) derived_.push_back(bracket(chart_, span_[i], span_[j]));
  second_ = derived_;
  for (const auto& x : span_)
    for (std::size_t k = span_.size(); k < derived_.size(); ++k) second_.push_back(bracket(chart_, x, derived_[k]));
}

PlaneField from_monge(const Expr& f) {
  Coframe frame(base_chart(), monge_coframe(f));
  const auto& w = frame.forms();
  return PlaneField(base_chart(), {frame.vector(3), frame.vector(4)}, {w[0], w[1], w[2]});
}

std::size_t generic_rank(const std::vector<VectorField>& fields) { return span_rank(fields); }

GenericityReport genericity_check(const PlaneField& d) {
  GenericityReport r;
  r.rank_d = generic_rank(d.span());
  r.rank_dd = generic_rank(d.derived());
  r.rank_ddd = generic_rank(d.second_derived());
  r.generic = r.rank_d == 2 && r.rank_dd == 3 && r.rank_ddd == 5;
  if (d.second_derived().size() == d.chart().dim()) r.degeneracy = determinant(Matrix<Expr>::from_rows(d.second_derived()));
  return r;
}

bool symmetry_check(const VectorField& xi, const PlaneField& d) {
  for (const auto& x : d.span()) {
    VectorField b = bracket(d.chart(), xi, x);
    for (const auto& w : d.annihilator())
      if (!w.evaluate({b}).is_zero()) return false;
  }
  return true;
}

bool Quartic::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Expr& e) { return e.is_zero(); });
}

Quartic cartan_quartic_fq(const Expr& f) {
  for (AtomId id : f.atoms())
    if (atom_info(id).kind == AtomKind::Coordinate && atom_info(id).name != "q")
      throw std::invalid_argument("F must depend on q only");
  Expr f2 = f.diff("q").diff("q");
  if (f2.is_zero()) throw std::invalid_argument("F'' vanishes identically");
  Quartic q;
  q.a[4] = f2.pow(-4) * psi_operator(f2, "q");
  return q;
}

std::vector<int> root_type(const Quartic& q) {
  if (q.is_zero()) return {};
  UPoly p;
  for (const auto& c : q.a) {
    if (!c.is_constant()) throw std::invalid_argument("root type needs constant coefficients");
    p.push_back(c.constant());
  }
  trim(p);
  std::vector<int> type = multiplicities(p);
  if (degree(p) < 4) type.push_back(4 - degree(p));  // root at infinity
  std::sort(type.rbegin(), type.rend());
  return type;
}

std::string root_type_string(const std::vector<int>& type) {
  if (type.empty()) return "[inf]";
  std::string s = "[";
  for (std::size_t i = 0; i < type.size(); ++i) s += (i ? "," : "") + std::to_string(type[i]);
  return s + "]";
}

}  // namespace g2a
