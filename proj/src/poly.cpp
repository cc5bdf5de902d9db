#include "g2amb/poly.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace g2a {

Mono Mono::atom(AtomId a, std::int32_t e) {
  Mono m;
  if (e != 0) m.w_.push_back(pack(a, e));
  return m;
}

std::int32_t Mono::exponent(AtomId a) const {
  for (Word w : w_)
    if (atom_of(w) == a) return exp_of(w);
  return 0;
}

bool Mono::has_power_atoms() const {
  return !w_.empty() && (atom_of(w_.back()) & kPowerAtomBit) != 0;
}

Mono Mono::operator*(const Mono& o) const {
  if (o.w_.empty()) return *this;
  if (w_.empty()) return o;
  Mono r;
  std::size_t i = 0, j = 0;
  while (i < w_.size() && j < o.w_.size()) {
    AtomId a = atom_of(w_[i]), b = atom_of(o.w_[j]);
    if (a == b) {
      std::int64_t e = static_cast<std::int64_t>(exp_of(w_[i])) + exp_of(o.w_[j]);
      if (e > INT32_MAX || e < INT32_MIN) throw std::overflow_error("monomial exponent overflow");
      if (e != 0) r.w_.push_back(pack(a, static_cast<std::int32_t>(e)));
      ++i;
      ++j;
    } else if (a < b) {
      r.w_.push_back(w_[i++]);
    } else {
      r.w_.push_back(o.w_[j++]);
    }
  }
  while (i < w_.size()) r.w_.push_back(w_[i++]);
  while (j < o.w_.size()) r.w_.push_back(o.w_[j++]);
  return r;
}

Mono Mono::inverse() const {
  Mono r;
  for (Word w : w_) r.w_.push_back(pack(atom_of(w), -exp_of(w)));
  return r;
}

Mono Mono::without(AtomId a) const {
  Mono r;
  for (Word w : w_)
    if (atom_of(w) != a) r.w_.push_back(w);
  return r;
}

Mono Mono::with_exponent(AtomId a, std::int32_t e) const {
  return without(a) * atom(a, e);
}

int compare(const Mono& a, const Mono& b) {
  std::size_t i = 0, j = 0;
  const auto& x = a.w_;
  const auto& y = b.w_;
  while (i < x.size() && j < y.size()) {
    AtomId p = Mono::atom_of(x[i]), q = Mono::atom_of(y[j]);
    if (p == q) {
      std::int32_t e = Mono::exp_of(x[i]), f = Mono::exp_of(y[j]);
      if (e != f) return e > f ? 1 : -1;
      ++i;
      ++j;
    } else if (p < q) {
      return Mono::exp_of(x[i]) > 0 ? 1 : -1;
    } else {
      return Mono::exp_of(y[j]) > 0 ? -1 : 1;
    }
  }
  if (i < x.size()) return Mono::exp_of(x[i]) > 0 ? 1 : -1;
  if (j < y.size()) return Mono::exp_of(y[j]) > 0 ? -1 : 1;
  return 0;
}

std::size_t Mono::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (Word w : w_) h = (h ^ w) * 0x100000001b3ull;
  return h;
}

int compare_content(const Mono& a, const Mono& b) {
  // exponent vectors compared in content order of atoms, larger exponent of the first atom wins
  std::vector<std::pair<AtomId, std::int32_t>> x, y;
  for (std::size_t i = 0; i < a.size(); ++i) x.emplace_back(a.atom_at(i), a.exp_at(i));
  for (std::size_t i = 0; i < b.size(); ++i) y.emplace_back(b.atom_at(i), b.exp_at(i));
  auto by_content = [](const auto& u, const auto& v) { return compare_atoms(u.first, v.first) < 0; };
  std::sort(x.begin(), x.end(), by_content);
  std::sort(y.begin(), y.end(), by_content);
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    int c = compare_atoms(x[i].first, y[j].first);
    if (c == 0) {
      if (x[i].second != y[j].second) return x[i].second > y[j].second ? 1 : -1;
      ++i;
      ++j;
    } else if (c < 0) {
      return x[i].second > 0 ? 1 : -1;
    } else {
      return y[j].second > 0 ? -1 : 1;
    }
  }
  if (i < x.size()) return x[i].second > 0 ? 1 : -1;
  if (j < y.size()) return y[j].second > 0 ? -1 : 1;
  return 0;
}

Poly::Poly(const Scalar& c) {
  if (!c.is_zero()) t_.push_back({Mono{}, c});
}

Poly Poly::monomial(Mono m, Scalar c) {
  Poly p;
  if (!c.is_zero()) p.t_.push_back({std::move(m), std::move(c)});
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return compare(a.m, b.m) > 0; });
  Poly p;
  p.t_.reserve(terms.size());
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Poly Poly::from_sorted(std::vector<Term> terms) {
  Poly p;
  p.t_ = std::move(terms);
  return p;
}

Poly Poly::operator-() const {
  Poly p = *this;
  for (auto& t : p.t_) t.c = -t.c;
  return p;
}

namespace {

template <class Combine>
Poly merge(const std::vector<Term>& a, const std::vector<Term>& b, Combine sign_b) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, sign_b(b[j].c)});
      ++j;
    } else {
      Scalar s = a[i].c + sign_b(b[j].c);
      if (!s.is_zero()) out.push_back({a[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < a.size()) out.push_back(a[i++]);
  while (j < b.size()) {
    out.push_back({b[j].m, sign_b(b[j].c)});
    ++j;
  }
  return Poly::from_sorted(std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) {
  if (a.t_.empty()) return b;
  if (b.t_.empty()) return a;
  return merge(a.t_, b.t_, [](const Scalar& s) { return s; });
}

Poly operator-(const Poly& a, const Poly& b) {
  if (b.t_.empty()) return a;
  return merge(a.t_, b.t_, [](const Scalar& s) { return -s; });
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.t_.empty() || b.t_.empty()) return {};
  if (a.t_.size() == 1) return b.scaled(a.t_[0].m, a.t_[0].c);
  if (b.t_.size() == 1) return a.scaled(b.t_[0].m, b.t_[0].c);
  std::vector<Term> out;
  out.reserve(a.t_.size() * b.t_.size());
  for (const auto& x : a.t_)
    for (const auto& y : b.t_) out.push_back({x.m * y.m, x.c * y.c});
  return Poly::from_terms(std::move(out));
}

Poly Poly::scaled(const Mono& m, const Scalar& c) const {
  if (c.is_zero()) return {};
  Poly p;
  p.t_.reserve(t_.size());
  // multiplying by a monomial preserves the order
  for (const auto& t : t_) {
    Scalar s = t.c * c;
    if (!s.is_zero()) p.t_.push_back({t.m * m, std::move(s)});
  }
  return p;
}

Poly Poly::pow(unsigned n) const {
  Poly result(Scalar(1)), base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1u;
    if (n > 0) base = base * base;
  }
  return result;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (!(a.t_[i].m == b.t_[i].m) || !(a.t_[i].c == b.t_[i].c)) return false;
  return true;
}

int compare(const Poly& a, const Poly& b) {
  const std::size_t n = std::min(a.t_.size(), b.t_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = compare(a.t_[i].m, b.t_[i].m); c != 0) return c;
    if (int c = a.t_[i].c.compare(b.t_[i].c); c != 0) return c;
  }
  if (a.t_.size() == b.t_.size()) return 0;
  return a.t_.size() < b.t_.size() ? -1 : 1;
}

std::size_t Poly::hash() const {
  std::size_t h = t_.size();
  for (const auto& t : t_) h = (h * 1000003u) ^ t.m.hash() ^ (t.c.hash() << 1);
  return h;
}

Mono Poly::content() const {
  if (t_.empty()) return {};
  std::map<AtomId, std::int32_t> lo;
  for (const auto& t : t_)
    for (std::size_t i = 0; i < t.m.size(); ++i) lo.emplace(t.m.atom_at(i), 0);
  for (auto& [a, e] : lo) {
    bool first = true;
    for (const auto& t : t_) {
      std::int32_t x = t.m.exponent(a);
      if (first || x < e) e = x;
      first = false;
    }
  }
  Mono m;
  for (const auto& [a, e] : lo)
    if (e != 0) m = m * Mono::atom(a, e);
  return m;
}

const Term& Poly::canonical_leading() const {
  const Term* best = &t_.front();
  for (const auto& t : t_)
    if (compare_content(t.m, best->m) > 0) best = &t;
  return *best;
}

bool Poly::has_power_atoms() const {
  for (const auto& t : t_)
    if (t.m.has_power_atoms()) return true;
  return false;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  if (d.t_.empty()) throw std::domain_error("division by zero polynomial");
  if (t_.empty()) return Poly{};
  if (d.t_.size() == 1) return scaled(d.t_[0].m.inverse(), d.t_[0].c.inverse());
  // An exact quotient has, per atom, exponents within [min_N - min_d, max_N - max_d].
  struct Bound {
    std::int32_t lo, hi;
  };
  std::map<AtomId, Bound> box;
  auto range = [](const Poly& p, AtomId a) {
    std::int32_t lo = 0, hi = 0;
    bool first = true;
    for (const auto& t : p.t_) {
      std::int32_t e = t.m.exponent(a);
      if (first || e < lo) lo = e;
      if (first || e > hi) hi = e;
      first = false;
    }
    return std::pair{lo, hi};
  };
  for (const Poly* p : {this, &d})
    for (const auto& t : p->t_)
      for (std::size_t i = 0; i < t.m.size(); ++i) box.emplace(t.m.atom_at(i), Bound{0, 0});
  for (auto& [a, b] : box) {
    auto [nlo, nhi] = range(*this, a);
    auto [dlo, dhi] = range(d, a);
    b = {nlo - dlo, nhi - dhi};
    if (b.lo > b.hi) return std::nullopt;
  }
  const Term& lead = d.t_.front();
  const Scalar inv_lead = lead.c.inverse();
  const Mono inv_lead_m = lead.m.inverse();
  std::vector<Term> q;
  Poly r = *this;
  while (!r.t_.empty()) {
    Mono m = r.t_.front().m * inv_lead_m;
    for (const auto& [a, b] : box) {
      std::int32_t e = m.exponent(a);
      if (e < b.lo || e > b.hi) return std::nullopt;
    }
    Scalar c = r.t_.front().c * inv_lead;
    r = r - d.scaled(m, c);
    q.push_back({std::move(m), std::move(c)});
  }
  return from_sorted(std::move(q));
}

}  // namespace g2a
