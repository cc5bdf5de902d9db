#include "g2amb/lie.hpp"

#include <stdexcept>

namespace g2a {

namespace {

// Incrementally maintained reduced row echelon basis of a span.
class SpanBuilder {
 public:
  // Reduces v against the span; adds it and returns true when it is new.
  bool add(SVector v) {
    reduce(v);
    std::size_t l = 0;
    while (l < v.size() && v[l].is_zero()) ++l;
    if (l == v.size()) return false;
    Scalar inv = v[l].inverse();
    for (auto& x : v) x = x * inv;
    for (auto& row : rows_) {
      if (row[l].is_zero()) continue;
      Scalar f = row[l];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!v[j].is_zero()) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    lead_.push_back(l);
    return true;
  }
  bool contains(SVector v) const {
    reduce(v);
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  std::size_t dim() const { return rows_.size(); }

 private:
  void reduce(SVector& v) const {
    for (std::size_t b = 0; b < rows_.size(); ++b) {
      if (v[lead_[b]].is_zero()) continue;
      Scalar f = v[lead_[b]];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!rows_[b][j].is_zero()) v[j] -= f * rows_[b][j];
    }
  }
  std::vector<SVector> rows_;
  std::vector<std::size_t> lead_;
};

// Dimension of span{[a, b] : a in A, b in B}, and a basis of it.
std::vector<SMatrix> bracket_span(const std::vector<SMatrix>& a, const std::vector<SMatrix>& b) {
  SpanBuilder span;
  std::vector<SMatrix> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      SMatrix c = commutator(x, y);
      if (span.add(flatten(c))) out.push_back(std::move(c));
    }
  return out;
}

}  // namespace

SVector flatten(const SMatrix& m) { return m.data(); }

SMatrix commutator(const SMatrix& a, const SMatrix& b) { return a * b - b * a; }

Signature signature(const SMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("signature of a non-square matrix");
  SMatrix m = input;
  const std::size_t n = m.rows();
  Signature s;
  std::vector<bool> done(n, false);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t piv = n;
    for (std::size_t i = 0; i < n && piv == n; ++i)
      if (!done[i] && !m(i, i).is_zero()) piv = i;
    if (piv == n) {
      // no diagonal pivot: combine two rows/columns with a nonzero off-diagonal entry
      std::size_t a = n, b = n;
      for (std::size_t i = 0; i < n && a == n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!done[i] && !done[j] && i != j && !m(i, j).is_zero()) {
            a = i;
            b = j;
            break;
          }
      if (a == n) break;
      for (std::size_t k = 0; k < n; ++k) m(a, k) += m(b, k);
      for (std::size_t k = 0; k < n; ++k) m(k, a) += m(k, b);
      piv = a;
    }
    done[piv] = true;
    const Scalar p = m(piv, piv);
    (p.sign() > 0 ? s.positive : s.negative)++;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || m(i, piv).is_zero()) continue;
      Scalar f = m(i, piv) / p;
      for (std::size_t k = 0; k < n; ++k) m(i, k) -= f * m(piv, k);
      for (std::size_t k = 0; k < n; ++k) m(k, i) -= f * m(k, piv);
    }
  }
  s.zero = static_cast<int>(n) - s.positive - s.negative;
  return s;
}

LieBasis LieBasis::from_basis(std::vector<SMatrix> basis) {
  LieBasis l;
  if (!basis.empty()) l.n_ = basis[0].rows();
  SpanBuilder span;
  for (const auto& b : basis)
    if (!span.add(flatten(b))) throw std::invalid_argument("basis matrices are linearly dependent");
  l.basis_ = std::move(basis);
  return l;
}

LieBasis LieBasis::generated_by(const std::vector<SMatrix>& generators) {
  LieBasis l;
  if (generators.empty()) return l;
  l.n_ = generators[0].rows();
  SpanBuilder span;
  for (const auto& g : generators) {
    if (g.rows() != l.n_ || g.cols() != l.n_) throw std::invalid_argument("generators must be square of equal size");
    if (span.add(flatten(g))) l.basis_.push_back(g);
  }
  for (std::size_t checked = 0;;) {
    const std::size_t before = l.basis_.size();
    for (std::size_t i = 0; i < l.basis_.size(); ++i)
      for (std::size_t j = std::max(i + 1, checked); j < l.basis_.size(); ++j) {
        SMatrix c = commutator(l.basis_[i], l.basis_[j]);
        if (span.add(flatten(c))) l.basis_.push_back(std::move(c));
      }
    if (l.basis_.size() == before) break;
    checked = before;
  }
  return l;
}

std::optional<SVector> LieBasis::coordinates(const SMatrix& m) const {
  if (basis_.empty()) {
    for (const auto& x : m.data())
      if (!x.is_zero()) return std::nullopt;
    return SVector{};
  }
  SMatrix cols(n_ * n_, basis_.size());
  for (std::size_t k = 0; k < basis_.size(); ++k)
    for (std::size_t i = 0; i < n_ * n_; ++i) cols(i, k) = basis_[k].data()[i];
  return solve(cols, flatten(m));
}

bool LieBasis::is_closed() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!contains(commutator(basis_[i], basis_[j]))) return false;
  return true;
}

const std::vector<std::vector<SVector>>& LieBasis::structure_constants() const {
  if (!c_.empty() || basis_.empty()) return c_;
  const std::size_t d = dim();
  std::vector<std::vector<SVector>> c(d, std::vector<SVector>(d, SVector(d)));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      auto x = coordinates(commutator(basis_[i], basis_[j]));
      if (!x) throw std::domain_error("basis is not bracket closed");
      c[i][j] = *x;
      for (std::size_t k = 0; k < d; ++k) c[j][i][k] = -(*x)[k];
    }
  c_ = std::move(c);
  return c_;
}

bool LieBasis::jacobi() const {
  const auto& c = structure_constants();
  const std::size_t d = dim();
  // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0 in coordinates
  auto br = [&](const SVector& u, std::size_t j) {
    SVector r(d);
    for (std::size_t i = 0; i < d; ++i) {
      if (u[i].is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (!c[i][j][k].is_zero()) r[k] += u[i] * c[i][j][k];
    }
    return r;
  };
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = a + 1; b < d; ++b)
      for (std::size_t e = b + 1; e < d; ++e) {
        SVector s1 = br(c[a][b], e), s2 = br(c[b][e], a), s3 = br(c[e][a], b);
        for (std::size_t k = 0; k < d; ++k)
          if (!(s1[k] + s2[k] + s3[k]).is_zero()) return false;
      }
  return true;
}

LieFingerprint lie_fingerprint(const std::vector<SMatrix>& generators) {
  return lie_fingerprint(LieBasis::generated_by(generators));
}

LieFingerprint lie_fingerprint(const LieBasis& g) {
  LieFingerprint f;
  f.dim = g.dim();
  const auto& b = g.basis();
  f.lower_central.push_back(f.dim);
  std::vector<SMatrix> cur = b;
  while (!cur.empty()) {
    std::vector<SMatrix> next = bracket_span(b, cur);
    if (next.size() == cur.size()) break;
    f.lower_central.push_back(next.size());
    cur = std::move(next);
  }
  f.derived.push_back(f.dim);
  cur = b;
  while (!cur.empty()) {
    std::vector<SMatrix> next = bracket_span(cur, cur);
    if (next.size() == cur.size()) break;
    f.derived.push_back(next.size());
    cur = std::move(next);
  }
  f.nilpotent = f.lower_central.back() == 0;
  f.solvable = f.derived.back() == 0;
  if (f.nilpotent) f.nilpotency_step = static_cast<int>(f.lower_central.size()) - 1;

  const std::size_t d = f.dim;
  if (d > 0) {
    const auto& c = g.structure_constants();
    // center: sum_i x_i c[i][j][k] = 0 for all j, k
    SMatrix ad(d * d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) ad(j * d + k, i) = c[i][j][k];
    f.center = d - rank(ad);
    SMatrix kill(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = i; j < d; ++j) {
        Scalar v;
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l)
            if (!c[i][l][k].is_zero() && !c[j][k][l].is_zero()) v += c[i][l][k] * c[j][k][l];
        kill(i, j) = v;
        kill(j, i) = v;
      }
    f.killing_signature = signature(kill);
    f.killing_rank = d - static_cast<std::size_t>(f.killing_signature.zero);
    f.semisimple = f.killing_rank == d;
  }

  const std::size_t derived1 = f.derived.size() > 1 ? f.derived[1] : f.dim;
  if (d == 0) f.label = "trivial";
  else if (d == 3 && derived1 == 0) f.label = "R3";
  else if (d == 3 && f.semisimple) f.label = "sl2";
  else if (d == 5 && f.nilpotent && f.nilpotency_step == 2 && f.center == 1 && derived1 == 1) f.label = "h5";
  else if (d == 8) f.label = "k";
  else if (d == 14 && f.semisimple) f.label = "g2";
  else f.label = "unknown";
  return f;
}

}  // namespace g2a
