#include "g2amb/holonomy.hpp"

#include <stdexcept>

namespace g2a {

namespace {

// Sparse (1,k) tensor: nonzero components keyed by the full index tuple.
using Sparse = std::map<std::vector<int>, Expr>;

Sparse sparse(const Tensor& t) {
  Sparse s;
  for (std::size_t k = 0; k < t.size(); ++k)
    if (!t.flat(k).is_zero()) s.emplace(t.unflatten(k), t.flat(k));
  return s;
}

void accumulate(Sparse& s, const std::vector<int>& idx, const Expr& v) {
  if (v.is_zero()) return;
  auto [it, inserted] = s.emplace(idx, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) s.erase(it);
  }
}

// nabla of a (1,k) tensor with the new slot last.
Sparse covariant(const MetricField& g, const Sparse& t) {
  const std::size_t n = g.dim();
  const Tensor& gamma = g.christoffel();
  std::vector<Sparse> slices(n);
  for_each_index(n, g.exec(), [&](std::size_t j) {
    const int jj = static_cast<int>(j);
    Sparse& out = slices[j];
    const AtomId coord = g.chart().atom(j);
    for (const auto& [idx, v] : t) {
      std::vector<int> ext = idx;
      ext.push_back(jj);
      accumulate(out, ext, v.diff(coord));
      // + Gamma^e_{j a} T^a... on the upper slot, lands at e
      for (int e = 0; e < static_cast<int>(n); ++e) {
        const Expr& up = gamma.at({e, jj, idx[0]});
        if (!up.is_zero()) {
          std::vector<int> tgt = ext;
          tgt[0] = e;
          accumulate(out, tgt, up * v);
        }
      }
      // - Gamma^b_{j e} T^{..b..}: component with lower slot e receives the contribution
      for (std::size_t slot = 1; slot < idx.size(); ++slot)
        for (int e = 0; e < static_cast<int>(n); ++e) {
          const Expr& dn = gamma.at({idx[slot], jj, e});
          if (!dn.is_zero()) {
            std::vector<int> tgt = ext;
            tgt[slot] = e;
            accumulate(out, tgt, -(dn * v));
          }
        }
    }
  });
  Sparse all;
  for (auto& s : slices) all.merge(s);
  return all;
}

// Adds the endomorphisms T^a_{b J} at the point, grouped by trailing indices J, to a span.
void add_level(const Sparse& t, std::size_t n, const Point& point, std::vector<SVector>& basis, std::size_t& count) {
  std::map<std::vector<int>, SMatrix> groups;
  for (const auto& [idx, v] : t) {
    Scalar s = evaluate_at(v, point);
    if (s.is_zero()) continue;
    std::vector<int> tail(idx.begin() + 2, idx.end());
    auto it = groups.find(tail);
    if (it == groups.end()) it = groups.emplace(tail, SMatrix(n, n)).first;
    it->second(static_cast<std::size_t>(idx[0]), static_cast<std::size_t>(idx[1])) = s;
  }
  std::vector<SVector> candidates = basis;
  for (const auto& [tail, m] : groups) candidates.push_back(flatten(m));
  count += groups.size();
  std::vector<SVector> next;
  for (std::size_t k : independent_subset(candidates)) next.push_back(candidates[k]);
  basis = std::move(next);
}

SMatrix unflatten(const SVector& v, std::size_t n) {
  SMatrix m(n, n);
  for (std::size_t k = 0; k < v.size(); ++k) m(k / n, k % n) = v[k];
  return m;
}

}  // namespace

Scalar evaluate_at(const Expr& e, const Point& point) {
  for (const auto& f : e.denominator())
    if (Expr(f.p).subs(point).is_zero()) throw std::domain_error("singular evaluation point");
  Expr v = e.subs(point);
  if (!v.is_constant()) throw std::domain_error("point does not fix every coordinate of " + e.str());
  return v.constant();
}

bool has_exact_value(const Expr& e, const Point& point) {
  try {
    (void)e.subs(point);
    return true;
  } catch (const InexactValue&) {
    return false;
  } catch (const std::domain_error&) {
    return true;
  }
}

SMatrix endomorphism_at(const Tensor& t, const Point& point) {
  if (t.contra() != 1 || t.co() != 1) throw std::invalid_argument("expected a (1,1) tensor");
  const std::size_t n = t.dim();
  SMatrix m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = evaluate_at(t.at({int(a), int(b)}), point);
  return m;
}

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> d;
  for (const auto& l : levels_) d.push_back(l.span.size());
  return d;
}

Filtration v_filtration(const MetricField& g, int depth, const Point& point) {
  if (depth < 0) throw std::invalid_argument("negative depth");
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    if (!point.count(g.chart().name(i))) throw std::invalid_argument("point misses coordinate " + g.chart().name(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) evaluate_at(g(i, j), point);
  if (evaluate_at(g.determinant(), point).is_zero()) throw std::domain_error("singular evaluation point");

  Filtration f(g.chart(), point);
  Sparse t = sparse(riemann_ricci(g).up);
  std::vector<SVector> basis;
  for (int r = 0; r <= depth; ++r) {
    if (r > 0) t = covariant(g, t);
    FiltrationLevel level;
    level.r = r;
    add_level(t, n, point, basis, level.generators);
    for (const auto& v : basis) level.span.push_back(unflatten(v, n));
    f.push(std::move(level));
    const auto d = f.dims();
    if (d.size() >= 3 && d[d.size() - 1] == d[d.size() - 2] && d[d.size() - 2] == d[d.size() - 3]) break;
  }
  return f;
}

bool span_matches(const Filtration& f, int r, const std::vector<Tensor>& expected) {
  std::vector<SVector> own, theirs;
  for (const auto& m : f.span(r)) own.push_back(flatten(m));
  for (const auto& t : expected) theirs.push_back(flatten(endomorphism_at(t, f.point())));
  std::vector<SVector> all = own;
  all.insert(all.end(), theirs.begin(), theirs.end());
  const std::size_t a = span_rank(own), b = span_rank(theirs), c = span_rank(all);
  return a == b && b == c;
}

}  // namespace g2a
