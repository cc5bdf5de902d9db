#include "g2amb/g2alg.hpp"

#include <cmath>
#include <stdexcept>

namespace g2a {

namespace {

constexpr std::size_t kDim = 7;

struct Params {
  Scalar a[2][2], x[2], y[2], z[2], w[2], r, s;
};

// The block presentation with blocks of sizes 1, 2, 1, 2, 1.
SMatrix g2_matrix(const Params& p) {
  const Scalar r2 = sqrt2(), ir2 = sqrt2().inverse();
  const SMatrix J = j_block();
  SMatrix m(kDim, kDim);
  const Scalar tr = p.a[0][0] + p.a[1][1];
  m(0, 0) = tr;
  m(6, 6) = -tr;
  m(0, 3) = p.s;
  m(3, 6) = p.s;
  m(3, 0) = p.r;
  m(6, 3) = p.r;
  for (int i = 0; i < 2; ++i) {
    const auto u = static_cast<std::size_t>(i);
    m(0, 1 + u) = p.z[i];
    m(0, 4 + u) = p.w[i];
    m(1 + u, 0) = p.x[i];
    m(1 + u, 6) = -p.w[i];
    m(4 + u, 0) = p.y[i];
    m(4 + u, 6) = -p.z[i];
    m(6, 1 + u) = -p.y[i];
    m(6, 4 + u) = -p.x[i];
    Scalar jz, jx, xj, zj;
    for (int k = 0; k < 2; ++k) {
      const auto v = static_cast<std::size_t>(k);
      jz += J(u, v) * p.z[k];  // (J Z^T)_i
      jx += J(u, v) * p.x[k];  // (J X)_i
      xj += p.x[k] * J(v, u);  // (X^T J)_i
      zj += p.z[k] * J(v, u);  // (Z J)_i
      m(1 + u, 1 + v) = p.a[i][k];
      m(4 + u, 4 + v) = -p.a[k][i];
      m(1 + u, 4 + v) = p.s * ir2 * J(u, v);
      m(4 + u, 1 + v) = -p.r * ir2 * J(u, v);
    }
    m(1 + u, 3) = r2 * jz;
    m(4 + u, 3) = r2 * jx;
    m(3, 1 + u) = -r2 * xj;
    m(3, 4 + u) = -r2 * zj;
  }
  return m;
}

std::vector<SMatrix> unit_params(const std::vector<std::function<void(Params&)>>& setters) {
  std::vector<SMatrix> out;
  for (const auto& set : setters) {
    Params p;
    set(p);
    out.push_back(g2_matrix(p));
  }
  return out;
}

SVector matvec(const SMatrix& m, const SVector& v) { return m.apply(v); }

}  // namespace

Scalar sqrt2() { return Scalar::radical(1, Rational(1, 2), 0, 0); }
Scalar sqrt6() { return Scalar::radical(1, Rational(1, 2), Rational(1, 2), 0); }

SMatrix j_block() { return SMatrix::from_rows({{0, -1}, {1, 0}}); }

ThreeForm standard_phi() {
  auto e = [](int a, int b, int c) { return ThreeForm::basis(kDim, {a - 1, b - 1, c - 1}); };
  const Scalar r2 = sqrt2();
  ThreeForm f = Scalar(-1) * r2 * e(1, 5, 6) - e(2, 4, 5) - e(3, 4, 6) + e(1, 4, 7) - r2 * e(2, 3, 7);
  return sqrt6().inverse() * f;
}

SMatrix standard_gram() {
  SMatrix g(kDim, kDim);
  g(0, 6) = g(6, 0) = 1;
  g(1, 4) = g(4, 1) = 1;
  g(2, 5) = g(5, 2) = 1;
  g(3, 3) = -1;
  return g;
}

SVector basis_vector(int k) {
  SVector v(kDim);
  v.at(static_cast<std::size_t>(k - 1)) = 1;
  return v;
}

Scalar inner(const SMatrix& g, const SVector& x, const SVector& y) {
  Scalar r;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (!g(i, j).is_zero() && !y[j].is_zero()) r += x[i] * g(i, j) * y[j];
  }
  return r;
}

SVector contract2(const ThreeForm& phi, const SVector& x, const SVector& y) {
  ThreeForm f = phi.interior(x).interior(y);  // phi(x, y, .)
  SVector c(phi.dim());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = f.get(std::uint32_t{1} << k);
  return c;
}

SVector cross_product(const SVector& x, const SVector& y, const ThreeForm& phi, const SMatrix& g) {
  SVector c = contract2(phi, x, y);
  SVector r = inverse(g).apply(c);
  for (auto& v : r) v = -v;
  return r;
}

Scalar trace_form(const SVector& x, const SVector& y, const ThreeForm& phi, const SMatrix& g) {
  Scalar tr;
  for (std::size_t k = 0; k < phi.dim(); ++k) {
    SVector e(phi.dim());
    e[k] = 1;
    tr += cross_product(x, cross_product(y, e, phi, g), phi, g)[k];
  }
  return Scalar(ratio(-1, 6)) * tr;
}

std::vector<SVector> annihilator(const SVector& x, const ThreeForm& phi) {
  const std::size_t n = phi.dim();
  SMatrix m(n, n);  // column j: Phi(x, e_j, .)
  for (std::size_t j = 0; j < n; ++j) {
    SVector e(n);
    e[j] = 1;
    SVector c = contract2(phi, x, e);
    for (std::size_t k = 0; k < n; ++k) m(k, j) = c[k];
  }
  return kernel(m);
}

std::vector<SVector> orthogonal(const std::vector<SVector>& span, const SMatrix& g) {
  const std::size_t n = g.rows();
  if (span.empty()) {
    std::vector<SVector> all;
    for (std::size_t k = 0; k < n; ++k) {
      SVector e(n);
      e[k] = 1;
      all.push_back(e);
    }
    return all;
  }
  SMatrix m(span.size(), n);
  for (std::size_t i = 0; i < span.size(); ++i) {
    SVector row = g.apply(span[i]);
    for (std::size_t j = 0; j < n; ++j) m(i, j) = row[j];
  }
  return kernel(m);
}

bool h_identity_check(const ThreeForm& phi, const SMatrix& g, const ThreeForm& vol) {
  std::function<Scalar(std::size_t, std::size_t)> gf = [&](std::size_t i, std::size_t j) { return g(i, j); };
  return h_identity_orientation<Scalar>(phi, gf, vol, sqrt6()) != 0;
}

bool h_identity_check(const Form& phi, const MetricField& g, const Form& vol) {
  std::function<Expr(std::size_t, std::size_t)> gf = [&](std::size_t i, std::size_t j) { return g(i, j); };
  return h_identity_orientation<Expr>(phi, gf, vol, Expr(sqrt6())) != 0;
}

std::vector<double> to_doubles(const ThreeForm& phi) {
  std::vector<double> out(std::size_t{1} << phi.dim(), 0.0);
  for (const auto& [m, v] : phi.components()) out[m] = v.to_double();
  return out;
}

std::vector<double> induced_metric_numeric(const std::vector<double>& comps) {
  const std::size_t n = kDim;
  AltForm<double> phi(n, 3);
  for (std::uint32_t m = 0; m < comps.size(); ++m)
    if (comps[m] != 0.0) phi.add(m, comps[m]);
  const std::uint32_t top = (std::uint32_t{1} << n) - 1;
  std::vector<double> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<double> ei(n, 0.0), ej(n, 0.0);
      ei[i] = 1;
      ej[j] = 1;
      b[i * n + j] = phi.interior(ei).wedge(phi.interior(ej)).wedge(phi).get(top);
    }
  // determinant by partial pivoting
  std::vector<double> a = b;
  double det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(a[r * n + c]) > std::abs(a[piv * n + c])) piv = r;
    if (a[piv * n + c] == 0.0) throw std::domain_error("3-form is not generic");
    if (piv != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a[c * n + k], a[piv * n + k]);
      det = -det;
    }
    det *= a[c * n + c];
    for (std::size_t r = c + 1; r < n; ++r) {
      double f = a[r * n + c] / a[c * n + c];
      for (std::size_t k = c; k < n; ++k) a[r * n + k] -= f * a[c * n + k];
    }
  }
  // det B = sign(v) |det H|^{9/2} / 6^{7/2} with vol = v e^1..e^7 and |v| = |det H|^{1/2}
  const double abs_det_h = std::pow(std::abs(det) * std::pow(6.0, 3.5), 2.0 / 9.0);
  const double v = (det > 0 ? 1.0 : -1.0) * std::sqrt(abs_det_h);
  std::vector<double> h(n * n);
  for (std::size_t k = 0; k < h.size(); ++k) h[k] = std::sqrt(6.0) * b[k] / v;
  return h;
}

ThreeForm derivation_action(const SMatrix& x, const ThreeForm& phi) {
  const std::size_t n = phi.dim();
  ThreeForm r(n, 3);
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) != 3) continue;
    std::vector<int> idx = mask_indices(m);
    Scalar v;
    for (std::size_t slot = 0; slot < 3; ++slot)
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& xk = x(k, static_cast<std::size_t>(idx[slot]));
        if (xk.is_zero()) continue;
        std::vector<int> j = idx;
        j[slot] = static_cast<int>(k);
        v -= xk * phi.component(j);
      }
    r.add(m, v);
  }
  return r;
}

bool is_skew(const SMatrix& x, const SMatrix& g) { return (x.transpose() * g + g * x).is_zero_matrix(); }

std::vector<SMatrix> g2_basis() {
  return unit_params({
      [](Params& p) { p.a[0][0] = 1; },
      [](Params& p) { p.a[0][1] = 1; },
      [](Params& p) { p.a[1][0] = 1; },
      [](Params& p) { p.a[1][1] = 1; },
      [](Params& p) { p.x[0] = 1; },
      [](Params& p) { p.x[1] = 1; },
      [](Params& p) { p.y[0] = 1; },
      [](Params& p) { p.y[1] = 1; },
      [](Params& p) { p.z[0] = 1; },
      [](Params& p) { p.z[1] = 1; },
      [](Params& p) { p.w[0] = 1; },
      [](Params& p) { p.w[1] = 1; },
      [](Params& p) { p.r = 1; },
      [](Params& p) { p.s = 1; },
  });
}

std::vector<SMatrix> k_basis() {
  return unit_params({
      [](Params& p) { p.a[0][0] = 1; p.a[1][1] = -1; },
      [](Params& p) { p.a[0][1] = 1; },
      [](Params& p) { p.a[1][0] = 1; },
      [](Params& p) { p.z[0] = 1; },
      [](Params& p) { p.z[1] = 1; },
      [](Params& p) { p.w[0] = 1; },
      [](Params& p) { p.w[1] = 1; },
      [](Params& p) { p.s = 1; },
  });
}

std::vector<SMatrix> h5_basis() {
  const Scalar r2 = sqrt2(), ir2 = sqrt2().inverse();
  auto mk = [](std::vector<std::tuple<int, int, Scalar>> entries) {
    SMatrix m(kDim, kDim);
    for (const auto& [i, j, v] : entries) m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = v;
    return m;
  };
  return {
      mk({{2, 3, 1}, {6, 5, 1}}),                                  // a12
      mk({{1, 3, 1}, {2, 4, -r2}, {4, 5, -r2}, {6, 7, -1}}),       // Z2
      mk({{1, 4, 1}, {2, 6, -ir2}, {3, 5, ir2}, {4, 7, 1}}),       // s
      mk({{1, 5, 1}, {2, 7, -1}}),                                 // W1
      mk({{1, 6, 1}, {3, 7, -1}}),                                 // W2
  };
}

std::vector<SMatrix> phi_annihilator(const ThreeForm& phi) {
  const std::size_t n = phi.dim();
  // unknowns x(k, l); equations: components of the derivation action over all 3-index sets
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m)
    if (std::popcount(m) == 3) masks.push_back(m);
  SMatrix sys(masks.size(), n * n);
  for (std::size_t u = 0; u < n * n; ++u) {
    SMatrix e(n, n);
    e(u / n, u % n) = 1;
    ThreeForm d = derivation_action(e, phi);
    for (std::size_t r = 0; r < masks.size(); ++r) sys(r, u) = d.get(masks[r]);
  }
  std::vector<SMatrix> out;
  for (const auto& v : kernel(sys)) {
    SMatrix m(n, n);
    for (std::size_t u = 0; u < n * n; ++u) m(u / n, u % n) = v[u];
    out.push_back(m);
  }
  return out;
}

std::vector<SMatrix> stabilizer(const SVector& v, const std::vector<SMatrix>& algebra) {
  if (algebra.empty()) return {};
  const std::size_t n = v.size();
  SMatrix sys(n, algebra.size());
  for (std::size_t k = 0; k < algebra.size(); ++k) {
    SVector w = matvec(algebra[k], v);
    for (std::size_t i = 0; i < n; ++i) sys(i, k) = w[i];
  }
  std::vector<SMatrix> out;
  for (const auto& c : kernel(sys)) {
    SMatrix m(algebra[0].rows(), algebra[0].cols());
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) m = m + c[k] * algebra[k];
    out.push_back(m);
  }
  return out;
}

std::vector<SVector> fixed_vectors(const std::vector<SMatrix>& algebra, std::size_t n) {
  SMatrix sys(algebra.size() * n, n);
  for (std::size_t k = 0; k < algebra.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) sys(k * n + i, j) = algebra[k](i, j);
  if (algebra.empty()) sys = SMatrix(1, n);
  return kernel(sys);
}

std::string to_string(PairCase c) {
  switch (c) {
    case PairCase::K: return "K";
    case PairCase::H5: return "H5";
    case PairCase::R3: return "R3";
    case PairCase::SL2: return "SL2";
  }
  return "?";
}

PairClassification classify_pair(const SVector& x, const SVector& y) {
  const SMatrix g = standard_gram();
  const ThreeForm phi = standard_phi();
  auto nonzero = [](const SVector& v) {
    for (const auto& c : v)
      if (!c.is_zero()) return true;
    return false;
  };
  if (x.size() != kDim || y.size() != kDim) throw std::invalid_argument("vectors must have 7 entries");
  if (!nonzero(x) || !nonzero(y)) throw std::invalid_argument("vectors must be nonzero");
  if (!inner(g, x, x).is_zero() || !inner(g, y, y).is_zero()) throw std::invalid_argument("vectors must be null");
  PairClassification r;
  if (span_rank(std::vector<SVector>{x, y}) == 1) r.label = PairCase::K;
  else if (!nonzero(contract2(phi, x, y))) r.label = PairCase::H5;
  else if (inner(g, x, y).is_zero()) r.label = PairCase::R3;
  else r.label = PairCase::SL2;

  std::vector<SMatrix> common = stabilizer(y, stabilizer(x, g2_basis()));
  r.stabilizer_dim = common.size();
  r.fingerprint_label = lie_fingerprint(common).label;
  static const char* expected[] = {"k", "h5", "R3", "sl2"};
  r.agrees = r.fingerprint_label == expected[static_cast<int>(r.label)];
  return r;
}

SVector random_vector(std::mt19937& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, 4);
  SVector v(kDim);
  for (auto& c : v) c = Scalar(ratio(num(rng), den(rng)));
  return v;
}

SVector random_null_vector(std::mt19937& rng) {
  SVector v = random_vector(rng);
  std::uniform_int_distribution<int> num(1, 5);
  v[0] = Scalar(num(rng));
  // 2 x1 x7 + 2 (x2 x5 + x3 x6) - x4^2 = 0
  v[6] = (v[3] * v[3] - Scalar(2) * (v[1] * v[4] + v[2] * v[5])) / (Scalar(2) * v[0]);
  return v;
}

}  // namespace g2a
