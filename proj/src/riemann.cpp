#include "g2amb/riemann.hpp"

#include <cstdlib>
#include <stdexcept>

namespace g2a {

Exec Exec::from_env() {
  const char* v = std::getenv("G2AMB_THREADS");
  if (!v) return serial();
  char* end = nullptr;
  long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1 || n > 1024) return serial();
  return with_threads(static_cast<int>(n));
}

namespace {

int I(std::size_t i) { return static_cast<int>(i); }

}  // namespace

MetricField::MetricField(Chart chart, Tensor g, Exec exec)
    : chart_(std::move(chart)), g_(std::move(g)), exec_(exec) {
  const std::size_t n = chart_.dim();
  if (g_.dim() != n || g_.contra() != 0 || g_.co() != 2) throw std::invalid_argument("metric must be a (0,2) tensor on the chart");
  Matrix<Expr> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = g_.at({I(i), I(j)});
      if (j < i && !(m(i, j) - m(j, i)).is_zero()) throw std::invalid_argument("metric is not symmetric");
    }
  det_ = g2a::determinant(m);
  if (det_.is_zero()) throw std::domain_error("degenerate metric");
  inv_ = g2a::inverse(m);
  gamma_ = christoffel_symbols(chart_, g_, inv_, exec_);
}

VectorField MetricField::raise(const Form& a) const {
  if (a.degree() != 1) throw std::invalid_argument("raise needs a one-form");
  VectorField v(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (const auto& [m, c] : a.components()) {
      const Expr& gi = inv_(i, static_cast<std::size_t>(std::countr_zero(m)));
      if (!gi.is_zero()) v[i] += gi * c;
    }
  return v;
}

Form MetricField::lower(const VectorField& x) const {
  std::vector<Expr> c(dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j)
      if (!x[j].is_zero()) c[i] += (*this)(i, j) * x[j];
  return Form::one_form(c);
}

Expr MetricField::inner(const VectorField& x, const VectorField& y) const {
  Expr r;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j)
      if (!y[j].is_zero()) r += (*this)(i, j) * x[i] * y[j];
  }
  return r;
}

Tensor christoffel_symbols(const Chart& chart, const Tensor& g, const Matrix<Expr>& inv, Exec exec) {
  const std::size_t n = chart.dim();
  // dg[c][a][b] = d_c g_ab, only a <= b computed
  std::vector<Expr> dg(n * n * n);
  auto dgi = [n](std::size_t c, std::size_t a, std::size_t b) { return (c * n + std::min(a, b)) * n + std::max(a, b); };
  for_each_index(n * n * n, exec, [&](std::size_t k) {
    std::size_t c = k / (n * n), a = (k / n) % n, b = k % n;
    if (a > b) return;
    dg[k] = g.at({I(a), I(b)}).diff(chart.atom(c));
  });
  // lowered symbols Gamma_{d,bc} = (d_b g_dc + d_c g_db - d_d g_bc) / 2
  std::vector<Expr> low(n * n * n);
  const Expr half = Expr::rational(1, 2);
  for_each_index(n * n * n, exec, [&](std::size_t k) {
    std::size_t d = k / (n * n), b = (k / n) % n, c = k % n;
    if (b > c) return;
    Expr v = dg[dgi(b, d, c)] + dg[dgi(c, d, b)] - dg[dgi(d, b, c)];
    if (!v.is_zero()) low[k] = half * v;
  });
  Tensor gamma(n, 1, 2);
  for_each_index(n * n * n, exec, [&](std::size_t k) {
    std::size_t a = k / (n * n), b = (k / n) % n, c = k % n;
    if (b > c) return;
    Expr v;
    for (std::size_t d = 0; d < n; ++d) {
      const Expr& l = low[(d * n + b) * n + c];
      if (l.is_zero() || inv(a, d).is_zero()) continue;
      v += inv(a, d) * l;
    }
    gamma.flat(k) = v;
  });
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < b; ++c) gamma.at({I(a), I(b), I(c)}) = gamma.at({I(a), I(c), I(b)});
  return gamma;
}

Curvature riemann_ricci(const MetricField& g) {
  const std::size_t n = g.dim();
  const Tensor& gam = g.christoffel();
  const Exec exec = g.exec();
  // dgam[((e * n + a) * n + b) * n + c] = d_e Gamma^a_{bc}
  std::vector<Expr> dgam(n * n * n * n);
  for_each_index(dgam.size(), exec, [&](std::size_t k) {
    std::size_t e = k / (n * n * n), a = (k / (n * n)) % n, b = (k / n) % n, c = k % n;
    if (b > c) return;
    dgam[k] = gam.at({I(a), I(b), I(c)}).diff(g.chart().atom(e));
  });
  auto dG = [&](std::size_t e, std::size_t a, std::size_t b, std::size_t c) -> const Expr& {
    if (b > c) std::swap(b, c);
    return dgam[((e * n + a) * n + b) * n + c];
  };
  Curvature r;
  r.up = Tensor(n, 1, 3);
  for_each_index(n * n * n * n, exec, [&](std::size_t k) {
    std::size_t a = k / (n * n * n), b = (k / (n * n)) % n, c = (k / n) % n, d = k % n;
    if (c >= d) return;
    Expr v = dG(c, a, d, b) - dG(d, a, c, b);
    for (std::size_t e = 0; e < n; ++e) {
      const Expr& x1 = gam.at({I(a), I(c), I(e)});
      const Expr& y1 = gam.at({I(e), I(d), I(b)});
      if (!x1.is_zero() && !y1.is_zero()) v += x1 * y1;
      const Expr& x2 = gam.at({I(a), I(d), I(e)});
      const Expr& y2 = gam.at({I(e), I(c), I(b)});
      if (!x2.is_zero() && !y2.is_zero()) v -= x2 * y2;
    }
    r.up.flat(k) = v;
  });
  for (std::size_t k = 0; k < r.up.size(); ++k) {
    std::vector<int> idx = r.up.unflatten(k);
    if (idx[2] > idx[3]) r.up.flat(k) = -r.up.at({idx[0], idx[1], idx[3], idx[2]});
  }
  r.down = Tensor(n, 0, 4);
  for_each_index(r.down.size(), exec, [&](std::size_t k) {
    std::vector<int> idx = r.down.unflatten(k);
    Expr v;
    for (std::size_t e = 0; e < n; ++e) {
      const Expr& ge = g(static_cast<std::size_t>(idx[0]), e);
      if (ge.is_zero()) continue;
      const Expr& re = r.up.at({I(e), idx[1], idx[2], idx[3]});
      if (!re.is_zero()) v += ge * re;
    }
    r.down.flat(k) = v;
  });
  r.ricci = Tensor(n, 0, 2, Symmetry::Symmetric);
  for_each_index(n * n, exec, [&](std::size_t k) {
    std::size_t b = k / n, d = k % n;
    Expr v;
    for (std::size_t a = 0; a < n; ++a) v += r.up.at({I(a), I(b), I(a), I(d)});
    r.ricci.flat(k) = v;
  });
  return r;
}

Expr scalar_curvature(const MetricField& g, const Tensor& ricci) {
  Expr s;
  for (std::size_t a = 0; a < g.dim(); ++a)
    for (std::size_t b = 0; b < g.dim(); ++b)
      if (!g.inverse()(a, b).is_zero() && !ricci.at({I(a), I(b)}).is_zero()) s += g.inverse()(a, b) * ricci.at({I(a), I(b)});
  return s;
}

Tensor covariant_derivative(const MetricField& g, const Tensor& t) {
  const std::size_t n = g.dim();
  if (t.dim() != n) throw std::invalid_argument("tensor and metric live on different charts");
  const Tensor& gam = g.christoffel();
  Tensor r(n, t.contra(), t.co() + 1);
  for_each_index(r.size(), g.exec(), [&](std::size_t k) {
    std::vector<int> idx = r.unflatten(k);
    const int c = idx.back();
    idx.pop_back();
    Expr v = t.at(idx).diff(g.chart().atom(static_cast<std::size_t>(c)));
    for (int p = 0; p < t.rank(); ++p) {
      const auto ps = static_cast<std::size_t>(p);
      const int orig = idx[ps];
      for (std::size_t e = 0; e < n; ++e) {
        std::vector<int> j = idx;
        j[ps] = I(e);
        const Expr& te = t.at(j);
        if (te.is_zero()) continue;
        if (p < t.contra()) {
          const Expr& ge = gam.at({orig, c, I(e)});
          if (!ge.is_zero()) v += ge * te;
        } else {
          const Expr& ge = gam.at({I(e), c, orig});
          if (!ge.is_zero()) v -= ge * te;
        }
      }
    }
    r.flat(k) = v;
  });
  return r;
}

VectorField covariant_derivative(const MetricField& g, const VectorField& x, const VectorField& y) {
  const std::size_t n = g.dim();
  VectorField r(n);
  for (std::size_t a = 0; a < n; ++a) r[a] = apply(g.chart(), x, y[a]);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (x[b].is_zero()) continue;
      for (std::size_t c = 0; c < n; ++c) {
        const Expr& ge = g.christoffel().at({I(a), I(b), I(c)});
        if (!ge.is_zero() && !y[c].is_zero()) r[a] += ge * x[b] * y[c];
      }
    }
  return r;
}

CurvatureSymmetries check_symmetries(const Tensor& R) {
  CurvatureSymmetries s;
  const int n = I(R.dim());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const Expr& v = R.at({a, b, c, d});
          if (!(v + R.at({b, a, c, d})).is_zero()) s.antisymmetric_first = false;
          if (!(v + R.at({a, b, d, c})).is_zero()) s.antisymmetric_last = false;
          if (!(v - R.at({c, d, a, b})).is_zero()) s.pair_symmetric = false;
          if (!(v + R.at({a, c, d, b}) + R.at({a, d, b, c})).is_zero()) s.bianchi = false;
        }
  return s;
}

std::string first_nonzero_witness(const Tensor& t) {
  long k = t.first_nonzero();
  if (k < 0) return {};
  std::vector<int> idx = t.unflatten(static_cast<std::size_t>(k));
  std::string s = "[";
  for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + std::to_string(idx[i]);
  return s + "] " + t.flat(static_cast<std::size_t>(k)).str();
}

std::vector<AxiomCheck> ambient_axioms(const MetricField& ambient, const MetricField& base, const std::string& t,
                                       const std::string& rho) {
  const Chart& ch = ambient.chart();
  const std::size_t n = ch.dim();
  const std::size_t it = ch.require(t);
  ch.require(rho);
  std::vector<AxiomCheck> out;
  auto record = [&](std::string name, const Tensor& residual) {
    std::string w = first_nonzero_witness(residual);
    out.push_back({std::move(name), w.empty(), w});
  };

  VectorField euler(n);
  euler[it] = ch.coord(it);
  record("homogeneity", lie_derivative(ch, euler, ambient.tensor()) - Expr(2) * ambient.tensor());

  std::map<std::string, Expr> section;
  for (const auto& name : ch.names()) {
    if (name == t) section[name] = Expr(1);
    else if (name == rho) section[name] = Expr(0);
    else {
      base.chart().require(name);
      section[name] = Expr::coord(name);
    }
  }
  record("initial-condition", pullback(ambient.tensor(), ch, base.chart(), section) - base.tensor());

  VectorField s = covariant_derivative(ambient, euler, euler);
  Tensor straight(n, 1, 0);
  for (std::size_t a = 0; a < n; ++a) straight.flat(a) = s[a] - euler[a];
  record("straightness", straight);

  record("ricci-flat", riemann_ricci(ambient).ricci);
  return out;
}

Tensor conformal_killing_residual(const MetricField& g, const VectorField& xi) {
  Tensor l = lie_derivative(g.chart(), xi, g.tensor());
  Expr tr = scalar_curvature(g, l);
  return l - (tr / Expr(static_cast<long>(g.dim()))) * g.tensor();
}

EinsteinResidual einstein_scale_residual(const Expr& sigma, const MetricField& g) {
  if (sigma.is_zero()) throw std::invalid_argument("scale must be nonzero");
  MetricField scaled(g.chart(), sigma.pow(-2) * g.tensor(), g.exec());
  EinsteinResidual r;
  r.ricci = riemann_ricci(scaled).ricci;
  const long n = static_cast<long>(g.dim());
  r.lambda = scalar_curvature(scaled, r.ricci) / Expr(2 * n * (n - 1));
  return r;
}

Form volume_form(const MetricField& g, const Coframe& coframe) {
  const std::size_t n = g.dim();
  Tensor c = coframe.expand(g.tensor());
  Matrix<Expr> m(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) m(a, b) = c.at({I(a), I(b)});
  Expr det = determinant(m);
  if (det.is_zero()) throw std::domain_error("degenerate metric");
  const Poly& num = det.numerator();
  if (num.size() != 1) throw std::domain_error("determinant is not a monomial; square root not extractable");
  Expr abs = num.terms()[0].c.sign() < 0 ? -det : det;
  Expr root = abs.pow(Rational(1, 2));
  for (AtomId a : root.atoms())
    if (atom_info(a).kind == AtomKind::Power) throw std::domain_error("square root of the determinant is not extractable");
  Form vol = Form::scalar(n, root);
  for (const auto& w : coframe.forms()) vol = vol.wedge(w);
  return vol;
}

}  // namespace g2a
