#include "g2amb/forms.hpp"

#include <algorithm>
#include <set>

namespace g2a {

Chart::Chart(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen(names_.begin(), names_.end());
  if (seen.size() != names_.size()) throw std::invalid_argument("chart coordinates must be distinct");
  if (names_.empty() || names_.size() > 31) throw std::invalid_argument("unsupported chart dimension");
  for (const auto& n : names_) atoms_.push_back(coordinate_atom(n));
}

std::optional<std::size_t> Chart::index(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

std::size_t Chart::require(const std::string& name) const {
  if (auto i = index(name)) return *i;
  throw std::invalid_argument("unknown coordinate '" + name + "'");
}

Form differential(const Chart& chart, const Expr& f) {
  Form r(chart.dim(), 1);
  for (std::size_t i = 0; i < chart.dim(); ++i) r.add(std::uint32_t{1} << i, f.diff(chart.atom(i)));
  return r;
}

Form exterior_derivative(const Chart& chart, const Form& a) {
  Form r(chart.dim(), a.degree() + 1);
  for (const auto& [m, v] : a.components())
    for (std::size_t j = 0; j < chart.dim(); ++j) {
      std::uint32_t bit = std::uint32_t{1} << j;
      int s = wedge_sign(bit, m);
      if (s == 0) continue;
      Expr dv = v.diff(chart.atom(j));
      if (dv.is_zero()) continue;
      r.add(m | bit, s > 0 ? dv : -dv);
    }
  return r;
}

Expr apply(const Chart& chart, const VectorField& x, const Expr& f) {
  Expr r;
  for (std::size_t i = 0; i < chart.dim(); ++i)
    if (!x[i].is_zero()) r += x[i] * f.diff(chart.atom(i));
  return r;
}

VectorField bracket(const Chart& chart, const VectorField& x, const VectorField& y) {
  VectorField r(chart.dim());
  for (std::size_t a = 0; a < chart.dim(); ++a) r[a] = apply(chart, x, y[a]) - apply(chart, y, x[a]);
  return r;
}

Form lie_derivative(const Chart& chart, const VectorField& xi, const Form& a) {
  // L_xi (f dx^I) = xi(f) dx^I + f * sum over slots of dx^.. ^ d(xi^i) ^ dx^..
  const std::size_t n = chart.dim();
  std::vector<Form> dxi;
  for (std::size_t i = 0; i < n; ++i) dxi.push_back(differential(chart, xi[i]));
  Form r(n, a.degree());
  for (const auto& [m, v] : a.components()) {
    std::vector<int> idx = mask_indices(m);
    r = r + Form::scalar(n, apply(chart, xi, v)).wedge(Form::basis(n, idx));
    for (std::size_t slot = 0; slot < idx.size(); ++slot) {
      Form term = Form::scalar(n, v);
      for (std::size_t k = 0; k < idx.size(); ++k)
        term = term.wedge(k == slot ? dxi[static_cast<std::size_t>(idx[k])] : Form::basis(n, {idx[k]}));
      r = r + term;
    }
  }
  return r;
}

Tensor::Tensor(std::size_t n, int contra, int co, Symmetry sym) : n_(n), r_(contra), s_(co), sym_(sym) {
  std::size_t total = 1;
  for (int k = 0; k < contra + co; ++k) total *= n;
  c_.assign(total, Expr());
}

std::size_t Tensor::offset(const std::vector<int>& idx) const {
  if (static_cast<int>(idx.size()) != r_ + s_) throw std::invalid_argument("tensor index count mismatch");
  std::size_t k = 0;
  for (int i : idx) k = k * n_ + static_cast<std::size_t>(i);
  return k;
}

std::vector<int> Tensor::unflatten(std::size_t k) const {
  std::vector<int> idx(static_cast<std::size_t>(r_ + s_));
  for (std::size_t p = idx.size(); p-- > 0;) {
    idx[p] = static_cast<int>(k % n_);
    k /= n_;
  }
  return idx;
}

Tensor operator+(Tensor a, const Tensor& b) {
  if (a.n_ != b.n_ || a.r_ != b.r_ || a.s_ != b.s_) throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] += b.c_[k];
  if (a.sym_ != b.sym_) a.sym_ = Symmetry::None;
  return a;
}

Tensor operator-(Tensor a, const Tensor& b) {
  if (a.n_ != b.n_ || a.r_ != b.r_ || a.s_ != b.s_) throw std::invalid_argument("tensor shape mismatch");
  for (std::size_t k = 0; k < a.c_.size(); ++k) a.c_[k] -= b.c_[k];
  if (a.sym_ != b.sym_) a.sym_ = Symmetry::None;
  return a;
}

Tensor operator*(const Expr& s, Tensor a) {
  for (auto& c : a.c_) c = s * c;
  return a;
}

bool Tensor::is_zero_tensor() const { return first_nonzero() < 0; }

long Tensor::first_nonzero() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return static_cast<long>(k);
  return -1;
}

bool Tensor::satisfies_symmetry() const {
  if (sym_ == Symmetry::None) return true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    std::vector<int> idx = unflatten(k);
    for (std::size_t p = 0; p + 1 < idx.size(); ++p) {
      std::vector<int> swapped = idx;
      std::swap(swapped[p], swapped[p + 1]);
      const Expr& other = c_[offset(swapped)];
      if (sym_ == Symmetry::Symmetric ? !(c_[k] - other).is_zero() : !(c_[k] + other).is_zero()) return false;
    }
  }
  return true;
}

Tensor to_tensor(const Form& a) {
  Tensor t(a.dim(), 0, a.degree(), Symmetry::Alternating);
  for (std::size_t k = 0; k < t.size(); ++k) t.flat(k) = a.component(t.unflatten(k));
  return t;
}

Form to_form(const Tensor& t) {
  if (t.contra() != 0) throw std::invalid_argument("to_form needs a covariant tensor");
  Form f(t.dim(), t.co());
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::vector<int> idx = t.unflatten(k);
    bool increasing = true;
    for (std::size_t p = 0; p + 1 < idx.size(); ++p) increasing = increasing && idx[p] < idx[p + 1];
    if (!increasing) continue;
    std::uint32_t mask = 0;
    for (int i : idx) mask |= std::uint32_t{1} << i;
    f.add(mask, t.flat(k));
  }
  if (!(to_tensor(f) - t).is_zero_tensor()) throw std::invalid_argument("tensor is not alternating");
  return f;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor dimension mismatch");
  Tensor r(a.dim(), a.contra() + b.contra(), a.co() + b.co());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.flat(i).is_zero()) continue;
    std::vector<int> ia = a.unflatten(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b.flat(j).is_zero()) continue;
      std::vector<int> ib = b.unflatten(j);
      std::vector<int> idx;
      // contravariant indices of both factors first, then covariant ones
      idx.insert(idx.end(), ia.begin(), ia.begin() + a.contra());
      idx.insert(idx.end(), ib.begin(), ib.begin() + b.contra());
      idx.insert(idx.end(), ia.begin() + a.contra(), ia.end());
      idx.insert(idx.end(), ib.begin() + b.contra(), ib.end());
      r.at(idx) += a.flat(i) * b.flat(j);
    }
  }
  return r;
}

Tensor sym_product(const Form& a, const Form& b) {
  if (a.degree() != 1 || b.degree() != 1) throw std::invalid_argument("symmetric product of one-forms only");
  Tensor t(a.dim(), 0, 2, Symmetry::Symmetric);
  const Expr half = Expr::rational(1, 2);
  for (const auto& [ma, va] : a.components())
    for (const auto& [mb, vb] : b.components()) {
      int i = std::countr_zero(ma), j = std::countr_zero(mb);
      Expr p = half * va * vb;
      t.at({i, j}) += p;
      t.at({j, i}) += p;
    }
  return t;
}

Tensor vector_tensor(const VectorField& x) {
  Tensor t(x.size(), 1, 0);
  for (std::size_t i = 0; i < x.size(); ++i) t.flat(i) = x[i];
  return t;
}

Tensor endomorphism(const VectorField& x, const Form& a) {
  if (a.degree() != 1) throw std::invalid_argument("endomorphism needs a one-form");
  Tensor t(x.size(), 1, 1);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (const auto& [m, v] : a.components()) t.at({static_cast<int>(i), std::countr_zero(m)}) += x[i] * v;
  }
  return t;
}

Tensor lie_derivative(const Chart& chart, const VectorField& xi, const Tensor& t) {
  const std::size_t n = chart.dim();
  std::vector<std::vector<Expr>> dxi(n, std::vector<Expr>(n));  // dxi[a][c] = d_c xi^a
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = 0; c < n; ++c) dxi[a][c] = xi[a].diff(chart.atom(c));
  Tensor r(n, t.contra(), t.co(), t.symmetry());
  for (std::size_t k = 0; k < t.size(); ++k) {
    std::vector<int> idx = t.unflatten(k);
    Expr v = apply(chart, xi, t.flat(k));
    for (int p = 0; p < t.rank(); ++p) {
      const int orig = idx[static_cast<std::size_t>(p)];
      for (std::size_t c = 0; c < n; ++c) {
        std::vector<int> j = idx;
        j[static_cast<std::size_t>(p)] = static_cast<int>(c);
        const Expr& tc = t.at(j);
        if (tc.is_zero()) continue;
        if (p < t.contra()) {
          const Expr& d = dxi[static_cast<std::size_t>(orig)][c];
          if (!d.is_zero()) v -= tc * d;
        } else {
          const Expr& d = dxi[c][static_cast<std::size_t>(orig)];
          if (!d.is_zero()) v += tc * d;
        }
      }
    }
    r.flat(k) = v;
  }
  return r;
}

Expr evaluate(const Tensor& t, const std::vector<VectorField>& vectors) {
  if (t.contra() != 0 || static_cast<int>(vectors.size()) != t.co())
    throw std::invalid_argument("evaluate needs a covariant tensor and one vector per slot");
  Expr r;
  for (std::size_t k = 0; k < t.size(); ++k) {
    if (t.flat(k).is_zero()) continue;
    std::vector<int> idx = t.unflatten(k);
    Expr p = t.flat(k);
    for (std::size_t s = 0; s < idx.size() && !p.is_zero(); ++s) p *= vectors[s][static_cast<std::size_t>(idx[s])];
    r += p;
  }
  return r;
}

namespace {

// out_{b1..bk} = sum in_{a1..ak} M(a1,b1)...M(ak,bk) over the covariant slots.
Tensor transform_covariant(const Tensor& in, const Matrix<Expr>& m, std::size_t out_dim) {
  const std::size_t in_dim = in.dim();
  const std::size_t wide = std::max(in_dim, out_dim);
  // slots before the current one are in the output basis, later ones in the input basis
  Tensor cur(wide, 0, in.co());
  for (std::size_t k = 0; k < in.size(); ++k)
    if (!in.flat(k).is_zero()) cur.at(in.unflatten(k)) = in.flat(k);
  for (int slot = 0; slot < in.co(); ++slot) {
    Tensor next(wide, 0, in.co());
    const auto s = static_cast<std::size_t>(slot);
    for (std::size_t k = 0; k < next.size(); ++k) {
      std::vector<int> idx = next.unflatten(k);
      bool in_range = static_cast<std::size_t>(idx[s]) < out_dim;
      for (std::size_t p = 0; p < idx.size(); ++p)
        if (p != s) in_range = in_range && static_cast<std::size_t>(idx[p]) < (p < s ? out_dim : in_dim);
      if (!in_range) continue;
      Expr v;
      for (std::size_t a = 0; a < in_dim; ++a) {
        std::vector<int> j = idx;
        j[s] = static_cast<int>(a);
        const Expr& c = cur.at(j);
        if (c.is_zero()) continue;
        const Expr& f = m(a, static_cast<std::size_t>(idx[s]));
        if (!f.is_zero()) v += c * f;
      }
      next.flat(k) = v;
    }
    cur = std::move(next);
  }
  Tensor out(out_dim, 0, in.co(), in.symmetry());
  for (std::size_t k = 0; k < out.size(); ++k) out.flat(k) = cur.at(out.unflatten(k));
  return out;
}

}  // namespace

Form pullback(const Form& a, const Chart& from, const Chart& to, const std::map<std::string, Expr>& map) {
  if (a.dim() != from.dim()) throw std::invalid_argument("form does not live on the source chart");
  std::vector<Form> ds;
  for (std::size_t i = 0; i < from.dim(); ++i) {
    auto it = map.find(from.name(i));
    if (it == map.end()) throw std::invalid_argument("pullback map misses coordinate " + from.name(i));
    ds.push_back(differential(to, it->second));
  }
  Form r(to.dim(), a.degree());
  for (const auto& [m, v] : a.components()) {
    Form term = Form::scalar(to.dim(), v.subs(map));
    for (int i : mask_indices(m)) term = term.wedge(ds[static_cast<std::size_t>(i)]);
    r = r + term;
  }
  return r;
}

Tensor pullback(const Tensor& t, const Chart& from, const Chart& to, const std::map<std::string, Expr>& map) {
  if (t.contra() != 0) throw std::invalid_argument("only covariant tensors pull back");
  if (t.dim() != from.dim()) throw std::invalid_argument("tensor does not live on the source chart");
  Matrix<Expr> jac(from.dim(), to.dim());
  for (std::size_t a = 0; a < from.dim(); ++a) {
    auto it = map.find(from.name(a));
    if (it == map.end()) throw std::invalid_argument("pullback map misses coordinate " + from.name(a));
    for (std::size_t b = 0; b < to.dim(); ++b) jac(a, b) = it->second.diff(to.atom(b));
  }
  Tensor sub(t.dim(), 0, t.co(), t.symmetry());
  for (std::size_t k = 0; k < t.size(); ++k) sub.flat(k) = t.flat(k).subs(map);
  Tensor out = transform_covariant(sub, jac, to.dim());
  return out;
}

Coframe::Coframe(Chart chart, std::vector<Form> forms) : chart_(std::move(chart)), forms_(std::move(forms)) {
  const std::size_t n = chart_.dim();
  if (forms_.size() != n) throw std::invalid_argument("coframe needs one form per dimension");
  a_ = Matrix<Expr>(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    if (forms_[a].degree() != 1 || forms_[a].dim() != n) throw std::invalid_argument("coframe entries must be one-forms");
    for (std::size_t i = 0; i < n; ++i) a_(a, i) = forms_[a].get(std::uint32_t{1} << i);
  }
  Matrix<Expr> inv = inverse(a_);  // throws on a singular coframe
  for (std::size_t b = 0; b < n; ++b) frame_.push_back(inv.col(b));
}

AltForm<Expr> Coframe::expand(const Form& a) const {
  const std::size_t n = chart_.dim();
  AltForm<Expr> r(n, a.degree());
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
    if (std::popcount(m) != a.degree()) continue;
    std::vector<std::vector<Expr>> vs;
    for (int i : mask_indices(m)) vs.push_back(frame_[static_cast<std::size_t>(i)]);
    r.add(m, a.evaluate(vs));
  }
  return r;
}

Tensor Coframe::expand(const Tensor& t) const {
  const std::size_t n = chart_.dim();
  Matrix<Expr> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < n; ++b) m(i, b) = frame_[b][i];
  return transform_covariant(t, m, n);
}

Tensor Coframe::assemble(const Tensor& c) const { return transform_covariant(c, a_, chart_.dim()); }

Form Coframe::assemble(const AltForm<Expr>& c) const {
  const std::size_t n = chart_.dim();
  Form r(n, c.degree());
  for (const auto& [m, v] : c.components()) {
    Form term = Form::scalar(n, v);
    for (int i : mask_indices(m)) term = term.wedge(forms_[static_cast<std::size_t>(i)]);
    r = r + term;
  }
  return r;
}

}  // namespace g2a
