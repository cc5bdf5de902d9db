#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "g2amb/expr.hpp"
#include "g2amb/linalg.hpp"

namespace g2a {

class Chart {
 public:
  Chart() = default;
  explicit Chart(std::vector<std::string> names);

  std::size_t dim() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index(const std::string& name) const;
  std::size_t require(const std::string& name) const;  // throws std::invalid_argument
  AtomId atom(std::size_t i) const { return atoms_.at(i); }
  Expr coord(std::size_t i) const { return Expr::atom(atoms_.at(i)); }
  friend bool operator==(const Chart& a, const Chart& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::vector<AtomId> atoms_;
};

// Components along the coordinate vector fields of a chart.
using VectorField = std::vector<Expr>;

// Sign of dx^A ^ dx^B relative to dx^(A|B); 0 when the index sets overlap.
inline int wedge_sign(std::uint32_t a, std::uint32_t b) {
  if (a & b) return 0;
  int inversions = 0;
  for (std::uint32_t rest = b; rest; rest &= rest - 1) {
    std::uint32_t j = static_cast<std::uint32_t>(std::countr_zero(rest));
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

inline std::vector<int> mask_indices(std::uint32_t m) {
  std::vector<int> v;
  for (; m; m &= m - 1) v.push_back(std::countr_zero(m));
  return v;
}

// Alternating k-form on an n-dimensional space with coefficients in T, stored over increasing index sets.
template <class T>
class AltForm {
 public:
  AltForm() = default;
  AltForm(std::size_t n, int degree) : n_(n), k_(degree) {}

  static AltForm one_form(const std::vector<T>& comps) {
    AltForm f(comps.size(), 1);
    for (std::size_t i = 0; i < comps.size(); ++i) f.add(std::uint32_t{1} << i, comps[i]);
    return f;
  }
  // dx^{i1} ^ ... ^ dx^{ik} for arbitrary (possibly unsorted) indices.
  static AltForm basis(std::size_t n, const std::vector<int>& idx) {
    AltForm acc(n, 0);
    acc.add(0, T(1));
    for (int i : idx) {
      AltForm e(n, 1);
      e.add(std::uint32_t{1} << i, T(1));
      acc = acc.wedge(e);
    }
    return acc;
  }
  static AltForm scalar(std::size_t n, const T& v) {
    AltForm f(n, 0);
    f.add(0, v);
    return f;
  }

  std::size_t dim() const { return n_; }
  int degree() const { return k_; }
  const std::map<std::uint32_t, T>& components() const { return c_; }
  T get(std::uint32_t mask) const {
    auto it = c_.find(mask);
    return it == c_.end() ? T(0) : it->second;
  }
  // Component on an arbitrary index tuple, with the permutation sign.
  T component(const std::vector<int>& idx) const {
    std::uint32_t mask = 0;
    int sign = 1;
    for (int i : idx) {
      std::uint32_t bit = std::uint32_t{1} << i;
      int s = wedge_sign(mask, bit);
      if (s == 0) return T(0);
      sign *= s;
      mask |= bit;
    }
    T v = get(mask);
    return sign > 0 ? v : -v;
  }
  void add(std::uint32_t mask, const T& v) {
    if (is_zero(v)) return;
    auto [it, inserted] = c_.emplace(mask, v);
    if (!inserted) {
      it->second += v;
      if (is_zero(it->second)) c_.erase(it);
    }
  }
  bool is_zero_form() const { return c_.empty(); }

  friend AltForm operator+(AltForm a, const AltForm& b) {
    check(a, b);
    for (const auto& [m, v] : b.c_) a.add(m, v);
    return a;
  }
  friend AltForm operator-(AltForm a, const AltForm& b) {
    check(a, b);
    for (const auto& [m, v] : b.c_) a.add(m, -v);
    return a;
  }
  AltForm operator-() const {
    AltForm r = *this;
    for (auto& [m, v] : r.c_) v = -v;
    return r;
  }
  friend AltForm operator*(const T& s, const AltForm& a) {
    AltForm r(a.n_, a.k_);
    for (const auto& [m, v] : a.c_) r.add(m, s * v);
    return r;
  }

  AltForm wedge(const AltForm& o) const {
    if (n_ != o.n_) throw std::invalid_argument("wedge of forms on different dimensions");
    AltForm r(n_, k_ + o.k_);
    for (const auto& [ma, va] : c_)
      for (const auto& [mb, vb] : o.c_) {
        int s = wedge_sign(ma, mb);
        if (s == 0) continue;
        T p = va * vb;
        r.add(ma | mb, s > 0 ? p : -p);
      }
    return r;
  }

  AltForm interior(const std::vector<T>& x) const {
    if (x.size() != n_) throw std::invalid_argument("vector dimension mismatch");
    if (k_ == 0) throw std::invalid_argument("interior product of a function");
    AltForm r(n_, k_ - 1);
    for (const auto& [m, v] : c_) {
      int pos = 0;
      for (int i : mask_indices(m)) {
        if (!is_zero(x[static_cast<std::size_t>(i)])) {
          T p = x[static_cast<std::size_t>(i)] * v;
          r.add(m & ~(std::uint32_t{1} << i), (pos & 1) ? -p : p);
        }
        ++pos;
      }
    }
    return r;
  }

  // alpha(X_1, ..., X_k) for k vectors.
  T evaluate(const std::vector<std::vector<T>>& xs) const {
    if (static_cast<int>(xs.size()) != k_) throw std::invalid_argument("wrong number of vectors");
    AltForm f = *this;
    for (const auto& x : xs) f = f.interior(x);
    return f.get(0);
  }

  friend bool operator==(const AltForm& a, const AltForm& b) { return (a - b).is_zero_form(); }

 private:
  static void check(const AltForm& a, const AltForm& b) {
    if (a.n_ != b.n_ || a.k_ != b.k_) throw std::invalid_argument("form shape mismatch");
  }
  std::size_t n_ = 0;
  int k_ = 0;
  std::map<std::uint32_t, T> c_;
};

using Form = AltForm<Expr>;

Form exterior_derivative(const Chart& chart, const Form& a);
Form lie_derivative(const Chart& chart, const VectorField& xi, const Form& a);
Expr apply(const Chart& chart, const VectorField& x, const Expr& f);  // X(f)
VectorField bracket(const Chart& chart, const VectorField& x, const VectorField& y);
Form differential(const Chart& chart, const Expr& f);  // df

enum class Symmetry { None, Symmetric, Alternating };

// Dense tensor field of valence (r, s): contravariant indices first, row-major components.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t n, int contra, int co, Symmetry sym = Symmetry::None);

  std::size_t dim() const { return n_; }
  int contra() const { return r_; }
  int co() const { return s_; }
  int rank() const { return r_ + s_; }
  Symmetry symmetry() const { return sym_; }
  Expr& at(const std::vector<int>& idx) { return c_[offset(idx)]; }
  const Expr& at(const std::vector<int>& idx) const { return c_[offset(idx)]; }
  Expr& flat(std::size_t k) { return c_[k]; }
  const Expr& flat(std::size_t k) const { return c_[k]; }
  std::size_t size() const { return c_.size(); }
  std::vector<int> unflatten(std::size_t k) const;
  std::size_t offset(const std::vector<int>& idx) const;

  friend Tensor operator+(Tensor a, const Tensor& b);
  friend Tensor operator-(Tensor a, const Tensor& b);
  friend Tensor operator*(const Expr& s, Tensor a);
  bool is_zero_tensor() const;
  // Index of the first nonzero component, or -1.
  long first_nonzero() const;
  bool satisfies_symmetry() const;  // checks the declared flag exactly

 private:
  std::size_t n_ = 0;
  int r_ = 0, s_ = 0;
  Symmetry sym_ = Symmetry::None;
  std::vector<Expr> c_;
};

Tensor to_tensor(const Form& a);                  // (0,k) with determinant convention
Form to_form(const Tensor& t);                    // requires alternating covariant input
Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor sym_product(const Form& a, const Form& b);  // (a b + b a)/2 for one-forms
Tensor vector_tensor(const VectorField& x);        // (1,0)
Tensor endomorphism(const VectorField& x, const Form& a);  // x (x) a as (1,1)
Tensor lie_derivative(const Chart& chart, const VectorField& xi, const Tensor& t);
// Contraction of a covariant slot with vector fields in the leading covariant positions.
Expr evaluate(const Tensor& t, const std::vector<VectorField>& vectors);

// Pullback along a map given by coordinate expressions: `map` assigns every coordinate of
// `from` an Expr in the coordinates of `to`.
Form pullback(const Form& a, const Chart& from, const Chart& to, const std::map<std::string, Expr>& map);
Tensor pullback(const Tensor& t, const Chart& from, const Chart& to, const std::map<std::string, Expr>& map);

// n one-forms with invertible component matrix, and the dual frame.
class Coframe {
 public:
  Coframe() = default;
  Coframe(Chart chart, std::vector<Form> forms);

  const Chart& chart() const { return chart_; }
  const std::vector<Form>& forms() const { return forms_; }
  const Form& form(std::size_t a) const { return forms_.at(a); }
  const std::vector<VectorField>& frame() const { return frame_; }
  const VectorField& vector(std::size_t b) const { return frame_.at(b); }
  const Matrix<Expr>& matrix() const { return a_; }  // a(a, i) = omega^a_i

  // Components of a form over wedge products of the coframe: alpha = sum c_J omega^J.
  AltForm<Expr> expand(const Form& a) const;
  // Components of a covariant tensor over the coframe: t(E_a, E_b, ...).
  Tensor expand(const Tensor& t) const;
  // Builds a covariant tensor from coframe components.
  Tensor assemble(const Tensor& coframe_components) const;
  Form assemble(const AltForm<Expr>& coframe_components) const;

 private:
  Chart chart_;
  std::vector<Form> forms_;
  std::vector<VectorField> frame_;
  Matrix<Expr> a_;
};

}  // namespace g2a
