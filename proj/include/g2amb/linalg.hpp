#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "g2amb/expr.hpp"

namespace g2a {

inline bool is_zero(double v) { return v == 0.0; }

inline std::size_t pivot_weight(const Scalar& s) { return s.terms().size(); }
inline std::size_t pivot_weight(const Expr& e) {
  std::size_t w = e.numerator().size();
  for (const auto& f : e.denominator()) w += f.p.size();
  return w;
}

// Dense matrix over an exact field (Scalar or Expr).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  std::vector<T> row(std::size_t i) const { return {a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_}; }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c;
    for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] += b.a_[k];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r = a;
    for (std::size_t k = 0; k < r.a_.size(); ++k) r.a_[k] -= b.a_[k];
    return r;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(k, j))) r(i, j) += a(i, k) * b(k, j);
      }
    return r;
  }
  friend Matrix operator*(const T& s, const Matrix& m) {
    Matrix r = m;
    for (auto& x : r.a_) x = s * x;
    return r;
  }
  std::vector<T> apply(const std::vector<T>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<T> r(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(v[j])) r[i] += (*this)(i, j) * v[j];
    return r;
  }
  bool is_zero_matrix() const {
    for (const auto& x : a_)
      if (!is_zero(x)) return false;
    return true;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.a_.size(); ++k)
      if (!is_zero(a.a_[k] - b.a_[k])) return false;
    return true;
  }
  const std::vector<T>& data() const { return a_; }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> a_;
};

template <class T>
struct Echelon {
  Matrix<T> m;                     // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column per nonzero row
  T det_factor = T(1);             // product of pivots with swap signs (for square inputs)
};

// Gauss-Jordan elimination; pivots prefer the sparsest candidate to limit expression growth.
template <class T>
Echelon<T> row_reduce(Matrix<T> m) {
  Echelon<T> e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t best = m.rows();
    for (std::size_t i = r; i < m.rows(); ++i)
      if (!is_zero(m(i, c)) && (best == m.rows() || pivot_weight(m(i, c)) < pivot_weight(m(best, c)))) best = i;
    if (best == m.rows()) {
      e.det_factor = T(0);
      continue;
    }
    if (best != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(best, j));
      e.det_factor = -e.det_factor;
    }
    T piv = m(r, c);
    e.det_factor *= piv;
    T inv = T(1) / piv;
    for (std::size_t j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  if (e.pivots.size() < m.rows()) e.det_factor = T(0);
  e.m = std::move(m);
  return e;
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return row_reduce(m).pivots.size();
}

template <class T>
T determinant(const Matrix<T>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return row_reduce(m).det_factor;
}

// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> kernel(const Matrix<T>& m) {
  Echelon<T> e = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : e.pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("inverse of a non-square matrix");
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = T(1);
  }
  Echelon<T> e = row_reduce(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw std::domain_error("singular matrix");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.m(i, n + j);
  return inv;
}

// Some solution of m x = b, or nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& m, const std::vector<T>& b) {
  Matrix<T> aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon<T> e = row_reduce(aug);
  std::vector<T> x(m.cols(), T(0));
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    x[e.pivots[r]] = e.m(r, m.cols());
  }
  return x;
}

// Rank of a family of vectors (rows).
template <class T>
std::size_t span_rank(const std::vector<std::vector<T>>& vs) {
  if (vs.empty()) return 0;
  return rank(Matrix<T>::from_rows(vs));
}

// Indices of a greedy maximal independent subfamily, in input order.
template <class T>
std::vector<std::size_t> independent_subset(const std::vector<std::vector<T>>& vs) {
  std::vector<std::size_t> chosen;
  std::vector<std::vector<T>> basis;  // kept in echelon form
  std::vector<std::size_t> lead;
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::vector<T> v = vs[k];
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (is_zero(v[lead[b]])) continue;
      T f = v[lead[b]];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(basis[b][j])) v[j] -= f * basis[b][j];
    }
    std::size_t l = 0;
    while (l < v.size() && is_zero(v[l])) ++l;
    if (l == v.size()) continue;
    T inv = T(1) / v[l];
    for (auto& x : v) x = x * inv;
    // keep earlier basis vectors reduced against the new lead
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (is_zero(basis[b][l])) continue;
      T f = basis[b][l];
      for (std::size_t j = 0; j < v.size(); ++j)
        if (!is_zero(v[j])) basis[b][j] -= f * v[j];
    }
    basis.push_back(std::move(v));
    lead.push_back(l);
    chosen.push_back(k);
  }
  return chosen;
}

}  // namespace g2a
