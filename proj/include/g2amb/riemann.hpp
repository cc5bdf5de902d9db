#pragma once

#include <string>
#include <vector>

#include "g2amb/forms.hpp"
#include "g2amb/parallel.hpp"

namespace g2a {

// Symmetric (0,2) metric on a chart with its inverse and Levi-Civita connection,
// computed once at construction.
class MetricField {
 public:
  MetricField() = default;
  MetricField(Chart chart, Tensor g, Exec exec = Exec::from_env());

  const Chart& chart() const { return chart_; }
  std::size_t dim() const { return chart_.dim(); }
  const Tensor& tensor() const { return g_; }
  const Expr& operator()(std::size_t i, std::size_t j) const { return g_.at({int(i), int(j)}); }
  const Matrix<Expr>& inverse() const { return inv_; }
  const Expr& determinant() const { return det_; }
  // Gamma^a_{bc} as a (1,2) tensor.
  const Tensor& christoffel() const { return gamma_; }
  Exec exec() const { return exec_; }

  VectorField raise(const Form& a) const;
  Form lower(const VectorField& x) const;
  Expr inner(const VectorField& x, const VectorField& y) const;

 private:
  Chart chart_;
  Tensor g_;
  Matrix<Expr> inv_;
  Expr det_;
  Tensor gamma_;
  Exec exec_;
};

Tensor christoffel_symbols(const Chart& chart, const Tensor& g, const Matrix<Expr>& inv, Exec exec);

struct Curvature {
  Tensor up;     // R^a_{bcd}, with R(d_c, d_d) d_b = R^a_{bcd} d_a
  Tensor down;   // R_{abcd} = g_{ae} R^e_{bcd}
  Tensor ricci;  // Ric_{bd} = R^a_{bad}
};

Curvature riemann_ricci(const MetricField& g);
Expr scalar_curvature(const MetricField& g, const Tensor& ricci);

// Appends one covariant slot (the differentiation direction) after the existing indices.
Tensor covariant_derivative(const MetricField& g, const Tensor& t);
// nabla_X Y for vector fields.
VectorField covariant_derivative(const MetricField& g, const VectorField& x, const VectorField& y);

// Exact checks of pair symmetry, both antisymmetries and the first Bianchi identity.
struct CurvatureSymmetries {
  bool antisymmetric_first = true;
  bool antisymmetric_last = true;
  bool pair_symmetric = true;
  bool bianchi = true;
  bool all() const { return antisymmetric_first && antisymmetric_last && pair_symmetric && bianchi; }
};
CurvatureSymmetries check_symmetries(const Tensor& down);

struct AxiomCheck {
  std::string name;
  bool ok = false;
  std::string witness;  // first nonzero residual component, empty when ok
};

// Homogeneity, initial condition at {rho = 0, t = 1}, straightness and Ricci flatness of an
// ambient candidate on the chart (t, base coordinates..., rho).
std::vector<AxiomCheck> ambient_axioms(const MetricField& ambient, const MetricField& base,
                                       const std::string& t = "t", const std::string& rho = "rho");

// Trace-free part of L_xi g.
Tensor conformal_killing_residual(const MetricField& g, const VectorField& xi);

struct EinsteinResidual {
  Tensor ricci;  // Ric(sigma^-2 g)
  Expr lambda;   // Ric = 2 lambda (n - 1) sigma^-2 g holds iff the trace-free part of ricci vanishes
};
EinsteinResidual einstein_scale_residual(const Expr& sigma, const MetricField& g);

// sqrt|det| omega^1 ^ ... ^ omega^n where det is the determinant of g over the coframe.
// Throws std::domain_error when the root is not extractable or g is degenerate.
Form volume_form(const MetricField& g, const Coframe& coframe);

// Text of the first nonzero component, or empty.
std::string first_nonzero_witness(const Tensor& t);

}  // namespace g2a
