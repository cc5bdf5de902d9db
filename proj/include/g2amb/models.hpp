#pragma once

#include <functional>
#include <string>
#include <vector>

#include "g2amb/forms.hpp"
#include "g2amb/parse.hpp"
#include "g2amb/riemann.hpp"

namespace g2a {

// (x, y, p, q, z) and (t, x, y, p, q, z, rho).
const Chart& base_chart();
const Chart& ambient_chart();

// omega^1..omega^5 of the Monge presentation of z' = F(x, y, y', y'', z) on the base chart.
std::vector<Form> monge_coframe(const Expr& f);

// Pullback along the projection (t, u, rho) -> u.
Form lift(const Form& a);
Tensor lift(const Tensor& t);
VectorField lift(const VectorField& v);

// (dt, omega^1..omega^5, drho) on the ambient chart.
Coframe ambient_coframe(const std::vector<Form>& omega);

// 2 rho dt^2 + 2 t dt drho + t^2 (g + rho * correction) on the ambient chart.
Tensor ambient_metric(const Tensor& g, const Tensor& correction);

// Builds sum c_k w_a w_b from symmetric products; terms are (coefficient, a, b) with 0-based form indices.
struct QuadTerm {
  Expr c;
  int a, b;
};
Tensor quadratic(const std::vector<Form>& forms, const std::vector<QuadTerm>& terms);

// A second-order ODE rewrite sigma'' = a sigma' + b sigma for a fresh formal solution symbol.
SymbolPtr ode_solution(const std::string& name, const std::string& argument, const Expr& a, const Expr& b);

struct IModel {
  Expr I;
  Expr F;
  std::vector<Form> omega;  // base coframe
  Coframe base_frame;
  Coframe amb_frame;
  MetricField g;
  MetricField g_amb;
  Scalar C;
  Form phi_amb;                // parallel 3-form
  Form phi;                    // normal conformal Killing 2-form on the base
  Tensor expected_curvature;   // (0,4) on the ambient chart
  std::vector<Tensor> psi;     // psi_1..psi_5 as (1,1) ambient tensors
  Expr ode_a, ode_b;           // sigma'' = a sigma' + b sigma
  std::string ode_argument = "x";

  // t^-1 (-2/3 sigma' d_z + sigma d_rho)
  VectorField xi(const Expr& sigma) const;
  VectorField symmetry(const Expr& sigma) const;  // -1/9 (sigma E3 + 4 sigma' E4)
};

// I is an Expr in x: an opaque symbol, a polynomial specialization, or a constant.
IModel build_i_model(const Expr& I, Exec exec = Exec::from_env());

struct FqModel {
  Expr F;
  std::vector<Form> omega;
  Coframe base_frame;
  Coframe amb_frame;
  MetricField g;  // last term read as (omega^3)^2
  MetricField g_amb;
  Scalar C;
  Form phi_amb;
  Form phi;
  Expr psi_f2;                // Psi[F'']
  Tensor expected_curvature;  // (0,4)
  Expr ode_a, ode_b;
  std::string ode_argument = "q";
  std::vector<VectorField> symmetries;  // generators on the base chart

  // (1/15) (F'')^-4 t^-1 sigma' d_y + t^-1 sigma d_rho
  VectorField xi(const Expr& sigma) const;
};

// F is an Expr in q with F'' nonzero; throws std::invalid_argument otherwise.
FqModel build_fq_model(const Expr& F, Exec exec = Exec::from_env());

// (omega^3)^{(x) k} with coefficient -20 (F'')^4: the last term of the F(q) representative for exponent k.
Tensor fq_last_term(const Expr& F, int k);

Expr psi_operator(const Expr& u, const std::string& var = "q");

// The explicit section eta^1..eta^5, pi^1, pi^2 on the base chart and the right-hand sides of
// the seven structure equations (d eta^1..d eta^5, d pi^1, d pi^2) built from them.
struct CartanSection {
  Expr I;
  std::vector<Form> eta;  // eta^1..eta^5
  Form pi1, pi2;
  std::vector<std::string> names;
  std::vector<Form> rhs;
};
// with_y2 adds the factor y^2 to the (1 + I^2 - I'') term of eta^1.
CartanSection build_cartan_section(const Expr& I, bool with_y2 = false);

struct EquationResidual {
  std::string name;
  Form residual;  // d(lhs) - rhs
  bool zero = false;
  std::string witness;
};
std::vector<EquationResidual> structure_equation_residuals(const CartanSection& s);

// Text of the first nonzero component of a form, e.g. "dx^dp: 2*q".
std::string form_witness(const Chart& chart, const Form& a);

// sigma -> phi^{ab} sigma_b + 1/4 (nabla_b phi^{ba}) sigma on the base chart.
VectorField aes_to_symmetry(const Expr& sigma, const MetricField& g, const Form& phi);
// xi -> phi_{ab} nabla^a xi^b - 1/2 xi^a nabla^b phi_{ab}.
Expr symmetry_to_aes(const VectorField& xi, const MetricField& g, const Form& phi);

// Checks for xi^{sigma_1}, xi^{sigma_2} built from two formal ODE solutions: null, parallel,
// independent, and Phi(xi_1, xi_2, .) = 0.
std::vector<AxiomCheck> parallel_pair_check(const MetricField& g_amb, const Form& phi_amb,
                                            const std::function<VectorField(const Expr&)>& xi,
                                            const Expr& ode_a, const Expr& ode_b, const std::string& argument);
std::vector<AxiomCheck> parallel_pair_check(const IModel& m);
std::vector<AxiomCheck> parallel_pair_check(const FqModel& m);

// iota_{d_t} Phi restricted to {t = 1, rho = 0}, as a base 2-form.
Form defining_form_from_ambient(const Form& phi_amb);

// Residual gamma'(tau) - xi^sigma(gamma(tau)) for the listed integral curve on {t = C / sigma(x)},
// as (z, rho) components; sigma is a formal solution of the I-family ODE.
struct IntegralCurveResidual {
  Expr z, rho;
  Expr z_ratio;  // listed z-velocity over the derived one
};
IntegralCurveResidual integral_curve_residual(const IModel& m);

// Symbol table with the model coordinates and the given function symbols.
SymbolTable model_symbols();

}  // namespace g2a
