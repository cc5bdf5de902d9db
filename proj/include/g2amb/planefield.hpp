#pragma once

#include <string>
#include <vector>

#include "g2amb/forms.hpp"

namespace g2a {

// A plane field given by spanning vector fields and the one-forms annihilating it.
class PlaneField {
 public:
  PlaneField(Chart chart, std::vector<VectorField> span, std::vector<Form> annihilator);

  const Chart& chart() const { return chart_; }
  const std::vector<VectorField>& span() const { return span_; }
  const std::vector<Form>& annihilator() const { return ann_; }
  // Spanning sets of [D, D] and [D, [D, D]]: D followed by the new brackets.
  const std::vector<VectorField>& derived() const { return derived_; }
  const std::vector<VectorField>& second_derived() const { return second_; }

 private:
  Chart chart_;
  std::vector<VectorField> span_;
  std::vector<Form> ann_;
  std::vector<VectorField> derived_, second_;
};

// D_F = ker{omega^1, omega^2, omega^3} = <E4, E5> on (x, y, p, q, z).
PlaneField from_monge(const Expr& f);

// Rank over the field of rational functions, i.e. at a generic point.
std::size_t generic_rank(const std::vector<VectorField>& fields);

struct GenericityReport {
  std::size_t rank_d = 0, rank_dd = 0, rank_ddd = 0;
  bool generic = false;  // ranks (2, 3, 5)
  // det(E4, E5, [E4,E5], [E4,[E4,E5]], [E5,[E4,E5]]) when all five are present: its zero set is
  // where genericity fails.
  Expr degeneracy;
};
GenericityReport genericity_check(const PlaneField& d);

// True iff omega([xi, X]) = 0 for every annihilator omega and spanning X.
bool symmetry_check(const VectorField& xi, const PlaneField& d);

// Binary quartic sum a_i u^i v^(4-i).
struct Quartic {
  std::vector<Expr> a = std::vector<Expr>(5);
  bool is_zero() const;
};

// (0, 0, 0, 0, (F'')^-4 Psi[F'']) in dq; throws std::invalid_argument if F'' = 0.
Quartic cartan_quartic_fq(const Expr& f);

// Multiplicity partition of the complex roots in decreasing order, projectively (a root at
// infinity counts); {} stands for the zero quartic, shown as [inf]. Coefficients must be constant.
std::vector<int> root_type(const Quartic& q);
std::string root_type_string(const std::vector<int>& type);

}  // namespace g2a
