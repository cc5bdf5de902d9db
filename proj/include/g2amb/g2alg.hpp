#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "g2amb/forms.hpp"
#include "g2amb/lie.hpp"
#include "g2amb/riemann.hpp"

namespace g2a {

using ThreeForm = AltForm<Scalar>;

Scalar sqrt2();
Scalar sqrt6();

ThreeForm standard_phi();
SMatrix standard_gram();
SMatrix j_block();  // [[0, -1], [1, 0]]

// e_k, 1-based as in the usual numbering.
SVector basis_vector(int k);

Scalar inner(const SMatrix& g, const SVector& x, const SVector& y);
// Phi(x, y, .) as a covector.
SVector contract2(const ThreeForm& phi, const SVector& x, const SVector& y);
// x cross y = -g^{-1} Phi(x, y, .)
SVector cross_product(const SVector& x, const SVector& y, const ThreeForm& phi, const SMatrix& g);
// -1/6 tr(z -> x cross (y cross z))
Scalar trace_form(const SVector& x, const SVector& y, const ThreeForm& phi, const SMatrix& g);
// Basis of {y : Phi(x, y, .) = 0}.
std::vector<SVector> annihilator(const SVector& x, const ThreeForm& phi);
// Basis of the g-orthogonal complement of a span.
std::vector<SVector> orthogonal(const std::vector<SVector>& span, const SMatrix& g);

// sqrt6 (X -| phi) ^ (Y -| phi) ^ phi = g(X, Y) vol on all coordinate basis pairs.
// Returns +1 if it holds for vol, -1 if it holds for -vol, 0 otherwise.
template <class T>
int h_identity_orientation(const AltForm<T>& phi, const std::function<T(std::size_t, std::size_t)>& g,
                           const AltForm<T>& vol, const T& root6) {
  const std::size_t n = phi.dim();
  int orientation = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<T> ei(n, T(0));
    ei[i] = T(1);
    AltForm<T> ai = phi.interior(ei);
    for (std::size_t j = i; j < n; ++j) {
      std::vector<T> ej(n, T(0));
      ej[j] = T(1);
      AltForm<T> lhs = root6 * ai.wedge(phi.interior(ej)).wedge(phi);
      AltForm<T> rhs = g(i, j) * vol;
      const bool plus = (lhs - rhs).is_zero_form();
      const bool minus = (lhs + rhs).is_zero_form();
      if (plus && minus) continue;  // both sides vanish
      const int o = plus ? 1 : minus ? -1 : 0;
      if (o == 0 || (orientation != 0 && o != orientation)) return 0;
      orientation = o;
    }
  }
  return orientation;
}

bool h_identity_check(const ThreeForm& phi, const SMatrix& g, const ThreeForm& vol);
// Field version: vol is the metric volume form from volume_form.
bool h_identity_check(const Form& phi, const MetricField& g, const Form& vol);

// Float evaluation of H(phi) for exploratory inputs; row-major 7x7.
std::vector<double> induced_metric_numeric(const std::vector<double>& phi_components);
std::vector<double> to_doubles(const ThreeForm& phi);

// Derivation action of an endomorphism on a 3-form: -(phi(Xu, v, w) + phi(u, Xv, w) + phi(u, v, Xw)).
ThreeForm derivation_action(const SMatrix& x, const ThreeForm& phi);
bool is_skew(const SMatrix& x, const SMatrix& g);

// One matrix per parameter of the block presentation: A (4 entries), X, Y, Z, W (2 each), r, s.
std::vector<SMatrix> g2_basis();
std::vector<SMatrix> k_basis();   // stabilizer of e_1 as listed: A in sl2, Z, W, s
std::vector<SMatrix> h5_basis();  // a12, Z2, s, W1, W2 as listed
// Annihilator of phi in gl(7), by solving the linear system directly.
std::vector<SMatrix> phi_annihilator(const ThreeForm& phi);

std::vector<SMatrix> stabilizer(const SVector& v, const std::vector<SMatrix>& algebra);
std::vector<SVector> fixed_vectors(const std::vector<SMatrix>& algebra, std::size_t n = 7);

enum class PairCase { K, H5, R3, SL2 };
std::string to_string(PairCase c);

struct PairClassification {
  PairCase label;
  std::size_t stabilizer_dim = 0;
  std::string fingerprint_label;
  bool agrees = false;  // fingerprint of the computed common stabilizer matches the label
};
// Throws std::invalid_argument if x or y is zero or not null.
PairClassification classify_pair(const SVector& x, const SVector& y);

// Rational null vector for the standard Gram via its hyperbolic pairs.
SVector random_null_vector(std::mt19937& rng);
SVector random_vector(std::mt19937& rng, int range = 5);

}  // namespace g2a
