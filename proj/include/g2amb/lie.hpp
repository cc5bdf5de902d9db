#pragma once

#include <string>
#include <vector>

#include "g2amb/linalg.hpp"

namespace g2a {

using SMatrix = Matrix<Scalar>;
using SVector = std::vector<Scalar>;

SMatrix commutator(const SMatrix& a, const SMatrix& b);

struct Signature {
  int positive = 0, negative = 0, zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
// Signature of a symmetric matrix by congruence with exact pivots.
Signature signature(const SMatrix& m);

// A Lie subalgebra of gl(n) with a basis and structure constants.
class LieBasis {
 public:
  LieBasis() = default;
  // Bracket-closes the span of the generators.
  static LieBasis generated_by(const std::vector<SMatrix>& generators);
  // Takes the span as given (no closure); throws if the matrices are dependent.
  static LieBasis from_basis(std::vector<SMatrix> basis);

  std::size_t dim() const { return basis_.size(); }
  std::size_t size() const { return n_; }
  const std::vector<SMatrix>& basis() const { return basis_; }
  const SMatrix& operator[](std::size_t i) const { return basis_.at(i); }
  // Coordinates of m in the basis, or nullopt if m is outside the span.
  std::optional<SVector> coordinates(const SMatrix& m) const;
  bool contains(const SMatrix& m) const { return coordinates(m).has_value(); }
  bool is_closed() const;
  // c[i][j][k]: [b_i, b_j] = sum_k c[i][j][k] b_k; requires closure.
  const std::vector<std::vector<SVector>>& structure_constants() const;
  bool jacobi() const;

 private:
  std::size_t n_ = 0;
  std::vector<SMatrix> basis_;
  mutable std::vector<std::vector<SVector>> c_;
};

SVector flatten(const SMatrix& m);

struct LieFingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central;  // dims of g, [g,g], [g,[g,g]], ... down to the limit
  std::vector<std::size_t> derived;        // dims of g, [g,g], [[g,g],[g,g]], ...
  std::size_t center = 0;
  std::size_t killing_rank = 0;
  Signature killing_signature;
  bool nilpotent = false;
  bool solvable = false;
  bool semisimple = false;
  int nilpotency_step = 0;  // 0 unless nilpotent; 1 for abelian nonzero algebras
  std::string label;        // trivial, R3, sl2, h5, k, g2 or unknown
};

LieFingerprint lie_fingerprint(const std::vector<SMatrix>& generators);
LieFingerprint lie_fingerprint(const LieBasis& algebra);

}  // namespace g2a
