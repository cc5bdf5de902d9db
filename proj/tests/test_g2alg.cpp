#include <cmath>
#include <random>

#include "doctest.h"
#include "g2amb/g2alg.hpp"
#include "g2amb/lie.hpp"

using namespace g2a;

namespace {

SVector e(int k) { return basis_vector(k); }

bool same_span(const std::vector<SMatrix>& a, const std::vector<SMatrix>& b) {
  std::vector<SVector> fa, all;
  for (const auto& m : a) fa.push_back(flatten(m));
  all = fa;
  for (const auto& m : b) all.push_back(flatten(m));
  std::vector<SVector> fb;
  for (const auto& m : b) fb.push_back(flatten(m));
  return span_rank(fa) == span_rank(fb) && span_rank(all) == span_rank(fa);
}

ThreeForm volume7(const Scalar& v) { return v * ThreeForm::basis(7, {0, 1, 2, 3, 4, 5, 6}); }

}  // namespace

TEST_CASE("standard 3-form and Gram matrix") {
  const ThreeForm phi = standard_phi();
  CHECK(phi.component({0, 4, 5}) == -sqrt2() / sqrt6());
  CHECK(phi.component({0, 3, 6}) == sqrt6().inverse());
  CHECK(phi.component({5, 4, 0}) == sqrt2() / sqrt6());
  const SMatrix g = standard_gram();
  CHECK(g(0, 6) == Scalar(1));
  CHECK(g(3, 3) == Scalar(-1));
  CHECK(g(1, 4) == Scalar(1));
  CHECK(g(2, 5) == Scalar(1));
  CHECK(g == g.transpose());
  CHECK(signature(g) == Signature{3, 4, 0});
}

TEST_CASE("H(phi) identity") {
  const ThreeForm phi = standard_phi();
  const SMatrix g = standard_gram();
  // |det g| = 1
  CHECK(h_identity_check(phi, g, volume7(Scalar(1))));
  CHECK_FALSE(h_identity_check(phi, Scalar(2) * g, volume7(Scalar(1))));
  const Scalar l(2);
  CHECK(h_identity_check(l * l * l * phi, l * l * g, volume7(l * l * l * l * l * l * l)));
}

TEST_CASE("numeric H(phi) reproduces the Gram matrix") {
  const std::vector<double> h = induced_metric_numeric(to_doubles(standard_phi()));
  const SMatrix g = standard_gram();
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(std::abs(h[i * 7 + j] - g(i, j).to_double()) < 1e-12);
  std::vector<double> scaled = to_doubles(Scalar(8) * standard_phi());
  const std::vector<double> h2 = induced_metric_numeric(scaled);
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) CHECK(std::abs(h2[i * 7 + j] - 4 * g(i, j).to_double()) < 1e-12);
}

TEST_CASE("cross product trace form") {
  const ThreeForm phi = standard_phi();
  const SMatrix g = standard_gram();
  std::mt19937 rng(7);
  for (int k = 0; k < 20; ++k) {
    SVector x = random_vector(rng), y = random_vector(rng);
    // With the normalized form the trace form is a sixth of the inner product.
    CHECK(trace_form(x, y, phi, g) == Scalar(ratio(1, 6)) * inner(g, x, y));
    SVector a = cross_product(x, y, phi, g), b = cross_product(y, x, phi, g);
    for (std::size_t i = 0; i < 7; ++i) CHECK((a[i] + b[i]).is_zero());
    CHECK(inner(g, a, x).is_zero());
  }
}

TEST_CASE("annihilators") {
  const ThreeForm phi = standard_phi();
  CHECK(annihilator(e(1), phi).size() == 3);
  auto ann4 = annihilator(e(4), phi);
  REQUIRE(ann4.size() == 1);
  CHECK(span_rank(std::vector<SVector>{ann4[0], e(4)}) == 1);
}

TEST_CASE("flag inclusions for random null vectors") {
  const ThreeForm phi = standard_phi();
  const SMatrix g = standard_gram();
  std::mt19937 rng(11);
  for (int k = 0; k < 10; ++k) {
    SVector x = random_null_vector(rng);
    REQUIRE(inner(g, x, x).is_zero());
    auto ann = annihilator(x, phi);
    auto ann_perp = orthogonal(ann, g);
    auto x_perp = orthogonal({x}, g);
    CHECK(ann.size() == 3);
    CHECK(ann_perp.size() == 4);
    CHECK(x_perp.size() == 6);
    auto contains = [](const std::vector<SVector>& big, const std::vector<SVector>& small) {
      std::vector<SVector> all = big;
      all.insert(all.end(), small.begin(), small.end());
      return span_rank(all) == span_rank(big);
    };
    CHECK(contains(ann, {x}));
    CHECK(contains(ann_perp, ann));
    CHECK(contains(x_perp, ann_perp));
  }
}

TEST_CASE("g2 basis") {
  const auto b = g2_basis();
  REQUIRE(b.size() == 14);
  std::vector<SVector> flat;
  for (const auto& m : b) flat.push_back(flatten(m));
  CHECK(span_rank(flat) == 14);
  for (const auto& m : b) {
    CHECK(is_skew(m, standard_gram()));
    CHECK(derivation_action(m, standard_phi()).is_zero_form());
  }
  const LieBasis g2 = LieBasis::from_basis(b);
  CHECK(g2.is_closed());
  CHECK(g2.jacobi());
  const auto f = lie_fingerprint(g2);
  CHECK(f.label == "g2");
  CHECK(f.semisimple);
  CHECK(same_span(phi_annihilator(standard_phi()), b));
}

TEST_CASE("stabilizers and listed subalgebras") {
  const auto g2 = g2_basis();
  const auto k = stabilizer(e(1), g2);
  CHECK(k.size() == 8);
  CHECK(same_span(k, k_basis()));
  CHECK(lie_fingerprint(k).label == "k");
  const auto h5 = stabilizer(e(2), k);
  CHECK(h5.size() == 5);
  CHECK(lie_fingerprint(h5).label == "h5");
  // The displayed a12 generator carries +a12 at (6,5); only -a12 there is skew, so it is checked separately.
  const auto listed = h5_basis();
  LieBasis h5_algebra = LieBasis::from_basis(h5);
  for (std::size_t i = 1; i < listed.size(); ++i) CHECK(h5_algebra.contains(listed[i]));
  CHECK_FALSE(h5_algebra.contains(listed[0]));
  CHECK_FALSE(is_skew(listed[0], standard_gram()));
  SMatrix a12 = listed[0];
  a12(5, 4) = Scalar(-1);
  CHECK(h5_algebra.contains(a12));
  const auto s = stabilizer(e(7), k);
  CHECK(s.size() == 3);
  CHECK(lie_fingerprint(s).label == "sl2");
}

TEST_CASE("classify_pair") {
  struct Case {
    SVector y;
    PairCase label;
    std::size_t dim;
  };
  const std::vector<Case> cases = {
      {SVector{3, 0, 0, 0, 0, 0, 0}, PairCase::K, 8},
      {e(2), PairCase::H5, 5},
      {e(5), PairCase::R3, 3},
      {e(7), PairCase::SL2, 3},
  };
  for (const auto& c : cases) {
    const auto r = classify_pair(e(1), c.y);
    CHECK(r.label == c.label);
    CHECK(r.stabilizer_dim == c.dim);
    CHECK(r.agrees);
  }
  CHECK_THROWS_AS(classify_pair(e(1), e(4)), std::invalid_argument);
  CHECK_THROWS_AS(classify_pair(SVector(7), e(1)), std::invalid_argument);
}

TEST_CASE("random null vectors have 8-dimensional stabilizers") {
  std::mt19937 rng(3);
  const auto g2 = g2_basis();
  for (int k = 0; k < 50; ++k) CHECK(stabilizer(random_null_vector(rng), g2).size() == 8);
}

TEST_CASE("fixed vectors") {
  const auto h5 = fixed_vectors(h5_basis());
  CHECK(h5.size() == 2);
  CHECK(span_rank(std::vector<SVector>{h5[0], h5[1], e(1), e(2)}) == 2);
  CHECK(fixed_vectors(g2_basis()).empty());
  CHECK(fixed_vectors({}).size() == 7);
}
