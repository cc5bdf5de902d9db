#pragma once

#include <map>
#include <string>
#include <vector>

#include "g2amb/lie.hpp"
#include "g2amb/riemann.hpp"

namespace g2a {

using Point = std::map<std::string, Expr>;

// Value of e at a point with rational coordinates; throws std::domain_error when a
// denominator vanishes there or e does not become constant.
Scalar evaluate_at(const Expr& e, const Point& point);
// False when substituting the point leaves the exact field, e.g. exp of a nonzero rational.
bool has_exact_value(const Expr& e, const Point& point);
// A (1,1) tensor at a point as a matrix: m(a, b) = T^a_b.
SMatrix endomorphism_at(const Tensor& t, const Point& point);

struct FiltrationLevel {
  int r = 0;
  std::vector<SMatrix> span;  // independent endomorphisms spanning V^r at the point
  std::size_t generators = 0;  // nonzero index-tuple contractions examined
};

class Filtration {
 public:
  Filtration(Chart chart, Point point) : chart_(std::move(chart)), point_(std::move(point)) {}
  const Chart& chart() const { return chart_; }
  const Point& point() const { return point_; }
  const std::vector<FiltrationLevel>& levels() const { return levels_; }
  std::vector<std::size_t> dims() const;
  const std::vector<SMatrix>& span(int r) const { return levels_.at(static_cast<std::size_t>(r)).span; }
  void push(FiltrationLevel level) { levels_.push_back(std::move(level)); }

 private:
  Chart chart_;
  Point point_;
  std::vector<FiltrationLevel> levels_;
};

// V^0 is spanned by the endomorphisms R(X, Y); V^r adds (nabla^r R)(X, Y; Z_1..Z_r).
// Stops early once the dimension is unchanged over two consecutive levels.
Filtration v_filtration(const MetricField& g, int depth, const Point& point);

// True iff the pointwise span of `expected` equals V^r.
bool span_matches(const Filtration& f, int r, const std::vector<Tensor>& expected);

}  // namespace g2a
