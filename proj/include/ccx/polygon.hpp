#pragma once

// Polygonal functions on [0,1]: continuous, piecewise linear, with rational
// breakpoints 0 = p_0 < ... < p_m = 1 and rational values q_k. All operations
// are exact and return functions in canonical form (no interior breakpoint is
// collinear with its neighbours), so equality is list equality.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ccx/rational.hpp"

namespace ccx {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Point {
  Rational x;
  Rational y;
  friend bool operator==(const Point&, const Point&) = default;
};

class PolygonalFunction {
 public:
  // Throws ConstructionError unless the x's run strictly increasing from 0 to 1.
  explicit PolygonalFunction(std::vector<Point> points);

  static PolygonalFunction constant(const Rational& c);
  static PolygonalFunction identity();

  const std::vector<Point>& points() const { return points_; }
  std::vector<Rational> breakpoints() const;

  // Throws DomainError outside [0,1].
  Rational operator()(const Rational& x) const;
  Rational integral() const;
  Rational min_value() const;
  Rational max_value() const;
  bool nonnegative() const { return min_value().sign() >= 0; }

  friend bool operator==(const PolygonalFunction&, const PolygonalFunction&) = default;

 private:
  std::vector<Point> points_;
};

// Sorted union of both breakpoint sets.
std::vector<Rational> merged_breakpoints(const PolygonalFunction& f, const PolygonalFunction& g);

PolygonalFunction lattice_sup(const PolygonalFunction& f, const PolygonalFunction& g);
PolygonalFunction lattice_inf(const PolygonalFunction& f, const PolygonalFunction& g);

// a*f + b*g
PolygonalFunction affine_combine(const PolygonalFunction& f, const PolygonalFunction& g,
                                 const Rational& a, const Rational& b);
PolygonalFunction scale(const PolygonalFunction& f, const Rational& c);
PolygonalFunction operator+(const PolygonalFunction& f, const PolygonalFunction& g);

// x -> height * max(0, 1 - |x - centre| / half_width), restricted to [0,1].
PolygonalFunction bump(const Rational& height, const Rational& half_width, const Rational& centre);

// x -> min(1, max(0, 2 - |2x - b - a| / (b - a))), restricted to [0,1].
// Plateau 1 on [a,b], ramps reach 0 half an interval length outside.
PolygonalFunction trapezoid_phi(const Rational& a, const Rational& b);

// x -> sup { |f(t) - f(s)| : t, s in [x - eps, x + eps] cap [0,1] }.
PolygonalFunction oscillation(const PolygonalFunction& f, const Rational& eps);

// Single-point evaluation of the same quantity from the finite candidate set
// (window ends plus breakpoints inside the window). Used as a test oracle.
Rational oscillation_oracle_at(const PolygonalFunction& f, const Rational& eps, const Rational& x);

enum class Side { below, above };

// Supremum of radii r such that f < c (Side::below) or f > c (Side::above)
// holds on [x0 - r, x0 + r] cap [0,1]. When the inequality holds on the whole
// domain, returns max(x0, 1 - x0). Throws DomainError if it fails at x0.
Rational strict_level_radius(const PolygonalFunction& f, const Rational& x0, const Rational& c,
                             Side side);

class TaggedPartition {
 public:
  enum class Tag { left, right, middle };

  // cuts: 0 = x_0 < ... < x_n = 1; tags[i] in [x_i, x_{i+1}].
  TaggedPartition(std::vector<Rational> cuts, std::vector<Rational> tags);
  static TaggedPartition uniform(std::size_t cells, Tag tag);

  const std::vector<Rational>& cuts() const { return cuts_; }
  const std::vector<Rational>& tags() const { return tags_; }
  Rational mesh() const;

 private:
  std::vector<Rational> cuts_;
  std::vector<Rational> tags_;
};

Rational riemann_sum(const PolygonalFunction& f, const TaggedPartition& tau);

}  // namespace ccx
