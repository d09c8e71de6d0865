#pragma once

// Test helpers and independent oracles. Nothing here calls into the
// library's own evaluation paths except for constructing values.

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "ccx/enumerator.hpp"
#include "ccx/machine.hpp"
#include "ccx/polygon.hpp"

namespace testing {

using ccx::Point;
using ccx::PolygonalFunction;
using ccx::Rational;

inline Rational R(std::int64_t n, std::int64_t d = 1) { return Rational(n, d); }

inline PolygonalFunction poly(std::vector<std::pair<Rational, Rational>> pts) {
  std::vector<Point> out;
  for (auto& [x, y] : pts) out.push_back({x, y});
  return PolygonalFunction(std::move(out));
}

// Uniform integer in [lo, hi] by rejection on a 64-bit draw.
inline std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do v = rng(); while (v >= limit);
  return lo + static_cast<std::int64_t>(v % span);
}

inline Rational draw_rational(std::mt19937_64& rng, std::int64_t max_abs_num, std::int64_t max_den) {
  return Rational(draw(rng, -max_abs_num, max_abs_num), draw(rng, 1, max_den));
}

// Point in [0,1] with denominator <= max_den.
inline Rational draw_unit(std::mt19937_64& rng, std::int64_t max_den) {
  std::int64_t d = draw(rng, 1, max_den);
  return Rational(draw(rng, 0, d), d);
}

inline PolygonalFunction draw_polygon(std::mt19937_64& rng, int max_points = 12, std::int64_t den = 32) {
  std::vector<Rational> xs{R(0), R(1)};
  int interior = static_cast<int>(draw(rng, 0, max_points - 2));
  for (int i = 0; i < interior; ++i) {
    std::int64_t d = draw(rng, 2, den);
    xs.push_back(R(draw(rng, 1, d - 1), d));
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Point> pts;
  for (auto& x : xs) pts.push_back({x, draw_rational(rng, den, den)});
  return PolygonalFunction(std::move(pts));
}

// Raw point list evaluation straight from the interpolation formula.
inline Rational eval_points(const std::vector<Point>& pts, const Rational& x) {
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (x <= pts[k].x) {
      const auto& a = pts[k - 1];
      const auto& b = pts[k];
      return (b.y * (x - a.x) + a.y * (b.x - x)) / (b.x - a.x);
    }
  }
  return pts.back().y;
}

inline Rational trapezoid_integral(const std::vector<Point>& pts) {
  Rational s;
  for (std::size_t k = 1; k < pts.size(); ++k)
    s += (pts[k].y + pts[k - 1].y) * (pts[k].x - pts[k - 1].x) / R(2);
  return s;
}

// Window sup/inf from first principles: a piecewise-linear function on a
// closed interval reaches its extremes at the interval ends or at a
// breakpoint inside it.
inline Rational omega_brute(const PolygonalFunction& f, const Rational& eps, const Rational& x) {
  Rational lo = std::max(x - eps, R(0));
  Rational hi = std::min(x + eps, R(1));
  std::vector<Rational> values{eval_points(f.points(), lo), eval_points(f.points(), hi)};
  for (const auto& p : f.points())
    if (lo <= p.x && p.x <= hi) values.push_back(p.y);
  auto [mn, mx] = std::minmax_element(values.begin(), values.end());
  return *mx - *mn;
}

// Constant machine whose output is the (delta, g) list.
inline ccx::Scheme list_machine(const Rational& delta, std::vector<std::pair<Rational, Rational>> pts) {
  std::vector<Point> out;
  for (auto& [x, y] : pts) out.push_back({x, y});
  return ccx::constant_machine(ccx::encode_candidate(delta, out));
}

// Four registry seeds with distinct (delta, g).
inline std::vector<ccx::Scheme> four_seeds() {
  return {
      list_machine(R(1, 4), {{R(0), R(0)}, {R(1), R(0)}}),
      list_machine(R(1, 2), {{R(0), R(0)}, {R(1, 2), R(1, 2)}, {R(1), R(0)}}),
      list_machine(R(1), {{R(0), R(1, 4)}, {R(1), R(1, 4)}}),
      list_machine(R(1, 3), {{R(0), R(3, 4)}, {R(1), R(0)}}),
  };
}

inline ccx::Scheme cheater() { return list_machine(R(1), {{R(0), R(0)}, {R(1), R(0)}}); }

}  // namespace testing
