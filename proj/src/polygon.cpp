#include "ccx/polygon.hpp"

#include <algorithm>
#include <optional>

namespace ccx {

namespace {

const Rational kZero{0};
const Rational kOne{1};

bool collinear(const Point& a, const Point& b, const Point& c) {
  return (b.y - a.y) * (c.x - b.x) == (c.y - b.y) * (b.x - a.x);
}

void sort_unique(std::vector<Rational>& xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Value at x of the segment through (x0, y0), (x1, y1).
Rational lerp(const Rational& x0, const Rational& y0, const Rational& x1, const Rational& y1,
              const Rational& x) {
  return (y1 * (x - x0) + y0 * (x1 - x)) / (x1 - x0);
}

// Samples fn at the given abscissae (plus 0 and 1), keeping those in [0,1].
// Correct whenever fn is piecewise linear with all kinks among xs.
template <class Fn>
PolygonalFunction sample(std::vector<Rational> xs, Fn&& fn) {
  xs.push_back(kZero);
  xs.push_back(kOne);
  std::erase_if(xs, [](const Rational& x) { return x < kZero || x > kOne; });
  sort_unique(xs);
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (auto& x : xs) {
    Rational y = fn(x);
    pts.push_back({std::move(x), std::move(y)});
  }
  return PolygonalFunction(std::move(pts));
}

// Line over a cell [c0, c1], stored by its end values.
struct CellLine {
  Rational v0;
  Rational v1;
};

Rational line_at(const CellLine& l, const Rational& c0, const Rational& c1, const Rational& x) {
  return lerp(c0, l.v0, c1, l.v1, x);
}

// Crossing of two lines strictly inside (c0, c1), if any.
std::optional<Rational> crossing(const CellLine& a, const CellLine& b, const Rational& c0,
                                 const Rational& c1) {
  Rational d0 = a.v0 - b.v0;
  Rational d1 = a.v1 - b.v1;
  if (d0.sign() * d1.sign() >= 0) return std::nullopt;
  return c0 + (c1 - c0) * d0 / (d0 - d1);
}

}  // namespace

PolygonalFunction::PolygonalFunction(std::vector<Point> points) {
  if (points.size() < 2) throw ConstructionError("polygonal function needs at least two points");
  if (points.front().x != kZero) throw ConstructionError("first breakpoint must be 0");
  if (points.back().x != kOne) throw ConstructionError("last breakpoint must be 1");
  for (std::size_t k = 1; k < points.size(); ++k)
    if (!(points[k - 1].x < points[k].x))
      throw ConstructionError("breakpoints must be strictly increasing");

  points_.reserve(points.size());
  for (auto& p : points) {
    if (points_.size() >= 2 && collinear(points_[points_.size() - 2], points_.back(), p))
      points_.pop_back();
    points_.push_back(std::move(p));
  }
}

PolygonalFunction PolygonalFunction::constant(const Rational& c) {
  return PolygonalFunction({{kZero, c}, {kOne, c}});
}

PolygonalFunction PolygonalFunction::identity() {
  return PolygonalFunction({{kZero, kZero}, {kOne, kOne}});
}

std::vector<Rational> PolygonalFunction::breakpoints() const {
  std::vector<Rational> xs;
  xs.reserve(points_.size());
  for (const auto& p : points_) xs.push_back(p.x);
  return xs;
}

Rational PolygonalFunction::operator()(const Rational& x) const {
  if (x < kZero || x > kOne) throw DomainError("evaluation point " + x.str() + " outside [0,1]");
  auto it = std::lower_bound(points_.begin(), points_.end(), x,
                             [](const Point& p, const Rational& v) { return p.x < v; });
  if (it->x == x) return it->y;
  const Point& hi = *it;
  const Point& lo = *(it - 1);
  return lerp(lo.x, lo.y, hi.x, hi.y, x);
}

Rational PolygonalFunction::integral() const {
  Rational sum;
  for (std::size_t k = 1; k < points_.size(); ++k)
    sum += (points_[k].y + points_[k - 1].y) * (points_[k].x - points_[k - 1].x);
  return sum / Rational(2);
}

Rational PolygonalFunction::min_value() const {
  return std::min_element(points_.begin(), points_.end(),
                          [](const Point& a, const Point& b) { return a.y < b.y; })
      ->y;
}

Rational PolygonalFunction::max_value() const {
  return std::max_element(points_.begin(), points_.end(),
                          [](const Point& a, const Point& b) { return a.y < b.y; })
      ->y;
}

std::vector<Rational> merged_breakpoints(const PolygonalFunction& f, const PolygonalFunction& g) {
  std::vector<Rational> xs = f.breakpoints();
  for (const auto& p : g.points()) xs.push_back(p.x);
  sort_unique(xs);
  return xs;
}

namespace {

template <class Pick>
PolygonalFunction lattice(const PolygonalFunction& f, const PolygonalFunction& g, Pick pick) {
  std::vector<Rational> xs = merged_breakpoints(f, g);
  std::vector<Rational> cuts = xs;
  for (std::size_t k = 1; k < xs.size(); ++k) {
    CellLine a{f(xs[k - 1]), f(xs[k])};
    CellLine b{g(xs[k - 1]), g(xs[k])};
    if (auto c = crossing(a, b, xs[k - 1], xs[k])) cuts.push_back(*c);
  }
  return sample(std::move(cuts), [&](const Rational& x) { return pick(f(x), g(x)); });
}

}  // namespace

PolygonalFunction lattice_sup(const PolygonalFunction& f, const PolygonalFunction& g) {
  return lattice(f, g, [](const Rational& a, const Rational& b) { return max(a, b); });
}

PolygonalFunction lattice_inf(const PolygonalFunction& f, const PolygonalFunction& g) {
  return lattice(f, g, [](const Rational& a, const Rational& b) { return min(a, b); });
}

PolygonalFunction affine_combine(const PolygonalFunction& f, const PolygonalFunction& g,
                                 const Rational& a, const Rational& b) {
  return sample(merged_breakpoints(f, g), [&](const Rational& x) { return a * f(x) + b * g(x); });
}

PolygonalFunction scale(const PolygonalFunction& f, const Rational& c) {
  std::vector<Point> pts = f.points();
  for (auto& p : pts) p.y *= c;
  return PolygonalFunction(std::move(pts));
}

PolygonalFunction operator+(const PolygonalFunction& f, const PolygonalFunction& g) {
  return affine_combine(f, g, kOne, kOne);
}

PolygonalFunction bump(const Rational& height, const Rational& half_width, const Rational& centre) {
  if (height.sign() <= 0) throw DomainError("bump height must be positive");
  if (half_width.sign() <= 0) throw DomainError("bump half-width must be positive");
  if (centre <= kZero || centre >= kOne) throw DomainError("bump centre must lie in (0,1)");
  return sample({centre - half_width, centre, centre + half_width}, [&](const Rational& x) {
    return height * max(kZero, kOne - abs(x - centre) / half_width);
  });
}

PolygonalFunction trapezoid_phi(const Rational& a, const Rational& b) {
  if (!(a < b)) throw DomainError("trapezoid interval must satisfy a < b");
  Rational len = b - a;
  Rational half = len / Rational(2);
  return sample({a - half, a, b, b + half}, [&](const Rational& x) {
    Rational raw = Rational(2) - abs(Rational(2) * x - b - a) / len;
    return min(kOne, max(kZero, raw));
  });
}

PolygonalFunction oscillation(const PolygonalFunction& f, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("oscillation window must be positive");
  std::vector<Rational> cells{kZero, kOne};
  for (const auto& p : f.points()) {
    cells.push_back(p.x);
    cells.push_back(max(kZero, min(kOne, p.x - eps)));
    cells.push_back(max(kZero, min(kOne, p.x + eps)));
  }
  sort_unique(cells);

  auto lo = [&](const Rational& x) { return max(kZero, x - eps); };
  auto hi = [&](const Rational& x) { return min(kOne, x + eps); };

  std::vector<Point> out;
  for (std::size_t k = 1; k < cells.size(); ++k) {
    const Rational& c0 = cells[k - 1];
    const Rational& c1 = cells[k];
    Rational mid = midpoint(c0, c1);
    Rational wlo = lo(mid);
    Rational whi = hi(mid);

    // Within the cell the window ends trace linear paths, and the set of
    // breakpoints strictly inside the window is fixed.
    CellLine left{f(lo(c0)), f(lo(c1))};
    CellLine right{f(hi(c0)), f(hi(c1))};
    std::vector<CellLine> upper{left, right};
    std::vector<CellLine> lower{left, right};
    std::optional<Rational> top, bottom;
    for (const auto& p : f.points()) {
      if (p.x <= wlo || p.x >= whi) continue;
      if (!top || *top < p.y) top = p.y;
      if (!bottom || p.y < *bottom) bottom = p.y;
    }
    if (top) upper.push_back({*top, *top});
    if (bottom) lower.push_back({*bottom, *bottom});

    std::vector<Rational> xs{c0, c1};
    for (const auto* set : {&upper, &lower})
      for (std::size_t i = 0; i < set->size(); ++i)
        for (std::size_t j = i + 1; j < set->size(); ++j)
          if (auto c = crossing((*set)[i], (*set)[j], c0, c1)) xs.push_back(*c);
    sort_unique(xs);

    for (const auto& x : xs) {
      if (!out.empty() && out.back().x == x) continue;
      Rational u = line_at(upper[0], c0, c1, x);
      for (std::size_t i = 1; i < upper.size(); ++i) u = max(u, line_at(upper[i], c0, c1, x));
      Rational l = line_at(lower[0], c0, c1, x);
      for (std::size_t i = 1; i < lower.size(); ++i) l = min(l, line_at(lower[i], c0, c1, x));
      out.push_back({x, u - l});
    }
  }
  return PolygonalFunction(std::move(out));
}

Rational oscillation_oracle_at(const PolygonalFunction& f, const Rational& eps,
                               const Rational& x) {
  if (eps.sign() <= 0) throw DomainError("oscillation window must be positive");
  if (x < kZero || x > kOne) throw DomainError("evaluation point " + x.str() + " outside [0,1]");
  Rational wlo = max(kZero, x - eps);
  Rational whi = min(kOne, x + eps);
  Rational top = f(wlo);
  Rational bottom = top;
  auto consider = [&](const Rational& v) {
    top = max(top, v);
    bottom = min(bottom, v);
  };
  consider(f(whi));
  for (const auto& p : f.points())
    if (wlo <= p.x && p.x <= whi) consider(p.y);
  return top - bottom;
}

Rational strict_level_radius(const PolygonalFunction& f, const Rational& x0, const Rational& c,
                             Side side) {
  // Reduce to the strictly-below case.
  const Rational sign = side == Side::below ? kOne : Rational(-1);
  const Rational level = sign * c;
  auto value = [&](const Rational& x) { return sign * f(x); };
  if (!(value(x0) < level))
    throw DomainError("strict level inequality fails at " + x0.str());

  std::optional<Rational> nearest;
  auto record = [&](const Rational& d) {
    if (!nearest || d < *nearest) nearest = d;
  };

  const auto& pts = f.points();
  // Rightwards: first x >= x0 with value(x) >= level.
  for (std::size_t k = 1; k < pts.size(); ++k) {
    if (pts[k].x <= x0) continue;
    Rational s = max(pts[k - 1].x, x0);
    Rational vs = value(s);
    Rational ve = sign * pts[k].y;
    if (ve >= level) {
      record(s + (level - vs) * (pts[k].x - s) / (ve - vs) - x0);
      break;
    }
  }
  // Leftwards, mirrored.
  for (std::size_t k = pts.size() - 1; k >= 1; --k) {
    if (pts[k - 1].x >= x0) continue;
    Rational s = min(pts[k].x, x0);
    Rational vs = value(s);
    Rational ve = sign * pts[k - 1].y;
    if (ve >= level) {
      record(x0 - (s - (level - vs) * (s - pts[k - 1].x) / (ve - vs)));
      break;
    }
  }
  return nearest ? *nearest : max(x0, kOne - x0);
}

TaggedPartition::TaggedPartition(std::vector<Rational> cuts, std::vector<Rational> tags)
    : cuts_(std::move(cuts)), tags_(std::move(tags)) {
  if (cuts_.size() < 2 || cuts_.front() != kZero || cuts_.back() != kOne)
    throw ConstructionError("partition must run from 0 to 1");
  if (tags_.size() + 1 != cuts_.size()) throw ConstructionError("one tag per cell required");
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (!(cuts_[i] < cuts_[i + 1])) throw ConstructionError("partition cuts must increase");
    if (tags_[i] < cuts_[i] || tags_[i] > cuts_[i + 1])
      throw ConstructionError("tag " + tags_[i].str() + " outside its cell");
  }
}

TaggedPartition TaggedPartition::uniform(std::size_t cells, Tag tag) {
  if (cells == 0) throw ConstructionError("partition needs at least one cell");
  std::vector<Rational> cuts, tags;
  const auto n = static_cast<std::int64_t>(cells);
  for (std::int64_t i = 0; i <= n; ++i) cuts.emplace_back(i, n);
  for (std::int64_t i = 0; i < n; ++i) {
    switch (tag) {
      case Tag::left: tags.push_back(cuts[i]); break;
      case Tag::right: tags.push_back(cuts[i + 1]); break;
      case Tag::middle: tags.push_back(midpoint(cuts[i], cuts[i + 1])); break;
    }
  }
  return TaggedPartition(std::move(cuts), std::move(tags));
}

Rational TaggedPartition::mesh() const {
  Rational m;
  for (std::size_t i = 1; i < cuts_.size(); ++i) m = max(m, cuts_[i] - cuts_[i - 1]);
  return m;
}

Rational riemann_sum(const PolygonalFunction& f, const TaggedPartition& tau) {
  Rational sum;
  const auto& cuts = tau.cuts();
  const auto& tags = tau.tags();
  for (std::size_t i = 0; i < tags.size(); ++i) sum += f(tags[i]) * (cuts[i + 1] - cuts[i]);
  return sum;
}

}  // namespace ccx
