#include "ccx/sweeps.hpp"

#include <algorithm>

namespace ccx {

std::int64_t CaseRng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(engine_() % span);
}

Rational CaseRng::rational_in(const Rational& lo, const Rational& hi, std::int64_t max_den) {
  for (;;) {
    std::int64_t den = between(1, max_den);
    // Numerators covering [lo, hi] at this denominator.
    BigInt nlo = lo.num() * den;
    BigInt first = (nlo + lo.den() - 1) / lo.den();
    if (nlo < 0) first = nlo / lo.den();
    if (Rational(first, BigInt(static_cast<long>(den))) < lo) first += 1;
    BigInt nhi = hi.num() * den;
    BigInt last = nhi / hi.den();
    if (nhi < 0 && nhi % hi.den() != 0) last -= 1;
    if (last < first) continue;
    BigInt span = last - first;
    std::int64_t pick = between(0, span.get_si());
    return Rational(first + pick, BigInt(static_cast<long>(den)));
  }
}

PolygonalFunction random_polygon(CaseRng& rng, std::size_t max_points, std::int64_t max_den) {
  const auto interior = rng.between(0, static_cast<std::int64_t>(max_points) - 2);
  std::vector<Rational> xs{Rational(0), Rational(1)};
  for (std::int64_t i = 0; i < interior; ++i) {
    std::int64_t den = rng.between(2, max_den);
    xs.emplace_back(rng.between(1, den - 1), den);
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Point> pts;
  for (auto& x : xs) pts.push_back({x, Rational(rng.between(-max_den, max_den), rng.between(1, max_den))});
  return PolygonalFunction(std::move(pts));
}

TaggedPartition random_partition(CaseRng& rng, const Rational& max_mesh) {
  std::vector<Rational> cuts{Rational(0)};
  while (cuts.back() < Rational(1)) {
    Rational step = max_mesh * Rational(rng.between(1, 32), 32);
    cuts.push_back(min(Rational(1), cuts.back() + step));
  }
  std::vector<Rational> tags;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    tags.push_back(cuts[i] + (cuts[i + 1] - cuts[i]) * Rational(rng.between(0, 32), 32));
  return TaggedPartition(std::move(cuts), std::move(tags));
}

namespace {

void record(SweepReport& report, bool ok, const std::string& what) {
  ++report.comparisons;
  if (ok) return;
  if (report.violations++ == 0) report.first_failure = what;
}

}  // namespace

SweepReport sweep_oscillation_oracle(std::uint64_t seed, std::size_t count) {
  CaseRng rng(seed);
  SweepReport report;
  report.name = "omega";
  for (std::size_t c = 0; c < count; ++c) {
    PolygonalFunction f = random_polygon(rng);
    for (const auto& eps : kSweepWindows) {
      PolygonalFunction w = oscillation(f, eps);
      const auto& pts = w.points();
      std::vector<Rational> probes;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        probes.push_back(pts[k].x);
        if (k + 1 < pts.size()) probes.push_back(midpoint(pts[k].x, pts[k + 1].x));
      }
      for (const auto& x : probes)
        record(report, w(x) == oscillation_oracle_at(f, eps, x),
               "case " + std::to_string(c) + " eps " + eps.str() + " x " + x.str());
    }
    ++report.cases;
  }
  return report;
}

SweepReport sweep_riemann_bound(std::uint64_t seed, std::size_t count) {
  CaseRng rng(seed);
  SweepReport report;
  report.name = "partition";
  for (std::size_t c = 0; c < count; ++c) {
    PolygonalFunction f = random_polygon(rng);
    const Rational& eps = kSweepWindows[c % kSweepWindows.size()];
    TaggedPartition tau = random_partition(rng, eps);
    Rational lhs = abs(riemann_sum(f, tau) - f.integral());
    Rational rhs = oscillation(f, eps).integral();
    record(report, tau.mesh() <= eps && lhs <= rhs,
           "case " + std::to_string(c) + ": " + lhs.str() + " > " + rhs.str());
    ++report.cases;
  }
  return report;
}

SweepReport sweep_bump_bound(std::uint64_t seed, std::size_t count) {
  CaseRng rng(seed);
  SweepReport report;
  report.name = "bump";
  for (std::size_t c = 0; c < count; ++c) {
    Rational alpha = rng.rational_in(Rational(1, 32), Rational(4), 32);
    Rational beta = rng.rational_in(Rational(1, 64), Rational(1), 64);
    Rational zeta = rng.rational_in(Rational(1, 64), Rational(63, 64), 64);
    Rational eps = rng.rational_in(Rational(1, 256), Rational(2), 256);
    Rational lhs = oscillation(bump(alpha, beta, zeta), eps).integral();
    Rational rhs = Rational(8) * alpha * eps;
    record(report, lhs <= rhs, "case " + std::to_string(c) + ": " + lhs.str() + " > " + rhs.str());
    ++report.cases;
  }
  return report;
}

}  // namespace ccx
