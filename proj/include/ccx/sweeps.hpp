#pragma once

// Seeded random sweeps over the polygon algebra. Draws use a fixed
// generator and plain modular reduction so a seed means the same cases on
// every platform.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "ccx/polygon.hpp"

namespace ccx {

class CaseRng {
 public:
  explicit CaseRng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  // num/den with den in [1, max_den] and the value in [lo, hi].
  Rational rational_in(const Rational& lo, const Rational& hi, std::int64_t max_den);

 private:
  std::mt19937_64 engine_;
};

// At most max_points breakpoints, coordinates with denominators <= max_den.
PolygonalFunction random_polygon(CaseRng& rng, std::size_t max_points = 12,
                                 std::int64_t max_den = 32);
// Random cuts with mesh <= max_mesh and random tags.
TaggedPartition random_partition(CaseRng& rng, const Rational& max_mesh);

inline const std::vector<Rational> kSweepWindows{{1, 32}, {1, 8}, {1, 2}, {2, 1}};

struct SweepReport {
  std::string name;
  std::size_t cases = 0;
  std::size_t comparisons = 0;
  std::size_t violations = 0;
  std::string first_failure;
  bool passed() const { return violations == 0; }
};

// oscillation(f, eps) against oscillation_oracle_at at every breakpoint and
// cell midpoint of the computed function; each case uses every window in
// kSweepWindows.
SweepReport sweep_oscillation_oracle(std::uint64_t seed, std::size_t count);
// |I(f, tau) - int f| <= int omega(f, eps) for partitions of mesh <= eps.
SweepReport sweep_riemann_bound(std::uint64_t seed, std::size_t count);
// int omega(bump(alpha, beta, zeta), eps) <= 8 alpha eps.
SweepReport sweep_bump_bound(std::uint64_t seed, std::size_t count);

}  // namespace ccx
