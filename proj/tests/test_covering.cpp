#include <doctest.h>

#include "ccx/covering.hpp"
#include "support.hpp"

using namespace ccx;
using testing::R;

namespace {

// Registry of constant machines emitting k/(count-1) for k = 0 .. count-1.
Numbering grid_registry(int count) {
  std::vector<Scheme> reg;
  for (int k = 0; k < count; ++k) reg.push_back(constant_machine(encode_rational(R(k, count - 1))));
  return Numbering(reg);
}

}  // namespace

TEST_CASE("radius rules") {
  CHECK(machine_radius(0) == R(1, 32));
  CHECK(machine_radius(3) == R(1, 256));
  CHECK(injection_radius(0) == R(1, 256));
  CHECK(injection_radius(2) == R(1, 1024));
  // Geometric budgets: sum_e 2 r_e <= 1/8, sum_j 2 r_j <= 1/64.
  Rational m, j;
  for (std::uint64_t e = 0; e < 64; ++e) {
    m += R(2) * machine_radius(e);
    j += R(2) * injection_radius(e);
  }
  CHECK(m < R(1, 8));
  CHECK(j < R(1, 64));
  CHECK(R(1, 8) + R(1, 64) < kCoveringBound);
}

TEST_CASE("covering prefix examples") {
  Numbering half({constant_machine(Word("||/|||"))});
  auto prefix = covering_prefix(half, 5, {});
  REQUIRE(prefix.size() >= 1);
  CHECK(prefix.intervals()[0].a == R(1, 2) - R(1, 32));
  CHECK(prefix.intervals()[0].b == R(1, 2) + R(1, 32));
  CHECK(prefix.intervals()[0].source == IntervalSource{IntervalSource::Kind::machine, 0});

  auto injected = covering_prefix(Numbering{}, 1, {{R(1, 2), 0}});
  REQUIRE(injected.size() >= 1);
  CHECK(injected.intervals()[0].a == R(1, 2) - R(1, 256));
  CHECK(injected.intervals()[0].b == R(1, 2) + R(1, 256));
  CHECK(injected.intervals()[0].source.kind == IntervalSource::Kind::injected);

  CHECK_THROWS_AS(covering_prefix(Numbering{}, 1, {{R(1, 2), 0}, {R(1, 3), 0}}), std::invalid_argument);
  CHECK_THROWS_AS(covering_prefix(Numbering{}, 1, {{R(3, 2), 0}}), DomainError);

  // Outputs that do not decode, or fall outside [0,1], are skipped.
  Numbering junk({constant_machine(Word("ab")), constant_machine(encode_rational(R(3, 2))),
                  constant_machine(encode_rational(R(1, 4)))});
  auto p = covering_prefix(junk, 10, {});
  REQUIRE(p.size() >= 1);
  CHECK(p.intervals()[0].source.id == 2);
}

TEST_CASE("covering budget and determinism") {
  auto reg = grid_registry(40);
  std::vector<Injection> inj{{R(1, 3), 0}, {R(2, 3), 1}, {R(0), 2}};
  auto prefix = covering_prefix(reg, 300, inj);
  CHECK(prefix.size() >= 43);
  Rational sum;
  for (const auto& iv : prefix.intervals()) {
    CHECK(iv.a < iv.b);
    sum += iv.b - iv.a;
    CHECK(sum < R(1, 6));
    CHECK(sum <= R(1, 8) + R(1, 64));
  }
  CHECK(sum == prefix.total_length());
  CHECK(covering_prefix(reg, 300, inj) == prefix);
}

TEST_CASE("h sequence") {
  HSequence hs(covering_prefix(grid_registry(30), 200, {}));
  CHECK(hs.h(0) == PolygonalFunction::constant(R(0)));
  REQUIRE(hs.size() >= 30);
  const auto& first = hs.covering().intervals()[0];
  CHECK(hs.h(1) == scale(trapezoid_phi(first.a, first.b), R(2)));
  for (std::size_t n = 0; n < hs.size(); ++n) {
    const auto& a = hs.h(n);
    const auto& b = hs.h(n + 1);
    for (const auto& x : merged_breakpoints(a, b)) {
      CHECK(a(x) <= b(x));
      CHECK(R(0) <= b(x));
      CHECK(b(x) <= R(2));
    }
    CHECK(b.integral() < R(1, 2));
    const auto& iv = hs.covering().intervals()[n];
    Rational lo = std::max(iv.a, R(0)), hi = std::min(iv.b, R(1));
    CHECK(b(lo) == R(2));
    CHECK(b(hi) == R(2));
    CHECK(b(midpoint(lo, hi)) == R(2));
    // Independent recomputation of the recursion.
    CHECK(b == lattice_sup(a, scale(trapezoid_phi(iv.a, iv.b), R(2))));
  }
  CHECK_THROWS_AS(hs.h(hs.size() + 1), NeedsMoreStages);
}

TEST_CASE("legal first interval integral") {
  HSequence hs(covering_prefix(Numbering({constant_machine(Word("||/|||"))}), 5, {}));
  CHECK(hs.h(1).integral() == R(3, 16));
}

TEST_CASE("coverage search") {
  Numbering half({constant_machine(Word("||/|||"))});
  {
    Dovetailer d(half);
    HSequence hs;
    auto n = coverage_search(hs, d, R(1, 2), {200, false});
    REQUIRE(n);
    CHECK(hs.h(*n)(R(1, 2)) == R(2));
    CHECK(hs.h(*n - 1)(R(1, 2)) < R(2));
  }
  {
    Dovetailer d(half);
    HSequence hs;
    auto n = coverage_search(hs, d, R(1, 3), {200, true});
    REQUIRE(n);
    CHECK(hs.h(*n)(R(1, 3)) == R(2));
    CHECK(hs.covering().injections().size() == 1);
    CHECK(*n == hs.size());
  }
  {
    Dovetailer d(Numbering{});
    HSequence hs;
    CHECK_FALSE(coverage_search(hs, d, R(1, 7), {3, false}));
  }
  for (const auto& x : {R(0), R(1, 2), R(1, 3), R(2, 3), R(1, 7), R(1)}) {
    Dovetailer d(Numbering{});
    HSequence hs;
    auto n = coverage_search(hs, d, x, {2000, true});
    REQUIRE(n);
    CHECK(hs.h(*n)(x) == R(2));
  }
}
