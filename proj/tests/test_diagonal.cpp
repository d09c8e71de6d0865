#include <doctest.h>

#include "ccx/diagonal.hpp"
#include "support.hpp"

using namespace ccx;
using testing::poly;
using testing::R;

namespace {

DiagonalState built(std::size_t rows, std::vector<Scheme> reg = testing::four_seeds()) {
  DiagonalState st{Numbering(std::move(reg))};
  while (st.rows().size() < rows) REQUIRE_FALSE(extend_diagonal(st, {}));
  return st;
}

// Strict bounds on a closed interval, checked at its ends and at every
// breakpoint of f inside it.
bool strictly(const PolygonalFunction& f, const Rational& lo, const Rational& hi, bool below,
              const Rational& c) {
  auto ok = [&](const Rational& y) { return below ? y < c : y > c; };
  if (!ok(testing::eval_points(f.points(), lo)) || !ok(testing::eval_points(f.points(), hi))) return false;
  for (const auto& p : f.points())
    if (lo <= p.x && p.x <= hi && !ok(p.y)) return false;
  return true;
}

}  // namespace

TEST_CASE("zeta selection") {
  CHECK(choose_zeta(PolygonalFunction::constant(R(0))) == R(1, 2));
  CHECK(choose_zeta(poly({{R(0), R(2)}, {R(1, 4), R(1, 2)}, {R(1), R(2)}})) == R(1, 4));
  CHECK(choose_zeta(poly({{R(0), R(0)}, {R(1, 3), R(3, 2)}, {R(2, 3), R(1, 2)}, {R(1), R(0)}})) == R(2, 3));
  CHECK(choose_zeta(poly({{R(0), R(0)}, {R(1), R(2)}})) == R(1, 4));
  CHECK(choose_zeta(poly({{R(0), R(2)}, {R(1), R(0)}})) == R(3, 4));
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    auto s = testing::draw_polygon(rng);
    if (!(s.min_value() < R(1))) continue;
    Rational z = choose_zeta(s);
    CHECK(R(0) < z);
    CHECK(z < R(1));
    CHECK(s(z) < R(1));
  }
}

TEST_CASE("rows 0-3 with four constant seeds") {
  DiagonalState st = built(4);
  REQUIRE(st.rows().size() == 4);
  const auto& r0 = st.rows()[0];
  CHECK(st.nu()[0] == 0);
  CHECK(r0.mu == 0);
  CHECK(r0.delta == R(1, 4));
  CHECK(r0.zeta == R(1, 2));
  CHECK(partial_sum(st, 0) == bump(R(1), r0.beta, r0.zeta));

  for (std::size_t n = 0; n < 4; ++n) {
    const auto& row = st.rows()[n];
    const auto& entry = st.enumeration().entries()[n];
    CHECK(row.n == n);
    CHECK(row.mu == entry.mu);
    CHECK(row.delta == entry.delta);
    CHECK(row.g == entry.g);
    CHECK(row.nu == st.nu()[n]);
    CHECK(row.nu_next == st.nu()[n + 1]);
    CHECK(st.nu()[n] < st.nu()[n + 1]);
    // beta caps
    CHECK(row.beta > R(0));
    CHECK(row.beta < row.delta);
    CHECK(row.beta < row.zeta);
    CHECK(row.beta < R(1) - row.zeta);
    // Strict level bounds on the closed interval.
    Rational lo = row.zeta - row.beta, hi = row.zeta + row.beta;
    auto s = affine_combine(row.g, st.hseq().h(row.nu), R(1), R(1));
    CHECK(strictly(s, lo, hi, true, R(1)));
    CHECK(strictly(st.hseq().h(row.nu_next), lo, hi, false, R(1)));
    // nu_next is the least index with h(zeta) > 1.
    CHECK(st.hseq().h(row.nu_next)(row.zeta) > R(1));
    CHECK(st.hseq().h(row.nu_next - 1)(row.zeta) <= R(1));
    // Row term.
    CHECK(row.bump == bump(Rational::pow2(-static_cast<std::int64_t>(row.mu)), row.beta, row.zeta));
    for (const auto& c : row_checks(st, n)) CHECK_MESSAGE(c.holds(), c.name);
  }

  auto F3 = partial_sum(st, 3);
  for (std::size_t m = 0; m < 4; ++m) {
    const auto& row = st.rows()[m];
    CHECK(F3(row.zeta) == Rational::pow2(-static_cast<std::int64_t>(row.mu)));
    CHECK(F3(row.zeta + row.beta) == R(0));
    CHECK(F3(row.zeta - row.beta) == R(0));
    auto rest = affine_combine(F3, row.bump, R(1), R(-1));
    CHECK(rest(row.zeta) == R(0));
    CHECK(rest(row.zeta - row.beta) == R(0));
    CHECK(rest(row.zeta + row.beta) == R(0));
    for (std::size_t k = 0; k < 4; ++k)
      if (k != m) CHECK(st.rows()[k].bump(row.zeta) == R(0));
  }
  CHECK_THROWS_AS(partial_sum(st, 4), std::out_of_range);
}

TEST_CASE("diagonal determinism") {
  DiagonalState a = built(4);
  DiagonalState b = built(4);
  CHECK(a.rows() == b.rows());
  CHECK(a.nu() == b.nu());
  CHECK(a.hseq().covering() == b.hseq().covering());
}

TEST_CASE("diagonal needs enrolled rows") {
  DiagonalState st{Numbering{}};
  auto b = extend_diagonal(st, {30, true});
  REQUIRE(b);
  CHECK(b->phase == "enumeration");
}

TEST_CASE("riemann certificates") {
  DiagonalState st = built(4);
  for (std::size_t N = 0; N < 4; ++N) {
    for (const auto& eps : {R(1, 2), R(1, 8), R(1, 32)}) {
      auto report = verify_riemann(st, N, eps);
      CHECK(report.passed());
      // Independent recomputation.
      auto F = partial_sum(st, N);
      Rational window = eps / R(16);
      CHECK(report.window == window);
      CHECK(report.omega_sum == oscillation(F, window).integral());
      Rational B, C;
      for (std::size_t k = 0; k <= N; ++k) {
        const auto& row = st.rows()[k];
        Rational bk = oscillation(row.bump, window).integral();
        Rational cap = Rational::pow2(-static_cast<std::int64_t>(row.mu) - 1) * eps;
        CHECK(bk <= cap);
        B += bk;
        C += cap;
      }
      CHECK(report.bump_sum == B);
      CHECK(report.bound_sum == C);
      CHECK(report.omega_sum <= B);
      CHECK(B < C);
      CHECK(C < eps);
      CHECK(abs(report.left_sum - report.right_sum) <= R(2) * report.omega_sum);
      auto tl = TaggedPartition::uniform(report.cells, TaggedPartition::Tag::left);
      CHECK(tl.mesh() <= window);
      CHECK(report.left_sum == riemann_sum(F, tl));
    }
  }
  DiagonalState empty{Numbering{}};
  auto trivial = verify_riemann(empty, 0, R(1, 2));
  CHECK(trivial.passed());
  CHECK(trivial.omega_sum == R(0));
}
