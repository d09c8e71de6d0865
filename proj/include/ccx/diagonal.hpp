#pragma once

// The diagonal construction. Row n picks a rational zeta_n where
// g_n + h_nu(n) < 1, the least nu(n+1) with h_nu(n+1)(zeta_n) > 1, and a
// radius beta_n small enough that
//
//   beta_n < min(delta_n, zeta_n, 1 - zeta_n)
//   g_n + h_nu(n) < 1 < h_nu(n+1)   on [zeta_n - beta_n, zeta_n + beta_n]
//
// The bump of height 2^-mu(n) and half-width beta_n at zeta_n is row n's term
// of the Riemann-integrable, non-Darboux function; F_N sums rows 0..N.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ccx/check.hpp"
#include "ccx/covering.hpp"
#include "ccx/enumerator.hpp"

namespace ccx {

struct DiagonalRow {
  std::uint64_t n = 0;
  std::uint64_t mu = 0;
  Rational delta;
  PolygonalFunction g = PolygonalFunction::constant(Rational(0));
  Rational zeta;
  Rational beta;
  std::size_t nu = 0;
  std::size_t nu_next = 0;
  PolygonalFunction bump = PolygonalFunction::constant(Rational(0));
  friend bool operator==(const DiagonalRow&, const DiagonalRow&) = default;
};

struct BudgetExhausted {
  std::string phase;  // "enumeration" or "coverage"
  std::uint64_t stage = 0;
  std::string detail;
};

struct DiagonalOptions {
  std::uint64_t stage_budget = 5000;
  // Inject a covering interval at zeta_n instead of waiting for the
  // dovetailer to cover it.
  bool accelerate = true;
};

class DiagonalState {
 public:
  explicit DiagonalState(Numbering numbering, std::uint64_t max_fuel = max_fuel_from_env());

  const Numbering& numbering() const { return source_.numbering(); }
  const Dovetailer& source() const { return source_; }
  const EnumerationState& enumeration() const { return enumeration_; }
  const HSequence& hseq() const { return hseq_; }
  const std::vector<DiagonalRow>& rows() const { return rows_; }
  // nu(0), ..., nu(rows().size())
  const std::vector<std::size_t>& nu() const { return nu_; }

  // Runs one more dovetail stage and feeds its events to both consumers.
  void advance_stage();

 private:
  friend std::optional<BudgetExhausted> extend_diagonal(DiagonalState&, const DiagonalOptions&);

  Dovetailer source_;
  EnumerationState enumeration_;
  HSequence hseq_;
  std::vector<std::size_t> nu_{0};
  std::vector<DiagonalRow> rows_;
};

// Deterministic choice of a rational point in (0,1) where s < 1: the leftmost
// interior breakpoint with s < 1, otherwise the midpoint of the sub-interval
// of the leftmost segment on which s <= 1 and somewhere < 1.
Rational choose_zeta(const PolygonalFunction& s);

// Builds the next row. Returns nullopt on success. Throws std::logic_error if
// any exact row invariant fails.
[[nodiscard]] std::optional<BudgetExhausted> extend_diagonal(DiagonalState& state,
                                                             const DiagonalOptions& options);

// Exact re-verification of a built row, one check per strict inequality.
std::vector<ExactCheck> row_checks(const DiagonalState& state, std::size_t n);

// F_N = bump_0 + ... + bump_N. Throws std::out_of_range if N >= rows.
PolygonalFunction partial_sum(const DiagonalState& state, std::size_t N);

struct RiemannReport {
  std::size_t N = 0;
  Rational eps;
  Rational window;       // eps / 16
  std::size_t cells = 0;  // of the two uniform test partitions
  Rational omega_sum;     // A: integral of omega(F_N, eps/16)
  Rational bump_sum;      // B: sum of integrals of omega(bump_k, eps/16)
  Rational bound_sum;     // C: sum of 2^(-mu(k)-1) * eps
  Rational left_sum;      // I(F_N, left-tagged)
  Rational right_sum;     // I(F_N, right-tagged)
  std::vector<ExactCheck> checks;
  bool passed() const { return all_hold(checks); }
};

// Checks A <= B < C < eps, the per-bump bound, and the Cauchy bound
// |I(F_N, tau) - I(F_N, sigma)| <= 2A for uniform partitions of mesh <= eps/16.
// A state with no rows passes trivially.
RiemannReport verify_riemann(const DiagonalState& state, std::size_t N, const Rational& eps);

}  // namespace ccx
