#include "ccx/diagonal.hpp"

#include <stdexcept>

namespace ccx {

namespace {

const Rational kZero{0};
const Rational kOne{1};

using Rel = ExactCheck::Relation;

}  // namespace

DiagonalState::DiagonalState(Numbering numbering, std::uint64_t max_fuel)
    : source_(std::move(numbering), self_application_input, max_fuel) {}

void DiagonalState::advance_stage() {
  source_.advance();
  enumeration_.sync(source_);
  hseq_.sync(source_);
}

Rational choose_zeta(const PolygonalFunction& s) {
  const auto& pts = s.points();
  for (std::size_t k = 1; k + 1 < pts.size(); ++k)
    if (pts[k].y < kOne) return pts[k].x;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    const Point& p = pts[k - 1];
    const Point& q = pts[k];
    if (p.y >= kOne && q.y >= kOne) continue;
    auto level_crossing = [&] { return p.x + (kOne - p.y) * (q.x - p.x) / (q.y - p.y); };
    Rational lo = p.y <= kOne ? p.x : level_crossing();
    Rational hi = q.y <= kOne ? q.x : level_crossing();
    return midpoint(lo, hi);
  }
  throw std::logic_error("no point with value below 1");
}

std::vector<ExactCheck> row_checks(const DiagonalState& state, std::size_t n) {
  const DiagonalRow& row = state.rows().at(n);
  const HSequence& hs = state.hseq();
  PolygonalFunction s = row.g + hs.h(row.nu);
  const PolygonalFunction& h_next = hs.h(row.nu_next);

  std::vector<ExactCheck> checks{
      {"nu(n+1) > nu(n)", Rational(static_cast<std::int64_t>(row.nu_next)), Rel::greater,
       Rational(static_cast<std::int64_t>(row.nu))},
      {"zeta > 0", row.zeta, Rel::greater, kZero},
      {"zeta < 1", row.zeta, Rel::less, kOne},
      {"beta > 0", row.beta, Rel::greater, kZero},
      {"beta < delta", row.beta, Rel::less, row.delta},
      {"beta < zeta", row.beta, Rel::less, row.zeta},
      {"beta < 1 - zeta", row.beta, Rel::less, kOne - row.zeta},
  };

  // Both sides are piecewise linear, so strict bounds on the closed interval
  // follow from the interval ends and the breakpoints inside it.
  const Rational lo = row.zeta - row.beta;
  const Rational hi = row.zeta + row.beta;
  std::vector<Rational> xs{lo, hi};
  for (const auto& x : merged_breakpoints(s, h_next))
    if (lo < x && x < hi) xs.push_back(x);
  for (const auto& x : xs) {
    checks.push_back({"(g + h_nu(n))(" + x.str() + ") < 1", s(x), Rel::less, kOne});
    checks.push_back({"h_nu(n+1)(" + x.str() + ") > 1", h_next(x), Rel::greater, kOne});
  }
  return checks;
}

std::optional<BudgetExhausted> extend_diagonal(DiagonalState& state,
                                               const DiagonalOptions& options) {
  const std::size_t n = state.rows_.size();
  while (state.enumeration_.entries().size() <= n) {
    if (state.source_.stage() >= options.stage_budget)
      return BudgetExhausted{"enumeration", state.source_.stage(),
                             "no enumeration entry " + std::to_string(n) + " within budget"};
    state.advance_stage();
  }
  const EnumerationEntry entry = state.enumeration_.entries()[n];
  const std::size_t nu = state.nu_.back();

  const PolygonalFunction s = entry.g + state.hseq_.h(nu);
  if (!(s.integral() < kOne)) throw std::logic_error("integral of g + h is not below 1");
  const Rational zeta = choose_zeta(s);

  auto covered = coverage_search(state.hseq_, state.source_, zeta,
                                 {options.stage_budget, options.accelerate});
  state.enumeration_.sync(state.source_);
  if (!covered)
    return BudgetExhausted{"coverage", state.source_.stage(),
                           "zeta = " + zeta.str() + " not covered within budget"};

  std::size_t nu_next = nu + 1;
  while (!(state.hseq_.h(nu_next)(zeta) > kOne)) ++nu_next;

  const Rational below = strict_level_radius(s, zeta, kOne, Side::below);
  const Rational above = strict_level_radius(state.hseq_.h(nu_next), zeta, kOne, Side::above);
  const Rational beta =
      min(min(min(below, above), min(entry.delta, zeta)), kOne - zeta) / Rational(2);

  DiagonalRow row{n,    entry.mu, entry.delta, entry.g,
                  zeta, beta,     nu,          nu_next,
                  bump(Rational::pow2(-static_cast<std::int64_t>(entry.mu)), beta, zeta)};
  state.rows_.push_back(std::move(row));
  state.nu_.push_back(nu_next);

  for (const auto& check : row_checks(state, n))
    if (!check.holds()) throw std::logic_error("row " + std::to_string(n) + ": " + check.name + " fails");
  return std::nullopt;
}

PolygonalFunction partial_sum(const DiagonalState& state, std::size_t N) {
  const auto& rows = state.rows();
  if (N >= rows.size())
    throw std::out_of_range("partial sum F_" + std::to_string(N) + " needs " +
                            std::to_string(N + 1) + " rows, have " + std::to_string(rows.size()));
  PolygonalFunction sum = rows[0].bump;
  for (std::size_t k = 1; k <= N; ++k) sum = sum + rows[k].bump;
  return sum;
}

RiemannReport verify_riemann(const DiagonalState& state, std::size_t N, const Rational& eps) {
  if (eps.sign() <= 0) throw DomainError("eps must be positive");
  RiemannReport report;
  report.N = N;
  report.eps = eps;
  report.window = eps / Rational(16);
  if (state.rows().empty()) return report;

  const PolygonalFunction F = partial_sum(state, N);
  report.omega_sum = oscillation(F, report.window).integral();
  for (std::size_t k = 0; k <= N; ++k) {
    const DiagonalRow& row = state.rows()[k];
    Rational omega = oscillation(row.bump, report.window).integral();
    Rational bound = Rational::pow2(-static_cast<std::int64_t>(row.mu) - 1) * eps;
    report.checks.push_back({"int omega(bump_" + std::to_string(k) + ") <= 2^(-mu-1) eps", omega,
                             Rel::less_equal, bound});
    report.bump_sum += omega;
    report.bound_sum += bound;
  }
  report.checks.push_back({"A <= B", report.omega_sum, Rel::less_equal, report.bump_sum});
  report.checks.push_back({"B < C", report.bump_sum, Rel::less, report.bound_sum});
  report.checks.push_back({"C < eps", report.bound_sum, Rel::less, eps});

  // ceil(16 / eps) cells gives mesh <= eps / 16.
  BigInt cells = (16 * eps.den() + eps.num() - 1) / eps.num();
  report.cells = cells.get_ui();
  auto tau = TaggedPartition::uniform(report.cells, TaggedPartition::Tag::left);
  auto sigma = TaggedPartition::uniform(report.cells, TaggedPartition::Tag::right);
  report.left_sum = riemann_sum(F, tau);
  report.right_sum = riemann_sum(F, sigma);
  const Rational integral = F.integral();
  report.checks.push_back({"mesh <= eps/16", tau.mesh(), Rel::less_equal, report.window});
  report.checks.push_back(
      {"|I(F,tau) - int F| <= A", abs(report.left_sum - integral), Rel::less_equal, report.omega_sum});
  report.checks.push_back({"|I(F,sigma) - int F| <= A", abs(report.right_sum - integral),
                           Rel::less_equal, report.omega_sum});
  report.checks.push_back({"|I(F,tau) - I(F,sigma)| <= 2A", abs(report.left_sum - report.right_sum),
                           Rel::less_equal, Rational(2) * report.omega_sum});
  return report;
}

}  // namespace ccx
