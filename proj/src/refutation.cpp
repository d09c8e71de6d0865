#include "ccx/refutation.hpp"

namespace ccx {

namespace {

using Rel = ExactCheck::Relation;
const Rational kOne{1};

Certificate make_certificate(const DiagonalState& state, std::size_t m) {
  const DiagonalRow& row = state.rows().at(m);
  const PolygonalFunction F = partial_sum(state, m);
  Certificate cert;
  cert.numbering_version = std::string(kNumberingVersion);
  cert.registry_digest = state.numbering().registry_digest();
  cert.m = m;
  cert.mu_m = row.mu;
  cert.delta_m = row.delta;
  cert.g_m = row.g;
  cert.zeta = row.zeta;
  cert.beta = row.beta;
  cert.value_at_zeta = F(row.zeta);
  cert.value_at_zeta_plus_beta = F(row.zeta + row.beta);
  cert.required_bound = Rational::pow2(-static_cast<std::int64_t>(row.mu) - 1);
  cert.checks = certificate_checks(cert);
  return cert;
}

}  // namespace

std::vector<ExactCheck> certificate_checks(const Certificate& cert) {
  const Rational far = cert.zeta + cert.beta;
  auto g_at = [&](const Rational& x) {
    return Rational(0) <= x && x <= kOne ? cert.g_m(x) : Rational(1);
  };
  const Rational gap = abs(cert.value_at_zeta - cert.value_at_zeta_plus_beta);
  return {
      {"g_m(zeta) < 1", g_at(cert.zeta), Rel::less, kOne},
      {"g_m(zeta + beta) < 1", g_at(far), Rel::less, kOne},
      {"beta < delta_m", cert.beta, Rel::less, cert.delta_m},
      {"|f(zeta) - f(zeta + beta)| = 2^(-mu(m))", gap, Rel::equal,
       Rational::pow2(-static_cast<std::int64_t>(cert.mu_m))},
  };
}

RefuteResult refute(const ModulusClaim& claim, Numbering numbering, const RefuteOptions& options) {
  std::uint64_t index = 0;
  bool reachable = true;
  if (options.register_claim) {
    index = numbering.register_scheme(claim.scheme);
  } else {
    BigInt big = numbering.scheme_to_index(claim.scheme);
    reachable = big <= BigInt(static_cast<unsigned long>(options.stage_budget));
    if (reachable) index = big.get_ui();
  }
  RefuteResult result{DiagonalState(std::move(numbering)), index, BudgetExhausted{}};
  DiagonalState& state = result.state;

  if (!reachable) {
    result.outcome = BudgetExhausted{"enumeration", 0,
                                     "claim index lies beyond the stage budget"};
    return result;
  }

  std::optional<std::size_t> m;
  while (!(m = state.enumeration().position_of(index))) {
    auto bad = state.enumeration().rejections().find(index);
    if (bad != state.enumeration().rejections().end()) {
      Word output;
      for (const auto& e : state.source().events())
        if (e.index == index) output = e.output;
      result.outcome = InvalidListRefutation{index, output, bad->second};
      return result;
    }
    if (state.source().stage() >= options.stage_budget) {
      result.outcome = BudgetExhausted{"enumeration", state.source().stage(),
                                       "claim machine produced no list within budget"};
      return result;
    }
    state.advance_stage();
  }

  while (state.rows().size() <= *m) {
    if (auto exhausted = extend_diagonal(state, {options.stage_budget, options.accelerate})) {
      result.outcome = *exhausted;
      return result;
    }
  }
  result.outcome = make_certificate(state, *m);
  return result;
}

CertificateVerdict check_certificate(const Certificate& cert, const DiagonalState& state) {
  const auto own = certificate_checks(cert);
  for (const auto& c : own)
    if (!c.holds()) return {false, "check fails: " + c.name};
  if (cert.checks != own) return {false, "recorded checks differ from recomputed checks"};
  if (!(abs(cert.value_at_zeta - cert.value_at_zeta_plus_beta) > cert.required_bound))
    return {false, "gap does not exceed the required bound"};
  if (cert.numbering_version != kNumberingVersion) return {false, "numbering version mismatch"};
  if (cert.registry_digest != state.numbering().registry_digest())
    return {false, "registry digest mismatch"};
  if (cert.m >= state.rows().size()) return {false, "row m not present in state"};

  const Certificate expected = make_certificate(state, cert.m);
  if (cert.mu_m != expected.mu_m) return {false, "mu(m) mismatch"};
  if (cert.delta_m != expected.delta_m) return {false, "delta_m mismatch"};
  if (cert.g_m != expected.g_m) return {false, "g_m mismatch"};
  if (cert.zeta != expected.zeta) return {false, "zeta mismatch"};
  if (cert.beta != expected.beta) return {false, "beta mismatch"};
  if (cert.value_at_zeta != expected.value_at_zeta) return {false, "value at zeta mismatch"};
  if (cert.value_at_zeta_plus_beta != expected.value_at_zeta_plus_beta)
    return {false, "value at zeta + beta mismatch"};
  if (cert.required_bound != expected.required_bound) return {false, "required bound mismatch"};

  // Later rows must not disturb the witness values.
  const PolygonalFunction last = partial_sum(state, state.rows().size() - 1);
  if (last(cert.zeta) != cert.value_at_zeta || last(cert.zeta + cert.beta) != cert.value_at_zeta_plus_beta)
    return {false, "witness values change in later partial sums"};
  return {true, ""};
}

}  // namespace ccx
