#pragma once

// Refutes a claimed Darboux modulus. The claim is a scheme that, on input
// encode_natural(e), should output a list (delta, g) such that
// sup(g(x), g(y)) < 1 and |x - y| < delta imply |f(x) - f(y)| < 2^(-e-1).
// Once the scheme is enrolled as mu(m), row m of the diagonal construction
// gives the witness pair (zeta_m, zeta_m + beta_m) where f jumps by 2^(-mu(m)).

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccx/check.hpp"
#include "ccx/diagonal.hpp"

namespace ccx {

struct Certificate {
  std::string numbering_version;
  std::string registry_digest;
  std::uint64_t m = 0;
  std::uint64_t mu_m = 0;
  Rational delta_m;
  PolygonalFunction g_m = PolygonalFunction::constant(Rational(0));
  Rational zeta;
  Rational beta;
  Rational value_at_zeta;
  Rational value_at_zeta_plus_beta;
  Rational required_bound;
  std::vector<ExactCheck> checks;
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

struct ModulusClaim {
  Scheme scheme;
};

// The claim machine halted on its own index with an output that is not a
// valid (delta, g) list.
struct InvalidListRefutation {
  std::uint64_t index = 0;
  Word output;
  Rejection rejection;
};

using RefuteOutcome = std::variant<Certificate, InvalidListRefutation, BudgetExhausted>;

struct RefuteOptions {
  std::uint64_t stage_budget = 5000;
  bool accelerate = true;
  // Register the claim scheme in the numbering registry. Otherwise its
  // canonical index is used, which is usually far beyond any stage budget.
  bool register_claim = true;
};

struct RefuteResult {
  DiagonalState state;
  std::uint64_t claim_index = 0;
  RefuteOutcome outcome;
};

RefuteResult refute(const ModulusClaim& claim, Numbering numbering, const RefuteOptions& options);

// The four comparisons a certificate must carry, computed from its own fields.
std::vector<ExactCheck> certificate_checks(const Certificate& cert);

struct CertificateVerdict {
  bool ok = false;
  std::string reason;
};

// Re-verifies every check and recomputes every field from the state.
CertificateVerdict check_certificate(const Certificate& cert, const DiagonalState& state);

}  // namespace ccx
