#pragma once

// A total, surjective numbering of all schemes.
//
// Indices 0 .. r-1 name the schemes of a user registry. An index i >= r names
// the scheme whose serialization has shortlex rank i - r among all valid
// serializations. A serialization spells each rule as
//
//   lhs-letters  ARROW|TARROW  rhs-letters  END
//
// over the nine symbols | - / * a b ARROW TARROW END (in that order), so the
// rule list is self-delimiting and every scheme has exactly one
// serialization. Ranking walks the three-state automaton that recognizes
// these words, counting completions with exact big integers.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccx/machine.hpp"

namespace ccx {

inline constexpr std::string_view kNumberingVersion = "ccx-numbering-1/shortlex-rules/triangular-dovetail";

BigInt canonical_rank(const Scheme& scheme);
Scheme canonical_unrank(const BigInt& rank);

class Numbering {
 public:
  Numbering() = default;
  explicit Numbering(std::vector<Scheme> registry) : registry_(std::move(registry)) {}

  const std::vector<Scheme>& registry() const { return registry_; }

  // Appends unless an equal scheme is already registered; returns its index.
  std::uint64_t register_scheme(const Scheme& scheme);

  Scheme index_to_scheme(const BigInt& index) const;
  Scheme index_to_scheme(std::uint64_t index) const;
  // Least index naming a scheme equal to `scheme`.
  BigInt scheme_to_index(const Scheme& scheme) const;

  // Stable FNV-1a digest of the registry's text form, "fnv1a64:<hex>".
  std::string registry_digest() const;

 private:
  std::vector<Scheme> registry_;
};

}  // namespace ccx
