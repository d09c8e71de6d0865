#pragma once

#include <string>
#include <vector>

#include "ccx/rational.hpp"

namespace ccx {

// A named exact comparison, kept with both sides so reports and certificates
// can be re-verified by hand.
struct ExactCheck {
  enum class Relation { less, less_equal, equal, greater_equal, greater };

  std::string name;
  Rational lhs;
  Relation relation = Relation::less;
  Rational rhs;

  bool holds() const;
  friend bool operator==(const ExactCheck&, const ExactCheck&) = default;
};

std::string to_string(ExactCheck::Relation relation);
ExactCheck::Relation relation_from_string(const std::string& text);

bool all_hold(const std::vector<ExactCheck>& checks);

}  // namespace ccx
