#include "ccx/check.hpp"

#include <algorithm>

namespace ccx {

bool ExactCheck::holds() const {
  switch (relation) {
    case Relation::less: return lhs < rhs;
    case Relation::less_equal: return lhs <= rhs;
    case Relation::equal: return lhs == rhs;
    case Relation::greater_equal: return lhs >= rhs;
    case Relation::greater: return lhs > rhs;
  }
  return false;
}

std::string to_string(ExactCheck::Relation relation) {
  switch (relation) {
    case ExactCheck::Relation::less: return "<";
    case ExactCheck::Relation::less_equal: return "<=";
    case ExactCheck::Relation::equal: return "=";
    case ExactCheck::Relation::greater_equal: return ">=";
    case ExactCheck::Relation::greater: return ">";
  }
  return "?";
}

ExactCheck::Relation relation_from_string(const std::string& text) {
  using R = ExactCheck::Relation;
  if (text == "<") return R::less;
  if (text == "<=") return R::less_equal;
  if (text == "=") return R::equal;
  if (text == ">=") return R::greater_equal;
  if (text == ">") return R::greater;
  throw ParseError("unknown relation '" + text + "'");
}

bool all_hold(const std::vector<ExactCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ExactCheck& c) { return c.holds(); });
}

}  // namespace ccx
