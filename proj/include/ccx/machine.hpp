#pragma once

// Normal algorithms (Markov algorithms) over the six-letter alphabet.
//
// One step: take the first rule, in scheme order, whose left side occurs in
// the current word (the empty left side occurs at position 0 of every word),
// and replace the leftmost occurrence by the right side. A terminal rule halts
// after it is applied; the process also halts when no rule applies.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ccx/word.hpp"

namespace ccx {

struct Rule {
  Word lhs;
  Word rhs;
  bool terminal = false;
  friend bool operator==(const Rule&, const Rule&) = default;
};

struct Scheme {
  std::vector<Rule> rules;
  friend bool operator==(const Scheme&, const Scheme&) = default;
};

struct Halted {
  Word output;
  std::uint64_t steps = 0;
  friend bool operator==(const Halted&, const Halted&) = default;
};

struct OutOfFuel {
  friend bool operator==(const OutOfFuel&, const OutOfFuel&) = default;
};

using RunResult = std::variant<Halted, OutOfFuel>;

// A computation that can be suspended and resumed with more fuel.
class MachineRun {
 public:
  MachineRun(Scheme scheme, Word input);

  // Runs until halted or `steps()` reaches `total_fuel`.
  void run_until(std::uint64_t total_fuel);

  bool halted() const { return halted_; }
  std::uint64_t steps() const { return steps_; }
  Word output() const { return Word(word_); }

 private:
  // Returns false when no rule applies.
  bool step();

  Scheme scheme_;
  std::string word_;
  std::uint64_t steps_ = 0;
  bool halted_ = false;
};

RunResult run_machine(const Scheme& scheme, const Word& input, std::uint64_t fuel);

// Erases its input letter by letter, then emits `w` through a terminal rule
// with empty left side.
Scheme constant_machine(const Word& w);

// Text format: one rule per line, "LHS -> RHS" or "LHS ->. RHS"; '#' starts a
// comment line; blank lines are skipped. A line consisting of "---" separates
// schemes in a multi-scheme file; a trailing separator is allowed.
Scheme parse_scheme(std::string_view text);
std::vector<Scheme> parse_scheme_list(std::string_view text);
std::string format_scheme(const Scheme& scheme);

}  // namespace ccx
