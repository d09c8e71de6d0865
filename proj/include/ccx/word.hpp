#pragma once

// Words over the six-letter alphabet {| - / * a b} and the numeral
// encodings that live on them:
//
//   natural n   ->  '|' repeated n+1 times (never empty)
//   rational    ->  ['-'] numeral(|num|) '/' numeral(den)
//   list        ->  '*' seg '*' seg ... '*'   (a *-system)

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ccx/rational.hpp"

namespace ccx {

inline constexpr std::string_view kAlphabet = "|-/*ab";

bool is_letter(char c);

class Word {
 public:
  Word() = default;
  // Throws ParseError if any character is outside the alphabet.
  explicit Word(std::string letters);
  Word(const char* letters) : Word(std::string(letters)) {}  // NOLINT implicit

  const std::string& str() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word& operator+=(const Word& o) {
    letters_ += o.letters_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) { return a += b; }
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::string letters_;
};

Word encode_natural(std::uint64_t n);
Word encode_natural(const BigInt& n);
// Counts strokes; throws ParseError on anything but a nonempty stroke run.
BigInt decode_natural(std::string_view w);

Word encode_rational(const Rational& r);
// Liberal: accepts unreduced fractions, rejects a zero denominator.
Rational decode_rational(std::string_view w);

// Splits "*s0*s1*...*" into its segments. Rejects empty segments and words
// that are not star-delimited.
std::vector<Word> parse_star_system(const Word& w);
Word join_star_system(const std::vector<Word>& segments);

}  // namespace ccx
