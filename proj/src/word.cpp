#include "ccx/word.hpp"

#include <algorithm>

namespace ccx {

bool is_letter(char c) { return kAlphabet.find(c) != std::string_view::npos; }

Word::Word(std::string letters) : letters_(std::move(letters)) {
  for (char c : letters_)
    if (!is_letter(c)) throw ParseError(std::string("letter '") + c + "' outside alphabet");
}

Word encode_natural(std::uint64_t n) { return Word(std::string(n + 1, '|')); }

Word encode_natural(const BigInt& n) {
  if (n < 0) throw DomainError("negative natural");
  return Word(std::string(n.get_ui() + 1, '|'));
}

BigInt decode_natural(std::string_view w) {
  if (w.empty()) throw ParseError("empty numeral");
  if (!std::all_of(w.begin(), w.end(), [](char c) { return c == '|'; }))
    throw ParseError("numeral '" + std::string(w) + "' is not a stroke run");
  return BigInt(static_cast<unsigned long>(w.size() - 1));
}

Word encode_rational(const Rational& r) {
  std::string out = r.sign() < 0 ? "-" : "";
  BigInt num = r.num();
  if (num < 0) num = -num;
  out += encode_natural(num).str();
  out += '/';
  out += encode_natural(r.den()).str();
  return Word(std::move(out));
}

Rational decode_rational(std::string_view w) {
  std::string_view body = w;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  if (slash == std::string_view::npos)
    throw ParseError("rational '" + std::string(w) + "' has no '/'");
  BigInt num = decode_natural(body.substr(0, slash));
  BigInt den = decode_natural(body.substr(slash + 1));
  if (den == 0) throw ParseError("rational '" + std::string(w) + "' has zero denominator");
  if (negative) num = -num;
  return Rational(num, den);
}

std::vector<Word> parse_star_system(const Word& w) {
  const std::string& s = w.str();
  if (s.size() < 2 || s.front() != '*' || s.back() != '*')
    throw ParseError("word is not a *-system");
  std::vector<Word> segments;
  std::size_t start = 1;
  while (start < s.size()) {
    auto next = s.find('*', start);
    if (next == start) throw ParseError("empty segment in *-system");
    segments.emplace_back(s.substr(start, next - start));
    start = next + 1;
  }
  return segments;
}

Word join_star_system(const std::vector<Word>& segments) {
  std::string out = "*";
  for (const auto& seg : segments) {
    out += seg.str();
    out += '*';
  }
  return Word(std::move(out));
}

}  // namespace ccx
