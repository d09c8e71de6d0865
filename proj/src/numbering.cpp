#include "ccx/numbering.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <mutex>
#include <optional>

namespace ccx {

namespace {

constexpr int kLetters = 6;
constexpr int kArrow = 6;
constexpr int kTerminalArrow = 7;
constexpr int kEnd = 8;
constexpr int kSymbols = 9;
constexpr int kStates = 3;  // 0: between rules (accepting), 1: in lhs, 2: in rhs

std::optional<int> transition(int state, int symbol) {
  bool letter = symbol < kLetters;
  bool arrow = symbol == kArrow || symbol == kTerminalArrow;
  switch (state) {
    case 0:
    case 1:
      if (letter) return 1;
      if (arrow) return 2;
      return std::nullopt;
    default:
      if (letter) return 2;
      if (symbol == kEnd) return 0;
      return std::nullopt;
  }
}

// completions(q, n): number of symbol strings of length n leading from state
// q to the accepting state.
class CompletionTable {
 public:
  BigInt at(int state, std::size_t length) {
    std::lock_guard lock(mu_);
    while (rows_.size() <= length) extend();
    return rows_[length][state];
  }

 private:
  void extend() {
    std::array<BigInt, kStates> row;
    if (rows_.empty()) {
      row[0] = 1;
      row[1] = 0;
      row[2] = 0;
    } else {
      const auto& prev = rows_.back();
      for (int q = 0; q < kStates; ++q) {
        row[q] = 0;
        for (int c = 0; c < kSymbols; ++c)
          if (auto next = transition(q, c)) row[q] += prev[*next];
      }
    }
    rows_.push_back(std::move(row));
  }

  std::mutex mu_;
  std::vector<std::array<BigInt, kStates>> rows_;
};

CompletionTable& completions() {
  static CompletionTable table;
  return table;
}

std::vector<int> serialize(const Scheme& scheme) {
  std::vector<int> out;
  auto letters = [&](const Word& w) {
    for (char c : w.str()) out.push_back(static_cast<int>(kAlphabet.find(c)));
  };
  for (const auto& rule : scheme.rules) {
    letters(rule.lhs);
    out.push_back(rule.terminal ? kTerminalArrow : kArrow);
    letters(rule.rhs);
    out.push_back(kEnd);
  }
  return out;
}

Scheme deserialize(const std::vector<int>& symbols) {
  Scheme scheme;
  Rule current;
  std::string side;
  for (int s : symbols) {
    if (s < kLetters) {
      side += kAlphabet[s];
    } else if (s == kArrow || s == kTerminalArrow) {
      current.lhs = Word(side);
      current.terminal = s == kTerminalArrow;
      side.clear();
    } else {
      current.rhs = Word(side);
      side.clear();
      scheme.rules.push_back(current);
      current = Rule{};
    }
  }
  return scheme;
}

}  // namespace

BigInt canonical_rank(const Scheme& scheme) {
  auto& table = completions();
  std::vector<int> symbols = serialize(scheme);
  const std::size_t length = symbols.size();
  BigInt rank = 0;
  for (std::size_t n = 0; n < length; ++n) rank += table.at(0, n);
  int state = 0;
  for (std::size_t pos = 0; pos < length; ++pos) {
    for (int c = 0; c < symbols[pos]; ++c)
      if (auto next = transition(state, c)) rank += table.at(*next, length - pos - 1);
    state = *transition(state, symbols[pos]);
  }
  return rank;
}

Scheme canonical_unrank(const BigInt& rank) {
  if (rank < 0) throw DomainError("negative scheme rank");
  auto& table = completions();
  BigInt rest = rank;
  std::size_t length = 0;
  while (rest >= table.at(0, length)) {
    rest -= table.at(0, length);
    ++length;
  }
  std::vector<int> symbols;
  int state = 0;
  for (std::size_t pos = 0; pos < length; ++pos) {
    for (int c = 0; c < kSymbols; ++c) {
      auto next = transition(state, c);
      if (!next) continue;
      BigInt n = table.at(*next, length - pos - 1);
      if (rest < n) {
        symbols.push_back(c);
        state = *next;
        break;
      }
      rest -= n;
    }
  }
  return deserialize(symbols);
}

std::uint64_t Numbering::register_scheme(const Scheme& scheme) {
  auto it = std::find(registry_.begin(), registry_.end(), scheme);
  if (it != registry_.end()) return static_cast<std::uint64_t>(it - registry_.begin());
  registry_.push_back(scheme);
  return registry_.size() - 1;
}

Scheme Numbering::index_to_scheme(const BigInt& index) const {
  if (index < 0) throw DomainError("negative scheme index");
  BigInt r = static_cast<unsigned long>(registry_.size());
  if (index < r) return registry_[index.get_ui()];
  return canonical_unrank(index - r);
}

Scheme Numbering::index_to_scheme(std::uint64_t index) const {
  if (index < registry_.size()) return registry_[index];
  return canonical_unrank(BigInt(static_cast<unsigned long>(index - registry_.size())));
}

BigInt Numbering::scheme_to_index(const Scheme& scheme) const {
  auto it = std::find(registry_.begin(), registry_.end(), scheme);
  if (it != registry_.end()) return BigInt(static_cast<unsigned long>(it - registry_.begin()));
  return canonical_rank(scheme) + static_cast<unsigned long>(registry_.size());
}

std::string Numbering::registry_digest() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](std::string_view s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& s : registry_) {
    feed(format_scheme(s));
    feed("---\n");
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

}  // namespace ccx
