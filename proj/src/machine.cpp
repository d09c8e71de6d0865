#include "ccx/machine.hpp"

#include <sstream>

namespace ccx {

MachineRun::MachineRun(Scheme scheme, Word input)
    : scheme_(std::move(scheme)), word_(input.str()) {}

bool MachineRun::step() {
  for (const auto& rule : scheme_.rules) {
    auto pos = word_.find(rule.lhs.str());
    if (pos == std::string::npos) continue;
    word_.replace(pos, rule.lhs.size(), rule.rhs.str());
    ++steps_;
    if (rule.terminal) halted_ = true;
    return true;
  }
  halted_ = true;
  return false;
}

void MachineRun::run_until(std::uint64_t total_fuel) {
  while (!halted_ && steps_ < total_fuel) step();
  // A machine whose fuel ran out exactly when no rule applies any more is
  // still halted; probe once without consuming fuel.
  if (!halted_) {
    bool applicable = false;
    for (const auto& rule : scheme_.rules)
      if (word_.find(rule.lhs.str()) != std::string::npos) {
        applicable = true;
        break;
      }
    if (!applicable) halted_ = true;
  }
}

RunResult run_machine(const Scheme& scheme, const Word& input, std::uint64_t fuel) {
  MachineRun run(scheme, input);
  run.run_until(fuel);
  if (run.halted()) return Halted{run.output(), run.steps()};
  return OutOfFuel{};
}

Scheme constant_machine(const Word& w) {
  Scheme s;
  for (char c : kAlphabet) s.rules.push_back({Word(std::string(1, c)), Word(), false});
  s.rules.push_back({Word(), w, true});
  return s;
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

Rule parse_rule(std::string_view line, std::size_t lineno) {
  auto gt = line.find('>');
  if (gt == std::string_view::npos || gt == 0 || line[gt - 1] != '-' ||
      line.find('>', gt + 1) != std::string_view::npos)
    throw ParseError("line " + std::to_string(lineno) + ": expected 'LHS -> RHS'");
  Rule rule;
  std::string_view rest = line.substr(gt + 1);
  if (!rest.empty() && rest.front() == '.') {
    rule.terminal = true;
    rest.remove_prefix(1);
  }
  try {
    rule.lhs = Word(std::string(trim(line.substr(0, gt - 1))));
    rule.rhs = Word(std::string(trim(rest)));
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
  }
  return rule;
}

}  // namespace

std::vector<Scheme> parse_scheme_list(std::string_view text) {
  std::vector<Scheme> out(1);
  std::size_t lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = trim(text.substr(start, end - start));
    ++lineno;
    start = end + 1;
    if (line.empty() || line.front() == '#') continue;
    if (line == "---") {
      out.emplace_back();
      continue;
    }
    out.back().rules.push_back(parse_rule(line, lineno));
  }
  // A trailing separator terminates rather than opening an empty scheme.
  if (out.size() > 1 && out.back().rules.empty()) out.pop_back();
  return out;
}

Scheme parse_scheme(std::string_view text) {
  auto list = parse_scheme_list(text);
  if (list.size() != 1) throw ParseError("expected a single scheme, found " + std::to_string(list.size()));
  return list.front();
}

std::string format_scheme(const Scheme& scheme) {
  std::ostringstream out;
  for (const auto& r : scheme.rules) {
    std::string line = r.lhs.str() + (r.lhs.empty() ? "" : " ") + (r.terminal ? "->." : "->");
    if (!r.rhs.empty()) line += " " + r.rhs.str();
    out << line << '\n';
  }
  return out.str();
}

}  // namespace ccx
