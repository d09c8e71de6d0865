#include "ccx/dovetail.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace ccx {

Word self_application_input(std::uint64_t index) { return encode_natural(index); }

std::uint64_t max_fuel_from_env() {
  const char* raw = std::getenv("CCX_MAX_FUEL");
  if (raw == nullptr || *raw == '\0') return kDefaultMaxFuel;
  try {
    return std::stoull(raw);
  } catch (const std::exception&) {
    return kDefaultMaxFuel;
  }
}

Dovetailer::Dovetailer(Numbering numbering, InputOf input_of, std::uint64_t max_fuel)
    : numbering_(std::move(numbering)), input_of_(std::move(input_of)), max_fuel_(max_fuel) {}

std::vector<HaltEvent> Dovetailer::advance() {
  const std::uint64_t t = ++stage_;
  const std::uint64_t fuel = std::min(t, max_fuel_);
  while (runs_.size() <= t) {
    const std::uint64_t index = runs_.size();
    runs_.emplace_back(std::in_place, numbering_.index_to_scheme(index), input_of_(index));
    done_.push_back(false);
  }
  std::vector<HaltEvent> fresh;
  for (std::uint64_t i = 0; i <= t; ++i) {
    if (done_[i]) continue;
    auto& run = *runs_[i];
    run.run_until(fuel);
    if (!run.halted()) continue;
    fresh.push_back({i, input_of_(i), run.output(), run.steps(), t});
    done_[i] = true;
    runs_[i].reset();
  }
  events_.insert(events_.end(), fresh.begin(), fresh.end());
  return fresh;
}

void Dovetailer::advance_to(std::uint64_t stage) {
  while (stage_ < stage) advance();
}

std::vector<HaltEvent> dovetail(const Numbering& numbering, std::uint64_t stages,
                                const InputOf& input_of) {
  Dovetailer d(numbering, input_of);
  d.advance_to(stages);
  return d.events();
}

}  // namespace ccx
