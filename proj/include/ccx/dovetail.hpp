#pragma once

// Deterministic dovetailing over a numbering.
//
// Stage t = 1, 2, ... raises the cumulative fuel of machines 0 .. t to t
// (capped by the per-machine fuel limit), resuming each persisted partial
// computation. Halts are reported in (stage, index) order and each index
// halts at most once. A machine halting after k steps is therefore reported
// at stage max(index, k, 1).

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ccx/machine.hpp"
#include "ccx/numbering.hpp"

namespace ccx {

struct HaltEvent {
  std::uint64_t index = 0;
  Word input;
  Word output;
  std::uint64_t steps = 0;
  std::uint64_t stage = 0;
  friend bool operator==(const HaltEvent&, const HaltEvent&) = default;
};

using InputOf = std::function<Word(std::uint64_t)>;

// input_of(i) = encode_natural(i): each machine is applied to its own index.
Word self_application_input(std::uint64_t index);

inline constexpr std::uint64_t kDefaultMaxFuel = 1'000'000;
// Reads CCX_MAX_FUEL, falling back to kDefaultMaxFuel.
std::uint64_t max_fuel_from_env();

class Dovetailer {
 public:
  explicit Dovetailer(Numbering numbering, InputOf input_of = self_application_input,
                      std::uint64_t max_fuel = max_fuel_from_env());

  // Runs the next stage and returns the events it produced.
  std::vector<HaltEvent> advance();
  void advance_to(std::uint64_t stage);

  std::uint64_t stage() const { return stage_; }
  const std::vector<HaltEvent>& events() const { return events_; }
  const Numbering& numbering() const { return numbering_; }

 private:
  Numbering numbering_;
  InputOf input_of_;
  std::uint64_t max_fuel_;
  std::uint64_t stage_ = 0;
  std::vector<std::optional<MachineRun>> runs_;
  std::vector<bool> done_;
  std::vector<HaltEvent> events_;
};

std::vector<HaltEvent> dovetail(const Numbering& numbering, std::uint64_t stages,
                                const InputOf& input_of = self_application_input);

}  // namespace ccx
