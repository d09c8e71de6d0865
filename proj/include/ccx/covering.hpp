#pragma once

// Finite prefixes of a singular covering of [0,1] and the nondecreasing
// polygonal sequence h_0 = 0, h_{n+1} = sup(h_n, 2 * phi_n) built from it.
//
// Interval sources:
//   machine e halting on its own index with a word that decodes to r in [0,1]
//     -> (r - 2^(-e-5), r + 2^(-e-5)); all such lengths sum to at most 1/8
//   injection slot j at a chosen rational centre
//     -> (x - 2^(-j-8), x + 2^(-j-8));   all such lengths sum to at most 1/64
// so every partial sum of lengths stays at most 9/64, below 1/6.

#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "ccx/dovetail.hpp"
#include "ccx/polygon.hpp"

namespace ccx {

inline const Rational kCoveringBound{1, 6};

Rational machine_radius(std::uint64_t index);
Rational injection_radius(std::uint64_t slot);

struct IntervalSource {
  enum class Kind { machine, injected };
  Kind kind = Kind::machine;
  std::uint64_t id = 0;  // machine index or injection slot
  friend bool operator==(const IntervalSource&, const IntervalSource&) = default;
};

struct CoveringInterval {
  Rational a;
  Rational b;
  IntervalSource source;
  friend bool operator==(const CoveringInterval&, const CoveringInterval&) = default;
};

struct Injection {
  Rational centre;
  std::uint64_t slot = 0;
  friend bool operator==(const Injection&, const Injection&) = default;
};

class CoveringPrefix {
 public:
  const std::vector<CoveringInterval>& intervals() const { return intervals_; }
  std::size_t size() const { return intervals_.size(); }
  const Rational& total_length() const { return total_; }
  const std::vector<Injection>& injections() const { return injections_; }

  // Returns true if the event contributed an interval.
  bool absorb(const HaltEvent& event);
  // Throws std::invalid_argument if the slot was already used.
  void inject(const Injection& injection);
  std::uint64_t next_free_slot() const;

  friend bool operator==(const CoveringPrefix&, const CoveringPrefix&) = default;

 private:
  void push(CoveringInterval interval);

  std::vector<CoveringInterval> intervals_;
  std::vector<Injection> injections_;
  std::set<std::uint64_t> machines_;
  Rational total_;
};

// Injections first (in the given order), then one dovetail run on
// self-application input, intervals in event order.
CoveringPrefix covering_prefix(const Numbering& numbering, std::uint64_t stages,
                               const std::vector<Injection>& injections);

class NeedsMoreStages : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class HSequence {
 public:
  HSequence() = default;
  explicit HSequence(CoveringPrefix covering);

  const CoveringPrefix& covering() const { return covering_; }
  // Index of the last buildable h.
  std::size_t size() const { return covering_.size(); }

  // Absorbs dovetail events not yet seen.
  void sync(const Dovetailer& source);
  // Appends an injection at `centre` in the next free slot; returns the slot.
  std::uint64_t inject(const Rational& centre);

  // h_n, built on demand with every invariant checked exactly.
  // Throws NeedsMoreStages if n > size().
  const PolygonalFunction& h(std::size_t n) const;

 private:
  void build_next() const;

  CoveringPrefix covering_;
  std::size_t events_seen_ = 0;
  mutable std::deque<PolygonalFunction> cache_{PolygonalFunction::constant(Rational(0))};
};

struct CoverageOptions {
  std::uint64_t stage_budget = 0;
  bool accelerate = false;
};

// Least n with h_n(x) = 2, extending the covering as needed: through an
// injection at x when accelerating, otherwise by advancing `source` (one stage
// at a time, up to the stage budget). nullopt when the budget runs out.
std::optional<std::size_t> coverage_search(HSequence& hs, Dovetailer& source, const Rational& x,
                                           const CoverageOptions& options);

}  // namespace ccx
