#include "ccx/covering.hpp"

#include <algorithm>

namespace ccx {

namespace {

const Rational kZero{0};
const Rational kOne{1};
const Rational kTwo{2};

void check(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error("covering invariant violated: " + what);
}

}  // namespace

Rational machine_radius(std::uint64_t index) {
  return Rational::pow2(-static_cast<std::int64_t>(index) - 5);
}

Rational injection_radius(std::uint64_t slot) {
  return Rational::pow2(-static_cast<std::int64_t>(slot) - 8);
}

void CoveringPrefix::push(CoveringInterval interval) {
  total_ += interval.b - interval.a;
  check(total_ < kCoveringBound, "partial length sum " + total_.str() + " is not below 1/6");
  intervals_.push_back(std::move(interval));
}

bool CoveringPrefix::absorb(const HaltEvent& event) {
  Rational centre;
  try {
    centre = decode_rational(event.output.str());
  } catch (const ParseError&) {
    return false;
  }
  if (centre < kZero || centre > kOne) return false;
  check(machines_.insert(event.index).second, "machine index reported twice");
  Rational r = machine_radius(event.index);
  push({centre - r, centre + r, {IntervalSource::Kind::machine, event.index}});
  return true;
}

void CoveringPrefix::inject(const Injection& injection) {
  for (const auto& used : injections_)
    if (used.slot == injection.slot)
      throw std::invalid_argument("injection slot " + std::to_string(injection.slot) + " reused");
  if (injection.centre < kZero || injection.centre > kOne)
    throw DomainError("injection centre " + injection.centre.str() + " outside [0,1]");
  injections_.push_back(injection);
  Rational r = injection_radius(injection.slot);
  push({injection.centre - r, injection.centre + r,
        {IntervalSource::Kind::injected, injection.slot}});
}

std::uint64_t CoveringPrefix::next_free_slot() const {
  std::uint64_t slot = 0;
  for (const auto& used : injections_) slot = std::max(slot, used.slot + 1);
  return slot;
}

CoveringPrefix covering_prefix(const Numbering& numbering, std::uint64_t stages,
                               const std::vector<Injection>& injections) {
  CoveringPrefix prefix;
  for (const auto& inj : injections) prefix.inject(inj);
  for (const auto& event : dovetail(numbering, stages)) prefix.absorb(event);
  return prefix;
}

HSequence::HSequence(CoveringPrefix covering) : covering_(std::move(covering)) {}

void HSequence::sync(const Dovetailer& source) {
  const auto& events = source.events();
  for (; events_seen_ < events.size(); ++events_seen_) covering_.absorb(events[events_seen_]);
}

std::uint64_t HSequence::inject(const Rational& centre) {
  std::uint64_t slot = covering_.next_free_slot();
  covering_.inject({centre, slot});
  return slot;
}

const PolygonalFunction& HSequence::h(std::size_t n) const {
  if (n > size())
    throw NeedsMoreStages("h_" + std::to_string(n) + " needs " + std::to_string(n) +
                          " covering intervals, have " + std::to_string(size()));
  while (cache_.size() <= n) build_next();
  return cache_[n];
}

void HSequence::build_next() const {
  const std::size_t n = cache_.size() - 1;
  const auto& interval = covering_.intervals()[n];
  const PolygonalFunction& prev = cache_.back();
  PolygonalFunction next = lattice_sup(prev, scale(trapezoid_phi(interval.a, interval.b), kTwo));

  for (const auto& x : merged_breakpoints(prev, next)) {
    Rational before = prev(x);
    Rational after = next(x);
    check(before <= after, "h not monotone at " + x.str());
    check(kZero <= after && after <= kTwo, "h outside [0,2] at " + x.str());
  }
  check(next.integral() < Rational(1, 2), "integral of h_" + std::to_string(n + 1) + " not below 1/2");
  Rational lo = max(kZero, interval.a);
  Rational hi = min(kOne, interval.b);
  if (lo <= hi) {
    check(next(lo) == kTwo && next(hi) == kTwo, "plateau missing at interval ends");
    for (const auto& p : next.points())
      if (lo <= p.x && p.x <= hi) check(p.y == kTwo, "plateau broken at " + p.x.str());
  }
  cache_.push_back(std::move(next));
}

std::optional<std::size_t> coverage_search(HSequence& hs, Dovetailer& source, const Rational& x,
                                           const CoverageOptions& options) {
  if (x < kZero || x > kOne) throw DomainError("coverage point " + x.str() + " outside [0,1]");
  hs.sync(source);
  std::size_t scanned = 0;
  for (;;) {
    const auto& intervals = hs.covering().intervals();
    for (; scanned < intervals.size(); ++scanned) {
      const auto& iv = intervals[scanned];
      if (iv.a <= x && x <= iv.b) {
        const std::size_t n = scanned + 1;
        check(hs.h(n)(x) == kTwo, "covered point does not reach 2");
        check(hs.h(n - 1)(x) < kTwo, "coverage reached 2 before the covering interval");
        return n;
      }
    }
    if (options.accelerate) {
      hs.inject(x);
    } else if (source.stage() < options.stage_budget) {
      source.advance();
      hs.sync(source);
    } else {
      return std::nullopt;
    }
  }
}

}  // namespace ccx
