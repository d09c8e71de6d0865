#include "ccx/enumerator.hpp"

#include <algorithm>
#include <stdexcept>

namespace ccx {

std::string to_string(RejectReason reason) {
  switch (reason) {
    case RejectReason::parse: return "parse";
    case RejectReason::delta: return "delta";
    case RejectReason::breakpoints: return "breakpoints";
    case RejectReason::negativity: return "negativity";
    case RejectReason::integral: return "integral";
  }
  return "unknown";
}

Validation validate_candidate(const Word& w) {
  std::vector<Rational> values;
  try {
    for (const auto& segment : parse_star_system(w)) values.push_back(decode_rational(segment.str()));
  } catch (const ParseError& e) {
    return Rejection{RejectReason::parse, e.what()};
  }
  if (values.size() < 5 || values.size() % 2 == 0)
    return Rejection{RejectReason::parse,
                     "expected delta and at least two (p, q) pairs, got " +
                         std::to_string(values.size()) + " numbers"};

  const Rational& delta = values.front();
  if (delta.sign() <= 0) return Rejection{RejectReason::delta, "delta " + delta.str() + " <= 0"};

  std::vector<Point> points;
  for (std::size_t i = 1; i < values.size(); i += 2) points.push_back({values[i], values[i + 1]});
  if (points.front().x != Rational(0) || points.back().x != Rational(1))
    return Rejection{RejectReason::breakpoints, "breakpoints must run from 0 to 1"};
  for (std::size_t k = 1; k < points.size(); ++k)
    if (!(points[k - 1].x < points[k].x))
      return Rejection{RejectReason::breakpoints, "breakpoints must strictly increase"};
  for (const auto& p : points)
    if (p.y.sign() < 0) return Rejection{RejectReason::negativity, "value " + p.y.str() + " < 0"};

  PolygonalFunction g(std::move(points));
  Rational area = g.integral();
  if (!(area < Rational(1, 2)))
    return Rejection{RejectReason::integral, "integral " + area.str() + " is not below 1/2"};
  return Candidate{delta, std::move(g)};
}

Word encode_candidate(const Rational& delta, const std::vector<Point>& points) {
  std::vector<Word> segments{encode_rational(delta)};
  for (const auto& p : points) {
    segments.push_back(encode_rational(p.x));
    segments.push_back(encode_rational(p.y));
  }
  return join_star_system(segments);
}

void EnumerationState::sync(const Dovetailer& source) {
  stages_ = source.stage();
  const auto& events = source.events();
  for (; events_seen_ < events.size(); ++events_seen_) {
    const HaltEvent& event = events[events_seen_];
    if (position_of(event.index)) continue;
    auto verdict = validate_candidate(event.output);
    if (auto* c = std::get_if<Candidate>(&verdict)) {
      entries_.push_back({entries_.size(), event.index, c->delta, c->g, event.output});
    } else {
      rejections_.emplace(event.index, std::get<Rejection>(verdict));
    }
  }
}

std::optional<std::size_t> EnumerationState::position_of(std::uint64_t index) const {
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const EnumerationEntry& e) { return e.mu == index; });
  if (it == entries_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - entries_.begin());
}

EnumerationState enumerate_mu(const Numbering& numbering, std::uint64_t stages) {
  if (stages == 0) throw std::invalid_argument("enumeration needs at least one stage");
  Dovetailer source(numbering);
  source.advance_to(stages);
  EnumerationState state;
  state.sync(source);
  return state;
}

}  // namespace ccx
