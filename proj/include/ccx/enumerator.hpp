#pragma once

// The index set of machines whose self-application halts with a list
// "*delta*p0*q0*...*pm*qm*" describing delta > 0 and a nonnegative polygonal
// g with integral below 1/2, and its repetition-free enumeration mu in
// dovetail discovery order.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ccx/dovetail.hpp"
#include "ccx/polygon.hpp"

namespace ccx {

struct Candidate {
  Rational delta;
  PolygonalFunction g;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

enum class RejectReason { parse, delta, breakpoints, negativity, integral };

std::string to_string(RejectReason reason);

struct Rejection {
  RejectReason reason;
  std::string detail;
};

using Validation = std::variant<Candidate, Rejection>;

Validation validate_candidate(const Word& w);

// Inverse direction, for building registry seeds: "*delta*p0*q0*...*".
Word encode_candidate(const Rational& delta, const std::vector<Point>& points);

struct EnumerationEntry {
  std::uint64_t n = 0;
  std::uint64_t mu = 0;
  Rational delta;
  PolygonalFunction g = PolygonalFunction::constant(Rational(0));
  Word output;
  friend bool operator==(const EnumerationEntry&, const EnumerationEntry&) = default;
};

class EnumerationState {
 public:
  const std::vector<EnumerationEntry>& entries() const { return entries_; }
  // Machines that halted on their own index with an output that failed
  // validation, keyed by index.
  const std::map<std::uint64_t, Rejection>& rejections() const { return rejections_; }
  std::uint64_t stages() const { return stages_; }

  // Absorbs dovetail events not yet seen.
  void sync(const Dovetailer& source);

  // n with mu(n) == index, if enrolled.
  std::optional<std::size_t> position_of(std::uint64_t index) const;

 private:
  std::vector<EnumerationEntry> entries_;
  std::map<std::uint64_t, Rejection> rejections_;
  std::size_t events_seen_ = 0;
  std::uint64_t stages_ = 0;
};

EnumerationState enumerate_mu(const Numbering& numbering, std::uint64_t stages);

}  // namespace ccx
