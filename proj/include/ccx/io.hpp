#pragma once

// JSON and CSV forms of the library's values. Rationals are always "p/q"
// strings; JSON output is deterministic (sorted keys, no timestamps).

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "ccx/covering.hpp"
#include "ccx/diagonal.hpp"
#include "ccx/refutation.hpp"

namespace ccx {

using Json = nlohmann::json;

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

// {"points": [["p", "q"], ...]}
Json to_json(const PolygonalFunction& f);
PolygonalFunction polygon_from_json(const Json& j);

Json to_json(const HaltEvent& e);
Json to_json(const CoveringPrefix& prefix);
Json to_json(const EnumerationEntry& entry);
Json to_json(const DiagonalRow& row);
Json to_json(const ExactCheck& check);
ExactCheck check_from_json(const Json& j);
Json to_json(const RiemannReport& report);

Json to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& j);

// Rows "x,f(x)" at every breakpoint, plus `refine` evenly spaced samples
// inside each segment. Decimal rendering with `digits` fractional digits when
// digits >= 0, exact "p/q" otherwise.
void write_csv(std::ostream& out, const PolygonalFunction& f, int refine, int digits);

}  // namespace ccx
