#include "ccx/io.hpp"

#include <ostream>

namespace ccx {

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("rational must be a \"p/q\" string");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const PolygonalFunction& f) {
  Json pts = Json::array();
  for (const auto& p : f.points()) pts.push_back({p.x.str(), p.y.str()});
  return Json{{"points", pts}};
}

PolygonalFunction polygon_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array())
    throw ParseError("polygonal function JSON needs a \"points\" array");
  std::vector<Point> pts;
  for (const auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2) throw ParseError("each point must be [\"p\", \"q\"]");
    pts.push_back({rational_from_json(p[0]), rational_from_json(p[1])});
  }
  return PolygonalFunction(std::move(pts));
}

Json to_json(const HaltEvent& e) {
  return Json{{"index", e.index}, {"input", e.input.str()}, {"output", e.output.str()},
              {"steps", e.steps}};
}

Json to_json(const CoveringPrefix& prefix) {
  Json intervals = Json::array();
  for (const auto& iv : prefix.intervals()) {
    std::string source = iv.source.kind == IntervalSource::Kind::machine ? "machine:" : "injected:";
    intervals.push_back({iv.a.str(), iv.b.str(), source + std::to_string(iv.source.id)});
  }
  Json injections = Json::array();
  for (const auto& inj : prefix.injections()) injections.push_back({inj.centre.str(), inj.slot});
  return Json{{"intervals", intervals},
              {"injections", injections},
              {"total_length", prefix.total_length().str()}};
}

Json to_json(const EnumerationEntry& entry) {
  return Json{{"n", entry.n}, {"mu", entry.mu}, {"delta", entry.delta.str()}, {"g", to_json(entry.g)}};
}

Json to_json(const DiagonalRow& row) {
  return Json{{"n", row.n},         {"mu", row.mu},   {"zeta", row.zeta.str()},
              {"beta", row.beta.str()}, {"nu", row.nu}, {"nu_next", row.nu_next}};
}

Json to_json(const ExactCheck& check) {
  return Json{{"name", check.name},
              {"lhs", check.lhs.str()},
              {"relation", to_string(check.relation)},
              {"rhs", check.rhs.str()},
              {"holds", check.holds()}};
}

ExactCheck check_from_json(const Json& j) {
  return ExactCheck{j.at("name").get<std::string>(), rational_from_json(j.at("lhs")),
                    relation_from_string(j.at("relation").get<std::string>()),
                    rational_from_json(j.at("rhs"))};
}

Json to_json(const RiemannReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) checks.push_back(to_json(c));
  return Json{{"N", report.N},
              {"eps", report.eps.str()},
              {"window", report.window.str()},
              {"cells", report.cells},
              {"A", report.omega_sum.str()},
              {"B", report.bump_sum.str()},
              {"C", report.bound_sum.str()},
              {"left_sum", report.left_sum.str()},
              {"right_sum", report.right_sum.str()},
              {"checks", checks},
              {"passed", report.passed()}};
}

Json to_json(const Certificate& cert) {
  Json checks = Json::array();
  for (const auto& c : cert.checks) checks.push_back(to_json(c));
  return Json{{"numbering_version", cert.numbering_version},
              {"registry_digest", cert.registry_digest},
              {"m", cert.m},
              {"mu_m", cert.mu_m},
              {"delta_m", cert.delta_m.str()},
              {"g_m", to_json(cert.g_m)},
              {"zeta", cert.zeta.str()},
              {"beta", cert.beta.str()},
              {"value_at_zeta", cert.value_at_zeta.str()},
              {"value_at_zeta_plus_beta", cert.value_at_zeta_plus_beta.str()},
              {"required_bound", cert.required_bound.str()},
              {"checks", checks}};
}

Certificate certificate_from_json(const Json& j) {
  try {
    Certificate cert;
    cert.numbering_version = j.at("numbering_version").get<std::string>();
    cert.registry_digest = j.at("registry_digest").get<std::string>();
    cert.m = j.at("m").get<std::uint64_t>();
    cert.mu_m = j.at("mu_m").get<std::uint64_t>();
    cert.delta_m = rational_from_json(j.at("delta_m"));
    cert.g_m = polygon_from_json(j.at("g_m"));
    cert.zeta = rational_from_json(j.at("zeta"));
    cert.beta = rational_from_json(j.at("beta"));
    cert.value_at_zeta = rational_from_json(j.at("value_at_zeta"));
    cert.value_at_zeta_plus_beta = rational_from_json(j.at("value_at_zeta_plus_beta"));
    cert.required_bound = rational_from_json(j.at("required_bound"));
    for (const auto& c : j.at("checks")) cert.checks.push_back(check_from_json(c));
    return cert;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
}

void write_csv(std::ostream& out, const PolygonalFunction& f, int refine, int digits) {
  auto render = [&](const Rational& r) { return digits >= 0 ? r.decimal(digits) : r.str(); };
  out << "x,f(x)\n";
  const auto& pts = f.points();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    out << render(pts[k].x) << ',' << render(pts[k].y) << '\n';
    if (k + 1 == pts.size()) break;
    for (int i = 1; i <= refine; ++i) {
      Rational x = pts[k].x + (pts[k + 1].x - pts[k].x) * Rational(i, refine + 1);
      out << render(x) << ',' << render(f(x)) << '\n';
    }
  }
}

}  // namespace ccx
