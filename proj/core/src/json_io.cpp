#include "mixvol/json_io.hpp"

#include <algorithm>

namespace mixvol {

Json json_of(const Rat& q) { return rat_to_string(q); }

Rat rat_of_json(const Json& j) {
  if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw std::invalid_argument("expected a rational as a string or integer");
}

Json json_of(const IndexPoint& p) {
  Json out = Json::array();
  for (int c : p.coords()) out.push_back(c);
  return out;
}

IndexPoint point_of_json(const Json& j, int expected_degree) {
  if (!j.is_array()) throw std::invalid_argument("expected an index point array");
  std::vector<int> coords;
  for (const Json& c : j) coords.push_back(c.get<int>());
  return IndexPoint(std::move(coords), expected_degree);
}

Json json_of(const Configuration& c) {
  Json values = Json::array();
  for (int i = 0; i < c.delta().size(); ++i)
    values.push_back(Json::array({json_of(c.delta().point(i)), json_of(c.at_pos(i))}));
  return Json{{"n", c.n()},
              {"d", c.d()},
              {"scale", c.scale() == Scale::multiplicative ? "multiplicative" : "logarithmic"},
              {"values", std::move(values)}};
}

Configuration config_of_json(const Json& j) {
  const int n = j.at("n").get<int>();
  const int d = j.at("d").get<int>();
  const std::string scale_name = j.at("scale").get<std::string>();
  Scale scale;
  if (scale_name == "multiplicative")
    scale = Scale::multiplicative;
  else if (scale_name == "logarithmic")
    scale = Scale::logarithmic;
  else
    throw std::invalid_argument("unknown scale: " + scale_name);
  Configuration c(n, d, scale);
  std::vector<bool> seen(static_cast<std::size_t>(c.delta().size()), false);
  for (const Json& entry : j.at("values")) {
    const IndexPoint p = point_of_json(entry.at(0), d);
    const int pos = c.delta().position(p);
    if (seen[static_cast<std::size_t>(pos)])
      throw std::invalid_argument("duplicate configuration entry at " + p.to_string());
    seen[static_cast<std::size_t>(pos)] = true;
    c.set(p, rat_of_json(entry.at(1)));
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw std::invalid_argument("configuration does not cover the whole index simplex");
  return c;
}

namespace {

Json one_based(const std::vector<int>& v) {
  Json out = Json::array();
  for (int i : v) out.push_back(i + 1);
  return out;
}

}  // namespace

Json json_of(const Provenance& p) {
  Json out{{"family", family_name(p.family)}};
  if (p.p) out["p"] = json_of(*p.p);
  if (!p.I.empty()) out["I"] = one_based(p.I);
  if (!p.J.empty()) out["J"] = one_based(p.J);
  if (p.i) out["i"] = *p.i + 1;
  if (p.j) out["j"] = *p.j + 1;
  if (p.k) out["k"] = *p.k;
  if (p.l) out["l"] = *p.l;
  if (p.level) {
    out["copy_level"] = *p.level;
    out["copy_shift"] = p.shift;
  }
  return out;
}

namespace {

Json exponent_side(const ExponentMap& side) {
  Json out = Json::array();
  for (const auto& [p, e] : side) out.push_back(Json::array({json_of(p), e}));
  return out;
}

}  // namespace

Json json_of(const MonomialInequality& mi) {
  return Json{{"family", family_name(mi.family())},
              {"provenance", json_of(mi.provenance())},
              {"lhs", exponent_side(mi.lhs())},
              {"rhs", exponent_side(mi.rhs())},
              {"log2_const", mi.log2_const()}};
}

Json json_of(const LinearInequality& li) {
  Json coeffs = Json::array();
  for (const auto& [p, c] : li.coeffs) coeffs.push_back(Json::array({json_of(p), json_of(c)}));
  return Json{{"coeffs", std::move(coeffs)}, {"constant", json_of(li.constant)}};
}

Json json_of(const CheckReport& report) {
  Json violations = Json::array();
  for (const Violation& v : report.violations)
    violations.push_back(Json{{"inequality", json_of(v.inequality)},
                              {"lhs_value", json_of(v.lhs_value)},
                              {"rhs_value", json_of(v.rhs_value)}});
  return Json{{"total", report.total},
              {"satisfied", report.satisfied},
              {"violations", std::move(violations)}};
}

Json json_of(const VPolytope& p) {
  Json verts = Json::array();
  for (const Point& v : p.vertices()) {
    Json row = Json::array();
    for (const Rat& x : v) row.push_back(json_of(x));
    verts.push_back(std::move(row));
  }
  return Json{{"dim", p.dim()}, {"vertices", std::move(verts)}};
}

VPolytope polytope_of_json(const Json& j) {
  const int dim = j.at("dim").get<int>();
  std::vector<Point> pts;
  for (const Json& row : j.at("vertices")) {
    Point p;
    for (const Json& x : row) p.push_back(rat_of_json(x));
    if (static_cast<int>(p.size()) != dim)
      throw std::invalid_argument("vertex does not match the declared dimension");
    pts.push_back(std::move(p));
  }
  return convex_hull(pts);
}

Json json_of(const BodyTuple& t) {
  Json bodies = Json::array();
  for (const VPolytope& b : t.bodies) bodies.push_back(json_of(b));
  const char* role = t.role == BodyTuple::Role::generic
                         ? "generic"
                         : t.role == BodyTuple::Role::extremal ? "extremal" : "heine";
  return Json{{"role", role}, {"bodies", std::move(bodies)}};
}

BodyTuple tuple_of_json(const Json& j) {
  BodyTuple t;
  const Json& bodies = j.is_array() ? j : j.at("bodies");
  for (const Json& b : bodies) t.bodies.push_back(polytope_of_json(b));
  if (j.is_object() && j.contains("role")) {
    const std::string role = j.at("role").get<std::string>();
    if (role == "generic")
      t.role = BodyTuple::Role::generic;
    else if (role == "extremal")
      t.role = BodyTuple::Role::extremal;
    else if (role == "heine")
      t.role = BodyTuple::Role::heine;
    else
      throw std::invalid_argument("unknown tuple role: " + role);
  }
  return t;
}

Json json_of_configurations(const std::vector<Configuration>& configs) {
  Json out = Json::array();
  for (const Configuration& c : configs) out.push_back(json_of(c));
  return out;
}

Json json_of(const VertexSet& vs) {
  return Json{{"feasible", vs.feasible},
              {"pointed", vs.pointed},
              {"vertices", json_of_configurations(vs.vertices)},
              {"rays", json_of_configurations(vs.rays)},
              {"lineality", json_of_configurations(vs.lineality)}};
}

Json json_of(const Orbit& orbit) {
  return Json{{"representative", json_of(orbit.representative)},
              {"size", orbit.members.size()},
              {"members", json_of_configurations(orbit.members)}};
}

Json json_of(const RowProvenance& p) {
  switch (p.kind) {
    case RowProvenance::Kind::family:
      return Json{{"kind", "family"}, {"inequality", json_of(*p.inequality)}};
    case RowProvenance::Kind::corner_nonneg:
      return Json{{"kind", "corner_nonneg"}, {"point", json_of(*p.point)}};
    case RowProvenance::Kind::nonneg:
      return Json{{"kind", "nonneg"}, {"point", json_of(*p.point)}};
    case RowProvenance::Kind::slice_upper:
      return Json{{"kind", "slice_upper"}};
    case RowProvenance::Kind::slice_lower:
      return Json{{"kind", "slice_lower"}};
    case RowProvenance::Kind::custom:
      return Json{{"kind", "custom"}, {"label", p.label}};
  }
  throw std::logic_error("unreachable row provenance kind");
}

Json json_of(const DualCertificate& cert) {
  Json mults = Json::array();
  for (const auto& [prov, weight] : cert.multipliers)
    mults.push_back(Json{{"row", json_of(prov)}, {"weight", json_of(weight)}});
  return Json{{"target", json_of(cert.target)},
              {"value", json_of(cert.value)},
              {"multipliers", std::move(mults)},
              {"derived", json_of(cert.derived)}};
}

Json json_of(const BoundCertificate& cert) {
  Json chain = Json::array();
  for (const auto& step : cert.chain) {
    Json entry{{"from", json_of(step.from)}, {"mu", json_of(step.mu)}};
    entry["I"] = one_based(step.I);
    entry["J"] = one_based(step.J);
    chain.push_back(std::move(entry));
  }
  return Json{{"target", json_of(cert.target)},
              {"slope", json_of(cert.slope)},
              {"constant", json_of(cert.constant)},
              {"chain", std::move(chain)}};
}

Json json_of(const HeineReport& report) {
  Json matrix = Json::array();
  for (const auto& row : report.matrix.entries) {
    Json r = Json::array();
    for (const Rat& x : row) r.push_back(json_of(x));
    matrix.push_back(std::move(r));
  }
  return Json{{"matrix", std::move(matrix)},
              {"det", json_of(report.det)},
              {"minor_12", json_of(report.minor_12)},
              {"minor_13", json_of(report.minor_13)},
              {"minor_23", json_of(report.minor_23)},
              {"satisfied", report.satisfied}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mixvol
