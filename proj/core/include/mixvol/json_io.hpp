#pragma once

// JSON encodings of every externally visible object. Rationals are strings
// "a/b" (just "a" for integers), index points are integer arrays, and all
// maps are emitted in the canonical index order, so serialization is
// byte-stable and suitable for golden-file comparison.

#include "mixvol/bounds.hpp"
#include "mixvol/cone.hpp"
#include "mixvol/geometry.hpp"
#include "mixvol/inequality.hpp"
#include "mixvol/lp.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace mixvol {

using Json = nlohmann::json;

Json json_of(const Rat& q);
Rat rat_of_json(const Json& j);

Json json_of(const IndexPoint& p);
IndexPoint point_of_json(const Json& j, int expected_degree = -1);

Json json_of(const Configuration& c);
Configuration config_of_json(const Json& j);

Json json_of(const Provenance& p);
Json json_of(const MonomialInequality& mi);
Json json_of(const LinearInequality& li);
Json json_of(const CheckReport& report);

Json json_of(const VPolytope& p);
VPolytope polytope_of_json(const Json& j);
Json json_of(const BodyTuple& t);
BodyTuple tuple_of_json(const Json& j);

// Golden format for vertex lists: a plain JSON array of configurations.
Json json_of_configurations(const std::vector<Configuration>& configs);
Json json_of(const VertexSet& vs);
Json json_of(const Orbit& orbit);

Json json_of(const RowProvenance& p);
Json json_of(const DualCertificate& cert);
Json json_of(const BoundCertificate& cert);
Json json_of(const HeineReport& report);

// dump with two-space indentation plus a trailing newline; the one
// serialization used for files and golden comparisons.
std::string canonical_dump(const Json& j);

}  // namespace mixvol
