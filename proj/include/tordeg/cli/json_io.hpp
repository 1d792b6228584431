#pragma once

#include <json.hpp>

#include "tordeg/polytopes/polytope.hpp"
#include "tordeg/tropfan/tropical.hpp"

namespace tordeg {

using Json = nlohmann::json;

// Integers become JSON numbers when they fit in a long and decimal strings otherwise.
Json to_json(const BigInt& z);
Json to_json(const IntVec& v);
Json to_json(const IntMatrix& m);
Json to_json(const std::vector<IntVec>& rows);
// Rationals are always strings, "p/q" or "p".
Json to_json(const RatVec& v);

Json ideal_json(const Ideal& ideal);
// Reads {"variables", "generators", "grading"} as written by ideal_json.
Ideal ideal_from_json(const Json& j);

Json polytope_json(const Polytope& p);
// Rebuilds the polytope from its vertices.
Polytope polytope_from_json(const Json& j);

Json cone_json(const MaximalCone& c, size_t index);
Json membership_json(const MembershipReport& r);

BigInt bigint_from_json(const Json& j);
IntVec intvec_from_csv(const std::string& csv);

}  // namespace tordeg
