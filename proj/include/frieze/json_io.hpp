#pragma once

#include "frieze/disc.hpp"
#include "frieze/quiddity.hpp"
#include "frieze/strip.hpp"

#include <json.hpp>

#include <string>

namespace frieze {

using nlohmann::json;

// Entries and counts cross the wire as decimal strings, uniformly, so that
// values beyond 2^53 survive any JSON consumer bit-exactly.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

// Quiddity sequences are plain integer arrays, e.g. [1,4,1,2,6]; string
// elements are accepted on input for symmetry with entry serialization.
json quiddity_to_json(const QuiddityData& q);
QuiddityData quiddity_from_json(const json& j);

// {"n":5,"arcs":[{"bridging":5},{"peripheral":[1,3]},...]}; a loop at i is
// {"peripheral":[i,i]}. Arcs are emitted in canonical sorted order.
json disc_to_json(const DiscTriangulation& t);
DiscTriangulation disc_from_json(const json& j);

// {"n":5,"arcs":[{"from":{"i":5,"k":0},"to":{"i":2,"k":1}},
//                {"from":{"upper":0},"to":{"i":5,"k":0}}, ...]}
json strip_to_json(const StripTriangulation& t);
StripTriangulation strip_from_json(const json& j);

json strip_arc_to_json(const StripArc& a, long long n);

} // namespace frieze
