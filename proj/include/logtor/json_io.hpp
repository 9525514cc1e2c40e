#pragma once

#include <json.hpp>

#include "logtor/arrangement.hpp"
#include "logtor/invariants.hpp"
#include "logtor/mpoly.hpp"
#include "logtor/quadric.hpp"
#include "logtor/torelli.hpp"

namespace logtor {

using Json = nlohmann::ordered_json;

// Scalars: integers stay JSON numbers, other rationals become "p/q" strings.
Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json quadext_to_json(const QuadExt& q);

// {"shape":[1,1],"degree":[2,2],"terms":[{"exp":[[2,0],[2,0]],"num":1,"den":1},...]}
MPoly mpoly_from_json(const Json& j);
Json mpoly_to_json(const MPoly& f);

// {"dim": n, "matrix": [[...]]}
Quadric quadric_from_json(const Json& j);
Json quadric_to_json(const Quadric& q);

// bare coordinate array or {"h": [...]}
Hyperplane hyperplane_from_json(const Json& j);

// {"r": 3, "hyperplanes": [[1,0,0,0],...]}
HArrangement arrangement_from_json(const Json& j);

// {"quadric": {...}, "hyperplanes": [[...],...]}
SectionConfig section_config_from_json(const Json& j);

// {"curves": [[a,b],...]} or a bare array of pairs
std::vector<CurveClass> curves_from_json(const Json& j);

Json span_to_json(const Span& s);
Json smoothness_to_json(const SmoothnessReport& r);
Json pencil_to_json(const PencilReport& r);

}  // namespace logtor
