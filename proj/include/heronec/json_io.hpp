#pragma once

// JSON encoders for the library's value types.  Anything rational is
// serialized as an exact "p/q" string and interval endpoints as
// outward-rounded decimal strings, so dumps are byte-stable across runs,
// platforms and thread counts; keys keep insertion order for the same
// reason.

#include "json.hpp"

#include "heronec/curve.hpp"
#include "heronec/diophantine.hpp"
#include "heronec/exact.hpp"
#include "heronec/families.hpp"
#include "heronec/height.hpp"
#include "heronec/interval.hpp"
#include "heronec/torsion.hpp"

namespace heronec {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& v);
Json interval_json(const Interval& v);
Json curve_json(const CurveRef& curve);
Json point_json(const CurvePoint& p);  // affine {"x","y"}; infinity "O"
Json family_json(const FamilyInstance& inst);
Json torsion_json(const TorsionGroup& t);
Json independence_json(const IndependenceReport& rep);
Json quartic_json(const QuarticSolution& s);
Json sextic_json(const SexticSolution& s);

}  // namespace heronec
