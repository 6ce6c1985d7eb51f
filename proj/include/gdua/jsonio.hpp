#pragma once

#include "json.hpp"

#include "gdua/autgroup.hpp"

namespace gdua {

using Json = nlohmann::ordered_json;

// Scalars: {"num": "...", "den": "..."} or {"a": ..., "b": ..., "D": -3}.
// Readers also accept integers and textual scalar syntax in strings.
Json scalar_to_json(const Scalar& x);
Scalar scalar_from_json(const Json& j);

// Polynomials: coefficient array low-to-high, e.g. [0, 1] for X.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

// Elements: {"terms": [{"u": a, "h": b, "d": c, "coef": <scalar>}]}.
Json element_to_json(const Element& x);
Element element_from_json(const Json& j);

// Presentations: {"f": [...], "r": "...", "s": "...", "gamma": "..."}.
Json presentation_to_json(const Presentation& p);
Presentation presentation_from_json(const Json& j);

Json automorphism_to_json(const Automorphism& a);
Json group_description_to_json(const GroupDescription& d);

} // namespace gdua
