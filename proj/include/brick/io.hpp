#pragma once

// JSON and OFF serialization. Generator indices and positions are 1-based in
// every serialized form.

#include <string>
#include <string_view>

#include "json.hpp"

#include "brick/brick_polytope.hpp"
#include "brick/geometry.hpp"
#include "brick/subword.hpp"

namespace brick {

using Json = nlohmann::ordered_json;

/// Integers as JSON numbers when they fit in 64 bits, strings otherwise;
/// non-integers as "p/q".
Json to_json(const Rational& r);
Json to_json(const BigInt& x);
Rational rational_from_json(const Json& j);
BigInt integer_from_json(const Json& j);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// {"Q": [...], "w": [reduced word], "facets": [[1,5], ...]}
Json to_json(const SubwordComplex& complex);
/// Facets are read, not recomputed; sphere is recomputed from Q and w.
SubwordComplex complex_from_json(const CoxeterDatum& datum, const Json& j);

Json to_json(const Polytope& p);
Polytope polytope_from_json(const Json& j);

/// OFF-like text: "OFF <ambient dim>", counts, one vertex per line with
/// exact rational coordinates, then one incidence list per facet.
std::string to_off(const Polytope& p);
/// Vertices and incidence only; inequalities are recomputed from vertices.
Polytope polytope_from_off(std::string_view text);

Json to_json(const BrickPolytope& bp);
Json to_json(const ToricReport& report);
Json to_json(const DualityReport& report);
Json to_json(const StrataPoset& poset);
Json to_json(const RichardsonSeed& seed);

}  // namespace brick
