#include "brick/io.hpp"

#include <cstdint>
#include <limits>
#include <sstream>

#include "brick/error.hpp"

namespace brick {

namespace {

Json positions_json(const Subword& s) { return Json(s.one_based()); }

Json vector_json(std::span<const std::int64_t> v) { return Json(std::vector<std::int64_t>(v.begin(), v.end())); }

Json constraints_json(const std::vector<LinearConstraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json normal = Json::array();
    for (const auto& x : c.normal) normal.push_back(to_json(x));
    out.push_back({{"normal", normal}, {"offset", to_json(c.offset)}});
  }
  return out;
}

std::vector<LinearConstraint> constraints_from_json(const Json& j) {
  std::vector<LinearConstraint> out;
  for (const auto& c : j) {
    LinearConstraint lc;
    for (const auto& x : c.at("normal")) lc.normal.push_back(integer_from_json(x));
    lc.offset = integer_from_json(c.at("offset"));
    out.push_back(std::move(lc));
  }
  return out;
}

Word word_from_json(const CoxeterDatum& datum, const Json& j) {
  std::vector<std::size_t> letters;
  for (const auto& x : j) {
    const auto v = x.get<std::int64_t>();
    if (v < 1 || static_cast<std::size_t>(v) > datum.rank())
      throw ParseError("generator index " + std::to_string(v) + " out of range");
    letters.push_back(static_cast<std::size_t>(v - 1));
  }
  return Word(datum, std::move(letters));
}

}  // namespace

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  return den == 1 ? num.str() : num.str() + "/" + den.str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  auto integer = [](std::string_view t) {
    if (t.empty()) throw ParseError("empty number");
    std::size_t start = t[0] == '-' || t[0] == '+' ? 1 : 0;
    if (start == t.size()) throw ParseError("malformed number '" + std::string(t) + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw ParseError("malformed number '" + std::string(t) + "'");
    return BigInt(std::string(t[0] == '+' ? t.substr(1) : t));
  };
  if (slash == std::string_view::npos) return Rational(integer(text));
  const BigInt den = integer(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(integer(text.substr(0, slash)), den);
}

Json to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return Json(x.convert_to<std::int64_t>());
  return Json(x.str());
}

Json to_json(const Rational& r) {
  if (boost::multiprecision::denominator(r) == 1) return to_json(BigInt(boost::multiprecision::numerator(r)));
  return Json(to_string(r));
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("expected an exact number, got " + j.dump());
}

BigInt integer_from_json(const Json& j) {
  const Rational r = rational_from_json(j);
  if (boost::multiprecision::denominator(r) != 1) throw ParseError("expected an integer, got " + j.dump());
  return boost::multiprecision::numerator(r);
}

// ---------------------------------------------------------------------------

Json to_json(const SubwordComplex& complex) {
  Json facets = Json::array();
  for (const auto& f : complex.facets) facets.push_back(positions_json(f));
  return {{"Q", complex.q.one_based()}, {"w", reduced_word(complex.w).one_based()}, {"facets", facets}};
}

SubwordComplex complex_from_json(const CoxeterDatum& datum, const Json& j) {
  try {
    const Word q = word_from_json(datum, j.at("Q"));
    const GroupElement w = evaluate(word_from_json(datum, j.at("w")));
    SubwordComplex out{q, w, {}, is_sphere(q, w)};
    for (const auto& f : j.at("facets"))
      out.facets.push_back(Subword::from_one_based(q.size(), f.get<std::vector<std::size_t>>(), SubwordRole::Face));
    std::sort(out.facets.begin(), out.facets.end());
    return out;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed complex JSON: ") + e.what());
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed complex JSON: ") + e.what());
  }
}

Json to_json(const Polytope& p) {
  Json vertices = Json::array();
  for (const auto& v : p.vertices) {
    Json coords = Json::array();
    for (const auto& c : v.coords) coords.push_back(to_json(c));
    vertices.push_back(coords);
  }
  return {{"ambientDim", p.ambient_dim},
          {"affineDim", p.affine_dim},
          {"vertices", vertices},
          {"inequalities", constraints_json(p.inequalities)},
          {"equations", constraints_json(p.equations)},
          {"incidence", p.incidence}};
}

Polytope polytope_from_json(const Json& j) {
  try {
    Polytope p;
    p.ambient_dim = j.at("ambientDim").get<std::size_t>();
    p.affine_dim = j.at("affineDim").get<std::size_t>();
    for (const auto& v : j.at("vertices")) {
      RationalPoint pt;
      for (const auto& c : v) pt.coords.push_back(rational_from_json(c));
      p.vertices.push_back(std::move(pt));
    }
    p.inequalities = constraints_from_json(j.at("inequalities"));
    p.equations = constraints_from_json(j.at("equations"));
    p.incidence = j.at("incidence").get<std::vector<std::vector<std::size_t>>>();
    return p;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed polytope JSON: ") + e.what());
  }
}

std::string to_off(const Polytope& p) {
  std::ostringstream out;
  out << "OFF " << p.ambient_dim << "\n" << p.vertices.size() << " " << p.incidence.size() << " 0\n";
  for (const auto& v : p.vertices) {
    for (std::size_t i = 0; i < v.coords.size(); ++i) out << (i ? " " : "") << to_string(v.coords[i]);
    out << "\n";
  }
  for (const auto& facet : p.incidence) {
    out << facet.size();
    for (std::size_t v : facet) out << " " << v;
    out << "\n";
  }
  return out.str();
}

Polytope polytope_from_off(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string tag;
  std::size_t dim = 0, nv = 0, nf = 0, ne = 0;
  if (!(in >> tag >> dim) || tag != "OFF") throw ParseError("OFF header expected");
  if (!(in >> nv >> nf >> ne)) throw ParseError("OFF counts expected");
  std::vector<RationalPoint> vertices(nv);
  for (auto& v : vertices) {
    for (std::size_t i = 0; i < dim; ++i) {
      std::string token;
      if (!(in >> token)) throw ParseError("truncated OFF vertex list");
      v.coords.push_back(parse_rational(token));
    }
  }
  for (std::size_t f = 0; f < nf; ++f) {
    std::size_t k = 0;
    if (!(in >> k)) throw ParseError("truncated OFF facet list");
    for (std::size_t i = 0, idx = 0; i < k; ++i)
      if (!(in >> idx) || idx >= nv) throw ParseError("bad OFF facet index");
  }
  if (vertices.empty()) throw ParseError("OFF file without vertices");
  return convex_hull(vertices);
}

Json to_json(const BrickPolytope& bp) {
  Json bricks = Json::array();
  for (const auto& b : bp.bricks) {
    Json entry = {{"facet", positions_json(b.face)}, {"weight", vector_json(b.vector)}};
    if (b.ambient) entry["ambient"] = vector_json(*b.ambient);
    bricks.push_back(entry);
  }
  return {{"Q", bp.complex.q.one_based()},
          {"w", reduced_word(bp.complex.w).one_based()},
          {"coordinates", bp.ambient ? "ambient" : "weight"},
          {"bricks", bricks},
          {"polytope", to_json(bp.polytope)},
          {"nonFacetFaces", bp.non_facet_faces},
          {"nonFacetFacesInside", bp.non_facet_faces_inside}};
}

Json to_json(const ToricReport& report) {
  Json details = Json::array();
  for (const auto& [facet, rank] : report.facet_ranks)
    details.push_back({{"facet", positions_json(facet)}, {"rank", rank}});
  return {{"rootIndependent", report.root_independent},
          {"lengthCondition", report.length_condition},
          {"isToric", report.is_toric},
          {"fiberDim", report.fiber_dim},
          {"details", details}};
}

Json to_json(const DualityReport& report) {
  Json offending = Json::array();
  for (const auto& [a, b] : report.offending) offending.push_back({positions_json(a), positions_json(b)});
  return {{"facets", report.facet_count},       {"vertices", report.vertex_count},
          {"bijection", report.bijection},      {"edgesMatch", report.edges_match},
          {"flipsParallel", report.flips_parallel}, {"valid", report.valid()},
          {"offending", offending}};
}

Json to_json(const StrataPoset& poset) {
  Json nodes = Json::array();
  for (const auto& n : poset.nodes) nodes.push_back(positions_json(n));
  Json covers = Json::array();
  for (auto [a, b] : poset.covers) covers.push_back({a, b});
  return {{"Q", poset.q.one_based()},
          {"w", reduced_word(poset.w).one_based()},
          {"nodes", nodes},
          {"covers", covers},
          {"maximum", poset.maximum},
          {"minimal", poset.minimal},
          {"intersectionClosed", poset.intersection_closed}};
}

Json to_json(const RichardsonSeed& seed) {
  return {{"R", seed.r.one_based()},
          {"S", seed.s.one_based()},
          {"Q", seed.q.one_based()},
          {"demazureIsLongest", seed.demazure_is_longest},
          {"fiberDim", seed.fiber_dim}};
}

}  // namespace brick
