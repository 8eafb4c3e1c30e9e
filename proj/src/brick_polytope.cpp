#include "brick/brick_polytope.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "brick/error.hpp"
#include "brick/networks.hpp"

namespace brick {

namespace {

std::vector<BigInt> to_big(std::span<const std::int64_t> v) { return {v.begin(), v.end()}; }

std::int64_t letter_sum(const Word& q) {
  std::int64_t s = 0;
  for (std::size_t k = 0; k < q.size(); ++k) s += static_cast<std::int64_t>(q[k]) + 1;
  return s;
}

void require_sphere(const Word& q, const GroupElement& w) {
  if (!is_sphere(q, w)) throw DomainError("Dem(Q) != w: " + reduced_word(demazure_product(q)).to_string() +
                                          " vs " + reduced_word(w).to_string());
}

std::vector<std::uint64_t> non_facet_faces(const SubwordComplex& complex) {
  std::set<std::uint64_t> faces;
  std::set<std::uint64_t> facet_masks;
  for (const auto& f : complex.facets) {
    const auto pos = f.positions();
    if (pos.size() > 20) throw DomainError("face enumeration limited to facets of size 20");
    std::uint64_t full = 0;
    for (std::size_t p : pos) full |= std::uint64_t{1} << p;
    facet_masks.insert(full);
    for (std::uint32_t sub = 0; sub < (1u << pos.size()); ++sub) {
      std::uint64_t mask = 0;
      for (std::size_t b = 0; b < pos.size(); ++b)
        if (sub >> b & 1u) mask |= std::uint64_t{1} << pos[b];
      faces.insert(mask);
    }
  }
  std::vector<std::uint64_t> out;
  for (auto m : faces)
    if (!facet_masks.count(m)) out.push_back(m);
  return out;
}

}  // namespace

BrickVector brick_vector(const Word& q, const Subword& face) {
  if (face.role() != SubwordRole::Face || face.word_size() != q.size())
    throw DomainError("expected a face subword of Q");
  const CoxeterDatum& datum = q.datum();
  BrickVector out{face, IntVector(datum.rank(), 0), std::nullopt};
  GroupElement prefix = GroupElement::identity(datum);
  for (std::size_t k = 0; k < q.size(); ++k) {
    if (!face.contains(k)) prefix = prefix.times_generator(q[k]);
    const IntVector term = prefix.weight_matrix().column(q[k]);
    for (std::size_t i = 0; i < term.size(); ++i) out.vector[i] += term[i];
  }
  if (datum.is_type_a()) out.ambient = ambient_coordinates(out.vector, letter_sum(q));
  return out;
}

IntVector brick_vector_from_functions(const Word& q, const Subword& face) {
  const auto weights = weight_functions(q, face);
  const auto roots = root_functions(q, face);
  const IntMatrix& cartan = q.datum().cartan();
  IntVector out(q.datum().rank(), 0);
  for (std::size_t k = 0; k < q.size(); ++k) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += weights[k][i];
    if (face.contains(k)) continue;
    const IntVector root_in_weights = cartan.apply(roots[k]);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= root_in_weights[i];
  }
  return out;
}

RationalPoint hull_point(const BrickPolytope& bp, const BrickVector& b) {
  return RationalPoint::from_integers(bp.ambient ? *b.ambient : b.vector);
}

BrickPolytope brick_polytope(const Word& q, const GroupElement& w) {
  require_sphere(q, w);
  BrickPolytope bp{facets(q, w), {}, {}, q.datum().is_type_a(), 0, true};
  std::vector<RationalPoint> points;
  for (const auto& f : bp.complex.facets) {
    bp.bricks.push_back(brick_vector(q, f));
    points.push_back(hull_point(bp, bp.bricks.back()));
  }
  bp.polytope = convex_hull(points);

  for (std::uint64_t mask : non_facet_faces(bp.complex)) {
    Subword face(q.size(), SubwordRole::Face);
    for (std::size_t k = 0; k < q.size(); ++k)
      if (mask >> k & 1u) face.set(k);
    if (!(complement_product(q, face, q.size()) == w)) continue;
    ++bp.non_facet_faces;
    if (!bp.polytope.contains(hull_point(bp, brick_vector(q, face)))) bp.non_facet_faces_inside = false;
  }
  return bp;
}

std::size_t root_configuration_rank(const Word& q, const Subword& face) {
  std::vector<std::vector<BigInt>> rows;
  for (const auto& r : root_configuration(q, face)) rows.push_back(to_big(r));
  return integer_rank(std::move(rows));
}

bool is_root_independent(const Word& q, const GroupElement& w) {
  const auto seed = greedy_facet(q, w);
  if (!seed) throw DomainError("Delta(Q, w) has no facets");
  const auto complex = facets(q, w);
  const Subword& first = complex.facets.front();
  return root_configuration_rank(q, first) == first.count();
}

ToricReport toric_classification(const Word& q, const GroupElement& w) {
  ToricReport report;
  const std::size_t m = q.size(), lw = w.length();
  report.length_condition = lw < m && m <= lw + q.datum().rank();
  report.fiber_dim = m >= lw ? m - lw : 0;
  const auto complex = facets(q, w);
  for (const auto& f : complex.facets) report.facet_ranks.emplace_back(f, root_configuration_rank(q, f));
  report.root_independent =
      !report.facet_ranks.empty() && report.facet_ranks.front().second == report.facet_ranks.front().first.count();
  report.is_toric = report.root_independent && report.length_condition;
  return report;
}

DualityReport duality_check(const Word& q, const GroupElement& w) {
  require_sphere(q, w);
  if (!is_root_independent(q, w)) throw DomainError("Q is not root independent");
  const BrickPolytope bp = brick_polytope(q, w);
  const auto& fs = bp.complex.facets;
  DualityReport report;
  report.facet_count = fs.size();
  report.vertex_count = bp.polytope.vertices.size();

  // Facet index -> vertex index.
  std::vector<std::optional<std::size_t>> vertex_of(fs.size());
  std::map<std::size_t, std::size_t> first_facet_at;
  report.bijection = report.facet_count == report.vertex_count;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    vertex_of[f] = bp.polytope.vertex_index(hull_point(bp, bp.bricks[f]));
    if (!vertex_of[f]) {
      report.bijection = false;
      continue;
    }
    auto [it, fresh] = first_facet_at.emplace(*vertex_of[f], f);
    if (!fresh) {
      report.bijection = false;
      report.offending.emplace_back(fs[it->second], fs[f]);
    }
  }

  auto facet_index = [&](const Subword& s) {
    return static_cast<std::size_t>(std::lower_bound(fs.begin(), fs.end(), s) - fs.begin());
  };
  const IntMatrix& cartan = q.datum().cartan();
  std::set<std::pair<std::size_t, std::size_t>> flip_edges;
  report.flips_parallel = true;
  for (std::size_t f = 0; f < fs.size(); ++f) {
    const auto roots = root_functions(q, fs[f]);
    for (std::size_t i : fs[f].positions()) {
      std::size_t g;
      try {
        g = facet_index(flip(bp.complex, fs[f], i).first);
      } catch (const DomainError&) {
        continue;
      }
      flip_edges.emplace(std::min(f, g), std::max(f, g));
      IntVector diff = bp.bricks[f].vector;
      for (std::size_t c = 0; c < diff.size(); ++c) diff[c] -= bp.bricks[g].vector[c];
      const bool nonzero = std::any_of(diff.begin(), diff.end(), [](std::int64_t x) { return x != 0; });
      const std::size_t r = integer_rank({to_big(diff), to_big(cartan.apply(roots[i]))});
      if (!nonzero || r != 1) {
        report.flips_parallel = false;
        report.offending.emplace_back(fs[f], fs[g]);
      }
    }
  }

  report.edges_match = report.bijection;
  if (report.bijection) {
    std::vector<std::size_t> facet_at(fs.size());
    for (std::size_t f = 0; f < fs.size(); ++f) facet_at[*vertex_of[f]] = f;
    std::set<std::pair<std::size_t, std::size_t>> polytope_edges;
    for (auto [a, b] : edge_graph(bp.polytope))
      polytope_edges.emplace(std::min(facet_at[a], facet_at[b]), std::max(facet_at[a], facet_at[b]));
    std::vector<std::pair<std::size_t, std::size_t>> mismatch;
    std::set_symmetric_difference(flip_edges.begin(), flip_edges.end(), polytope_edges.begin(),
                                  polytope_edges.end(), std::back_inserter(mismatch));
    for (auto [a, b] : mismatch) report.offending.emplace_back(fs[a], fs[b]);
    report.edges_match = mismatch.empty();
  }
  return report;
}

Word associahedron_word(const Word& c) {
  if (!is_coxeter_word(c)) throw DomainError("'" + c.to_string() + "' is not a Coxeter element word");
  const CoxeterDatum& datum = c.datum();
  if (!datum.is_finite()) throw DomainError("the associahedron word needs a finite type");
  return c + c_sorting_word(c, longest_element(datum));
}

}  // namespace brick
