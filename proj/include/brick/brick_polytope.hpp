#pragma once

// Brick vectors and the brick polytope of a word, plus the root-independence,
// toric and duality predicates built on them.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "brick/coxeter.hpp"
#include "brick/geometry.hpp"
#include "brick/subword.hpp"

namespace brick {

struct BrickVector {
  Subword face;
  /// Weight-basis coordinates.
  IntVector vector;
  /// Type A only: coordinates in R^n with coordinate sum sum_k q_k.
  std::optional<IntVector> ambient;
};

/// B(J) = sum over k of (Q \ J)_{(k)}(omega_{q_k}), the prefix including
/// position k itself. Any face subword is accepted.
BrickVector brick_vector(const Word& q, const Subword& face);

/// The same vector assembled from weight and root functions:
/// sum_k w(J,k) - sum_{k not in J} r(J,k), with roots taken to weight
/// coordinates.
IntVector brick_vector_from_functions(const Word& q, const Subword& face);

struct BrickPolytope {
  SubwordComplex complex;
  /// bricks[f] belongs to complex.facets[f].
  std::vector<BrickVector> bricks;
  /// Hull of the ambient vectors in type A, of the weight vectors otherwise.
  Polytope polytope;
  bool ambient = false;
  /// Non-facet faces J with complement product w that were tested.
  std::size_t non_facet_faces = 0;
  /// All of them lie in the hull.
  bool non_facet_faces_inside = true;
};

/// Requires Dem(Q) = w; throws DomainError otherwise.
BrickPolytope brick_polytope(const Word& q, const GroupElement& w);

/// The point of `bricks[f]` used in `polytope`.
RationalPoint hull_point(const BrickPolytope& bp, const BrickVector& b);

std::size_t root_configuration_rank(const Word& q, const Subword& face);

/// Decided on the lexicographically first facet. Throws DomainError when
/// Delta(Q, w) has no facets.
bool is_root_independent(const Word& q, const GroupElement& w);

struct ToricReport {
  bool root_independent = false;
  /// l(w) < |Q| <= l(w) + rank
  bool length_condition = false;
  bool is_toric = false;
  std::size_t fiber_dim = 0;
  /// (facet, rank of its root configuration) for every facet.
  std::vector<std::pair<Subword, std::size_t>> facet_ranks;
};

ToricReport toric_classification(const Word& q, const GroupElement& w);

struct DualityReport {
  std::size_t facet_count = 0;
  std::size_t vertex_count = 0;
  /// J -> B(J) is a bijection from facets onto vertices.
  bool bijection = false;
  /// Flip graph and edge graph agree under that bijection.
  bool edges_match = false;
  /// B(F) - B(F') is a nonzero multiple of r(F, i) for every flip.
  bool flips_parallel = false;
  /// Facet pairs adjacent in exactly one of the two graphs, or sharing a
  /// vertex, or flipping non-parallel to the root.
  std::vector<std::pair<Subword, Subword>> offending;

  bool valid() const { return bijection && edges_match && flips_parallel; }
};

/// Requires Dem(Q) = w and Q root independent; throws DomainError otherwise.
DualityReport duality_check(const Word& q, const GroupElement& w);

/// c followed by the c-sorting word of w_0. Throws DomainError unless c is a
/// Coxeter-element word.
Word associahedron_word(const Word& c);

}  // namespace brick
