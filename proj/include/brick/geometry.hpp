#pragma once

// Exact convex hulls of moderate point sets (affine dimension <= 10, a few
// thousand points). No floating point is used anywhere in this module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

namespace brick {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct RationalPoint {
  std::vector<Rational> coords;

  std::size_t dim() const { return coords.size(); }
  static RationalPoint from_integers(std::span<const std::int64_t> values);

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) { return a.coords == b.coords; }
  friend bool operator<(const RationalPoint& a, const RationalPoint& b) { return a.coords < b.coords; }
};

/// normal . x <= offset (inequalities) or normal . x == offset (equations),
/// scaled to integers with no common factor.
struct LinearConstraint {
  std::vector<BigInt> normal;
  BigInt offset;

  friend bool operator==(const LinearConstraint&, const LinearConstraint&) = default;
  friend bool operator<(const LinearConstraint& a, const LinearConstraint& b) {
    return std::tie(a.normal, a.offset) < std::tie(b.normal, b.offset);
  }
};

struct AffineHull {
  std::size_t dimension = 0;
  RationalPoint basepoint;
  /// Reduced row echelon basis of the direction space; row r has a 1 in
  /// column pivots[r] and zeros in the other pivot columns.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> pivots;
  /// Equations cutting out the hull, one per non-pivot coordinate.
  std::vector<LinearConstraint> equations;
};

struct Polytope {
  std::size_t ambient_dim = 0;
  std::size_t affine_dim = 0;
  /// Sorted lexicographically.
  std::vector<RationalPoint> vertices;
  /// Facet inequalities, valid within the affine hull; sorted.
  std::vector<LinearConstraint> inequalities;
  std::vector<LinearConstraint> equations;
  /// incidence[f] = sorted indices of the vertices on facet f.
  std::vector<std::vector<std::size_t>> incidence;

  /// Exact membership: all equations and inequalities hold.
  bool contains(const RationalPoint& p) const;
  std::optional<std::size_t> vertex_index(const RationalPoint& p) const;

  friend bool operator==(const Polytope&, const Polytope&) = default;
};

/// Sorted pairs (a, b), a < b, of vertex indices joined by an edge.
using EdgeGraph = std::vector<std::pair<std::size_t, std::size_t>>;

/// Throws DomainError on empty input or mixed dimensions.
AffineHull affine_hull(std::span<const RationalPoint> points);

/// Wrapping walks from facet to facet across ridges; Subsets tests every
/// affinely independent subset of size dim and is kept as a reference.
enum class HullMethod { Wrapping, Subsets };

/// Exact hull in the affine hull of the points. Repeated and interior points
/// are dropped; output is canonical (independent of input order and method).
Polytope convex_hull(std::span<const RationalPoint> points, HullMethod method = HullMethod::Wrapping);

EdgeGraph edge_graph(const Polytope& p);

/// Rank over the rationals of a list of integer vectors.
std::size_t integer_rank(std::vector<std::vector<BigInt>> rows);

}  // namespace brick
