#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "brick/error.hpp"
#include "brick/geometry.hpp"

using namespace brick;

namespace {

RationalPoint pt(std::vector<std::int64_t> v) { return RationalPoint::from_integers(v); }

std::vector<RationalPoint> pts(std::vector<std::vector<std::int64_t>> vs) {
  std::vector<RationalPoint> out;
  for (auto& v : vs) out.push_back(pt(v));
  return out;
}

// Solves p = sum lambda_i q_i, sum lambda_i = 1 exactly; returns true when the
// q_i are affinely independent and the unique solution is nonnegative.
bool in_simplex(const RationalPoint& p, const std::vector<RationalPoint>& q) {
  const std::size_t rows = p.dim() + 1, cols = q.size();
  std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols + 1));
  for (std::size_t c = 0; c < cols; ++c) {
    for (std::size_t r = 0; r < p.dim(); ++r) m[r][c] = q[c].coords[r];
    m[p.dim()][c] = 1;
  }
  for (std::size_t r = 0; r < p.dim(); ++r) m[r][cols] = p.coords[r];
  m[p.dim()][cols] = 1;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) return false;  // dependent columns
    std::swap(m[piv], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank < cols) return false;
  for (std::size_t r = rank; r < rows; ++r)
    if (m[r][cols] != 0) return false;
  for (std::size_t r = 0; r < rank; ++r)
    if (m[r][cols] / m[r][pivot_col[r]] < 0) return false;
  return true;
}

// Carathéodory: p is not a vertex iff it lies in a simplex spanned by at
// most dim + 1 of the other points.
std::vector<RationalPoint> brute_vertices(std::vector<RationalPoint> points) {
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  const std::size_t d = points.front().dim();
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<RationalPoint> others;
    for (std::size_t j = 0; j < points.size(); ++j)
      if (j != i) others.push_back(points[j]);
    bool covered = false;
    for (std::size_t k = 1; k <= d + 1 && k <= others.size() && !covered; ++k) {
      std::vector<bool> pick(others.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(k), true);
      do {
        std::vector<RationalPoint> simplex;
        for (std::size_t j = 0; j < others.size(); ++j)
          if (pick[j]) simplex.push_back(others[j]);
        covered = in_simplex(points[i], simplex);
      } while (!covered && std::prev_permutation(pick.begin(), pick.end()));
    }
    if (!covered) out.push_back(points[i]);
  }
  return out;
}

std::vector<RationalPoint> random_points(std::mt19937_64& rng, std::size_t n, std::size_t d, std::int64_t range) {
  std::uniform_int_distribution<std::int64_t> coord(-range, range);
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> v(d);
    for (auto& x : v) x = coord(rng);
    out.push_back(pt(v));
  }
  return out;
}

}  // namespace

TEST(AffineHull, Dimensions) {
  EXPECT_EQ(affine_hull(pts({{1, 2, 3}})).dimension, 0u);
  EXPECT_EQ(affine_hull(pts({{1, 2, 3}, {1, 2, 3}})).dimension, 0u);
  EXPECT_EQ(affine_hull(pts({{0, 0}, {2, 1}})).dimension, 1u);
  const auto pentagon = pts({{2, 1, 4}, {0, 3, 4}, {2, 3, 2}, {0, 4, 3}, {1, 4, 2}});
  const auto hull = affine_hull(pentagon);
  EXPECT_EQ(hull.dimension, 2u);
  ASSERT_EQ(hull.equations.size(), 1u);
  EXPECT_THROW(affine_hull(std::vector<RationalPoint>{}), DomainError);
  EXPECT_THROW(affine_hull(pts({{1, 2}, {1, 2, 3}})), DomainError);
}

TEST(ConvexHull, PentagonFromBrickVectors) {
  const auto p = convex_hull(pts({{2, 1, 4}, {0, 3, 4}, {2, 3, 2}, {0, 4, 3}, {1, 4, 2}}));
  EXPECT_EQ(p.affine_dim, 2u);
  EXPECT_EQ(p.vertices.size(), 5u);
  EXPECT_EQ(p.inequalities.size(), 5u);
  const auto edges = edge_graph(p);
  EXPECT_EQ(edges.size(), 5u);
  std::vector<int> degree(5, 0);
  for (auto [a, b] : edges) ++degree[a], ++degree[b];
  EXPECT_TRUE(std::all_of(degree.begin(), degree.end(), [](int x) { return x == 2; }));
  EXPECT_TRUE(p.contains(pt({1, 3, 3})));
  EXPECT_FALSE(p.contains(pt({1, 3, 4})));   // off the plane x+y+z = 7
  EXPECT_FALSE(p.contains(pt({3, 0, 4})));   // on the plane, outside
}

TEST(ConvexHull, TrivialCases) {
  const auto single = convex_hull(pts({{3, 3}, {3, 3}, {3, 3}}));
  EXPECT_EQ(single.vertices.size(), 1u);
  EXPECT_EQ(single.affine_dim, 0u);
  EXPECT_TRUE(edge_graph(single).empty());

  const auto square = convex_hull(pts({{0, 0}, {2, 0}, {0, 2}, {2, 2}, {1, 1}}));
  EXPECT_EQ(square.vertices.size(), 4u);
  EXPECT_FALSE(square.vertex_index(pt({1, 1})).has_value());

  const auto segment = convex_hull(pts({{0, 0, 0}, {1, 1, 1}, {3, 3, 3}}));
  EXPECT_EQ(segment.vertices.size(), 2u);
  EXPECT_EQ(edge_graph(segment).size(), 1u);
}

TEST(ConvexHull, CubeHasTwelveEdges) {
  std::vector<RationalPoint> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(pt({m & 1, m >> 1 & 1, m >> 2 & 1}));
  const auto p = convex_hull(cube);
  EXPECT_EQ(p.vertices.size(), 8u);
  EXPECT_EQ(p.inequalities.size(), 6u);
  // Brute force: cube edges join points differing in one coordinate.
  std::size_t expected = 0;
  for (int a = 0; a < 8; ++a)
    for (int b = a + 1; b < 8; ++b) expected += __builtin_popcount(a ^ b) == 1;
  EXPECT_EQ(edge_graph(p).size(), expected);
  EXPECT_EQ(expected, 12u);
}

TEST(ConvexHull, RationalCoordinates) {
  std::vector<RationalPoint> tri(3);
  tri[0].coords = {Rational(0), Rational(0)};
  tri[1].coords = {Rational(1, 3), Rational(0)};
  tri[2].coords = {Rational(0), Rational(1, 7)};
  const auto p = convex_hull(tri);
  EXPECT_EQ(p.vertices.size(), 3u);
  RationalPoint inside;
  inside.coords = {Rational(1, 10), Rational(1, 30)};
  EXPECT_TRUE(p.contains(inside));
  inside.coords = {Rational(1, 5), Rational(1, 10)};
  EXPECT_FALSE(p.contains(inside));
}

TEST(ConvexHull, RandomPropertiesAgainstCaratheodory) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t d = 2 + trial % 2;
    auto points = random_points(rng, 6 + trial % 7, d, 4);
    const auto p = convex_hull(points);
    if (p.affine_dim == d) EXPECT_EQ(p.vertices, brute_vertices(points));
    for (const auto& q : points) EXPECT_TRUE(p.contains(q));
    for (std::size_t f = 0; f < p.inequalities.size(); ++f) EXPECT_GE(p.incidence[f].size(), p.affine_dim);
    // Idempotence and order invariance.
    EXPECT_EQ(convex_hull(p.vertices), p);
    std::shuffle(points.begin(), points.end(), rng);
    EXPECT_EQ(convex_hull(points), p);
    if (p.affine_dim == 3) {
      const long v = static_cast<long>(p.vertices.size()), e = static_cast<long>(edge_graph(p).size()),
                 f = static_cast<long>(p.inequalities.size());
      EXPECT_EQ(v - e + f, 2);
    }
  }
}

TEST(ConvexHull, LowerDimensionalInHigherAmbient) {
  // A square in a 2-plane of R^5.
  const auto p = convex_hull(pts({{1, 0, 0, 1, 5}, {0, 1, 0, 1, 5}, {1, 0, 1, 2, 5}, {0, 1, 1, 2, 5},
                                  {1, 1, 1, 3, 10}}));
  EXPECT_EQ(p.ambient_dim, 5u);
  EXPECT_EQ(p.affine_dim, 3u);
  const auto square = convex_hull(pts({{1, 0, 0, 1, 5}, {0, 1, 0, 1, 5}, {1, 0, 1, 2, 5}, {0, 1, 1, 2, 5}}));
  EXPECT_EQ(square.affine_dim, 2u);
  EXPECT_EQ(square.vertices.size(), 4u);
  EXPECT_EQ(edge_graph(square).size(), 4u);
  EXPECT_EQ(square.equations.size(), 3u);
}

TEST(ConvexHull, LargeCoordinatesUseExactArithmetic) {
  const std::int64_t big = 1'000'000'000'000'000LL;
  std::vector<RationalPoint> cube;
  for (int m = 0; m < 8; ++m) cube.push_back(pt({(m & 1) * big, (m >> 1 & 1) * big, (m >> 2 & 1) * big + 7}));
  cube.push_back(pt({big / 2, big / 2, big / 2}));
  const auto p = convex_hull(cube);
  EXPECT_EQ(p.vertices.size(), 8u);
  EXPECT_EQ(edge_graph(p).size(), 12u);
}

TEST(ConvexHull, WrappingMatchesSubsetScan) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t d = 1 + trial % 5;
    // Small coordinate range forces coplanar points and non-simplicial facets.
    auto points = random_points(rng, d + 2 + trial % 9, d, 1 + trial % 3);
    if (trial % 4 == 0) {
      std::vector<RationalPoint> lifted;
      for (auto& p : points) {
        p.coords.push_back(p.coords.front() - p.coords.back());
        lifted.push_back(p);
      }
      points = lifted;
    }
    EXPECT_EQ(convex_hull(points), convex_hull(points, HullMethod::Subsets)) << "trial " << trial;
  }
}

TEST(IntegerRank, Basic) {
  EXPECT_EQ(integer_rank({{1, 2}, {2, 4}}), 1u);
  EXPECT_EQ(integer_rank({{1, 0}, {0, -1}}), 2u);
  EXPECT_EQ(integer_rank({}), 0u);
  EXPECT_EQ(integer_rank({{0, 0}}), 0u);
}
