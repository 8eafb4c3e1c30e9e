#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <set>

#include "brick/brick_polytope.hpp"
#include "brick/error.hpp"
#include "brick/oracle.hpp"
#include "support.hpp"

using namespace brick;

namespace {

const CoxeterDatum kA1 = CoxeterDatum::parse("A1");
const CoxeterDatum kA2 = CoxeterDatum::parse("A2");
const CoxeterDatum kA3 = CoxeterDatum::parse("A3");

Word pentagon_word() { return Word::parse(kA2, "1 2 1 2 1"); }
Subword face(std::size_t m, std::vector<std::size_t> one_based) { return Subword::from_one_based(m, one_based); }

}  // namespace

TEST(BrickVector, PentagonExamples) {
  const Word q = pentagon_word();
  EXPECT_EQ(*brick_vector(q, face(5, {1, 5})).ambient, (IntVector{2, 1, 4}));
  EXPECT_EQ(*brick_vector(q, face(5, {4, 5})).ambient, (IntVector{0, 3, 4}));
  EXPECT_EQ(*brick_vector(q, face(5, {1, 2})).ambient, (IntVector{2, 3, 2}));
  EXPECT_EQ(*brick_vector(q, face(5, {2, 3})).ambient, (IntVector{1, 4, 2}));
  EXPECT_EQ(*brick_vector(q, face(5, {3, 4})).ambient, (IntVector{0, 4, 3}));
  EXPECT_EQ(brick_vector(q, face(5, {1, 5})).vector, (IntVector{1, -3}));
}

TEST(BrickVector, NonTypeAHasNoAmbient) {
  const auto b2 = CoxeterDatum::parse("B2");
  EXPECT_FALSE(brick_vector(Word::parse(b2, "1 2 1"), Subword(3)).ambient.has_value());
}

TEST(BrickPolytope, ReducedWordGivesAPoint) {
  const Word q = Word::parse(kA3, "1 2 1 3");
  const auto bp = brick_polytope(q, evaluate(q));
  EXPECT_EQ(bp.polytope.vertices.size(), 1u);
  EXPECT_EQ(bp.polytope.affine_dim, 0u);
  IntVector expected(3, 0);
  GroupElement prefix = GroupElement::identity(kA3);
  for (std::size_t k = 0; k < q.size(); ++k) {
    prefix = prefix.times_generator(q[k]);
    const auto col = prefix.weight_matrix().column(q[k]);
    for (std::size_t i = 0; i < 3; ++i) expected[i] += col[i];
  }
  EXPECT_EQ(bp.bricks[0].vector, expected);
}

TEST(BrickPolytope, PentagonAndErrors) {
  const auto bp = brick_polytope(pentagon_word(), longest_element(kA2));
  EXPECT_TRUE(bp.ambient);
  EXPECT_EQ(bp.polytope.vertices.size(), 5u);
  EXPECT_EQ(bp.polytope.affine_dim, 2u);
  EXPECT_EQ(edge_graph(bp.polytope).size(), 5u);
  EXPECT_TRUE(bp.non_facet_faces_inside);
  EXPECT_THROW(brick_polytope(pentagon_word(), evaluate(Word::parse(kA2, "1"))), DomainError);
}

TEST(BrickPolytope, A3AssociahedronVertexCountMatchesFacetCount) {
  const Word q = associahedron_word(Word::parse(kA3, "1 2 3"));
  EXPECT_EQ(q.to_string(), "1 2 3 1 2 3 1 2 1");
  const auto bp = brick_polytope(q, longest_element(kA3));
  const auto brute = oracle::exhaustive_facets(q, longest_element(kA3));
  EXPECT_EQ(bp.polytope.vertices.size(), brute.size());
  EXPECT_EQ(brute.size(), 14u);
  EXPECT_EQ(bp.polytope.affine_dim, 3u);
}

TEST(BrickVector, DecompositionAndConstantAmbientSum) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 10, rng);
    std::set<std::int64_t> sums;
    for (const auto& f : oracle::all_faces(facets(q, demazure_product(q)).facets, q.size())) {
      const auto b = brick_vector(q, f);
      EXPECT_EQ(b.vector, brick_vector_from_functions(q, f));
      if (b.ambient) sums.insert(std::accumulate(b.ambient->begin(), b.ambient->end(), std::int64_t{0}));
    }
    EXPECT_LE(sums.size(), 1u);
    if (!sums.empty()) {
      std::int64_t expected = 0;
      for (std::size_t k = 0; k < q.size(); ++k) expected += static_cast<std::int64_t>(q[k]) + 1;
      EXPECT_EQ(*sums.begin(), expected);
    }
  }
}

TEST(RootIndependence, Examples) {
  EXPECT_TRUE(is_root_independent(pentagon_word(), longest_element(kA2)));
  EXPECT_TRUE(is_root_independent(Word::parse(kA2, "1 2"), evaluate(Word::parse(kA2, "1 2"))));
  EXPECT_FALSE(is_root_independent(Word::parse(kA1, "1 1 1"), longest_element(kA1)));
  EXPECT_THROW(is_root_independent(Word::parse(kA2, "1"), longest_element(kA2)), DomainError);
}

TEST(RootIndependence, SameAnswerOnEveryFacet) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 150; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 10, rng);
    const auto report = toric_classification(q, demazure_product(q));
    for (const auto& [f, rank] : report.facet_ranks)
      EXPECT_EQ(rank == f.count(), report.root_independent) << q.to_string();
  }
}

TEST(Toric, Examples) {
  const auto pent = toric_classification(pentagon_word(), longest_element(kA2));
  EXPECT_TRUE(pent.root_independent);
  EXPECT_TRUE(pent.length_condition);
  EXPECT_TRUE(pent.is_toric);
  EXPECT_EQ(pent.fiber_dim, 2u);
  EXPECT_EQ(pent.facet_ranks.size(), 5u);

  const auto reduced = toric_classification(Word::parse(kA2, "1 2 1"), longest_element(kA2));
  EXPECT_FALSE(reduced.length_condition);
  EXPECT_FALSE(reduced.is_toric);

  const auto a1 = toric_classification(Word::parse(kA1, "1 1 1"), longest_element(kA1));
  EXPECT_FALSE(a1.length_condition);
  EXPECT_FALSE(a1.root_independent);
  EXPECT_FALSE(a1.is_toric);
  EXPECT_EQ(a1.fiber_dim, 2u);
}

TEST(Duality, Examples) {
  const auto pent = duality_check(pentagon_word(), longest_element(kA2));
  EXPECT_TRUE(pent.valid());
  EXPECT_EQ(pent.facet_count, 5u);
  EXPECT_EQ(pent.vertex_count, 5u);

  const Word reduced = Word::parse(kA2, "2 1 2");
  const auto point = duality_check(reduced, evaluate(reduced));
  EXPECT_TRUE(point.valid());
  EXPECT_EQ(point.vertex_count, 1u);

  const Word six = Word::parse(kA2, "1 2 1 2 1 2");
  if (is_root_independent(six, longest_element(kA2))) {
    EXPECT_TRUE(duality_check(six, longest_element(kA2)).valid());
  } else {
    EXPECT_THROW(duality_check(six, longest_element(kA2)), DomainError);
  }
  EXPECT_THROW(duality_check(Word::parse(kA1, "1 1 1"), longest_element(kA1)), DomainError);
}

TEST(Duality, AssociahedraOfSeveralTypes) {
  for (const auto& [label, c] : std::vector<std::pair<const char*, const char*>>{
           {"A2", "2 1"}, {"A3", "2 1 3"}, {"B2", "1 2"}, {"C3", "3 2 1"}, {"G2", "2 1"}, {"B3", "1 2 3"}}) {
    const auto d = CoxeterDatum::parse(label);
    const Word q = associahedron_word(Word::parse(d, c));
    const auto toric = toric_classification(q, longest_element(d));
    EXPECT_TRUE(toric.is_toric) << label;
    const auto report = duality_check(q, longest_element(d));
    EXPECT_TRUE(report.valid()) << label;
    EXPECT_EQ(brick_polytope(q, longest_element(d)).polytope.affine_dim, d.rank()) << label;
  }
}

TEST(Associahedron, Examples) {
  EXPECT_EQ(associahedron_word(Word::parse(kA2, "1 2")).to_string(), "1 2 1 2 1");
  EXPECT_EQ(associahedron_word(Word::parse(kA1, "1")).to_string(), "1 1");
  EXPECT_EQ(associahedron_word(Word::parse(kA3, "1 2 3")).size(), 9u);
  EXPECT_THROW(associahedron_word(Word::parse(kA3, "1 2 1")), DomainError);
}

TEST(BrickPolytope, HullMethodsAgreeOnRandomInstances) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 40; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 9, rng);
    const auto bp = brick_polytope(q, demazure_product(q));
    std::vector<RationalPoint> points;
    for (const auto& b : bp.bricks) {
      RationalPoint p;
      for (auto x : bp.ambient ? *b.ambient : b.vector) p.coords.emplace_back(x);
      points.push_back(std::move(p));
    }
    EXPECT_EQ(bp.polytope, convex_hull(points, HullMethod::Subsets)) << q.datum().label() << " " << q.to_string();
  }
}
