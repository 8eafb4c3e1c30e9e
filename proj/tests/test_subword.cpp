#include <gtest/gtest.h>

#include <map>
#include <set>

#include "brick/error.hpp"
#include "brick/oracle.hpp"
#include "brick/subword.hpp"
#include "support.hpp"

using namespace brick;

namespace {

const CoxeterDatum kA1 = CoxeterDatum::parse("A1");
const CoxeterDatum kA2 = CoxeterDatum::parse("A2");
const CoxeterDatum kA3 = CoxeterDatum::parse("A3");

Word pentagon_word() { return Word::parse(kA2, "1 2 1 2 1"); }
Subword face(std::size_t m, std::vector<std::size_t> one_based) { return Subword::from_one_based(m, one_based); }

std::vector<std::vector<std::size_t>> one_based(const std::vector<Subword>& subwords) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : subwords) out.push_back(s.one_based());
  return out;
}

}  // namespace

TEST(Subword, ComplementAndRoles) {
  const Subword j = face(5, {1, 5});
  EXPECT_EQ(j.complement().complement(), j);
  EXPECT_EQ(j.switch_role().role(), SubwordRole::Kept);
  EXPECT_EQ(j.switch_role().one_based(), (std::vector<std::size_t>{2, 3, 4}));
  EXPECT_THROW(face(5, {6}), DomainError);
  EXPECT_THROW(kept_letters(pentagon_word(), j), DomainError);
}

TEST(ComplementProduct, Examples) {
  const Word q = Word::parse(kA3, "1 2 3 1 2");
  const Subword j = face(5, {1, 3, 5});
  EXPECT_EQ(complement_product(q, j, 5), evaluate(Word::parse(kA3, "2 1")));
  const Subword all = face(5, {1, 2, 3, 4, 5});
  for (std::size_t k = 0; k <= 5; ++k) EXPECT_TRUE(complement_product(q, all, k).is_identity());
  EXPECT_EQ(complement_product(pentagon_word(), face(5, {1, 5}), 5), longest_element(kA2));
}

TEST(RootFunction, Examples) {
  const Word q = pentagon_word();
  EXPECT_EQ(root_function(q, face(5, {1, 5}), 0), (IntVector{1, 0}));
  EXPECT_EQ(root_function(q, face(5, {2, 3}), 0), (IntVector{1, 0}));
  EXPECT_EQ(root_function(q, face(5, {1, 5}), 2), (IntVector{1, 1}));
  EXPECT_EQ(root_function(q, face(5, {}), 2), (IntVector{0, 1}));
}

TEST(WeightFunction, Examples) {
  const Word q = pentagon_word();
  EXPECT_EQ(weight_function(q, face(5, {1, 5}), 0), (IntVector{1, 0}));
  const IntVector omega1{1, 0};
  EXPECT_EQ(weight_function(q, face(5, {1, 5}), 4), evaluate(Word::parse(kA2, "2 1 2")).act_on_weight(omega1));
  EXPECT_EQ(weight_function(q, face(5, {4, 5}), 1), (IntVector{0, 1}));
}

TEST(RootFunction, BatchAgreesWithSingleAndInversionRoots) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 8, rng);
    Subword j(q.size());
    for (std::size_t k = 0; k < q.size(); ++k) j.set(k, fixtures::uniform(rng, 0, 1) == 1);
    const auto roots = root_functions(q, j);
    const auto weights = weight_functions(q, j);
    for (std::size_t k = 0; k < q.size(); ++k) {
      EXPECT_EQ(roots[k], root_function(q, j, k));
      EXPECT_EQ(weights[k], weight_function(q, j, k));
    }
    // J empty: r(k) = q_1 ... q_{k-1}(alpha_{q_k}) by explicit matrix products.
    const auto plain = root_functions(q, Subword(q.size()));
    GroupElement prefix = GroupElement::identity(q.datum());
    for (std::size_t k = 0; k < q.size(); ++k) {
      EXPECT_EQ(plain[k], prefix.root_matrix().column(q[k]));
      prefix = prefix * simple_reflection(q.datum(), q[k]);
    }
  }
}

TEST(RootConfiguration, Examples) {
  const Word q = pentagon_word();
  EXPECT_EQ(root_configuration(q, face(5, {1, 2})), (std::vector<IntVector>{{1, 0}, {0, 1}}));
  EXPECT_EQ(root_configuration(q, face(5, {1, 5})), (std::vector<IntVector>{{1, 0}, {0, -1}}));
  EXPECT_TRUE(root_configuration(q, face(5, {})).empty());
}

TEST(Facets, Pentagon) {
  const auto complex = facets(pentagon_word(), longest_element(kA2));
  EXPECT_TRUE(complex.sphere);
  EXPECT_EQ(one_based(complex.facets),
            (std::vector<std::vector<std::size_t>>{{1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}}));
}

TEST(Facets, SmallCases) {
  const auto reduced = facets(Word::parse(kA2, "1 2 1"), longest_element(kA2));
  ASSERT_EQ(reduced.facets.size(), 1u);
  EXPECT_EQ(reduced.facets[0].count(), 0u);
  const auto a1 = facets(Word::parse(kA1, "1 1"), longest_element(kA1));
  EXPECT_EQ(one_based(a1.facets), (std::vector<std::vector<std::size_t>>{{1}, {2}}));
  EXPECT_TRUE(facets(Word::parse(kA2, "1 1"), longest_element(kA2)).facets.empty());
}

TEST(Flip, Examples) {
  const auto complex = facets(pentagon_word(), longest_element(kA2));
  const auto [next, j] = flip(complex, face(5, {1, 5}), 0);
  EXPECT_EQ(next.one_based(), (std::vector<std::size_t>{4, 5}));
  EXPECT_EQ(j, 3u);
  EXPECT_EQ(flip(complex, next, j).first, face(5, {1, 5}));

  const auto a1 = facets(Word::parse(kA1, "1 1"), longest_element(kA1));
  const auto [other, k] = flip(a1, face(2, {1}), 0);
  EXPECT_EQ(other.one_based(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(k, 1u);
  EXPECT_THROW(flip(complex, face(5, {1, 3}), 0), DomainError);
}

TEST(Flip, BallBoundaryRidgeThrows) {
  // Q = (1, 2, 1), w = s1: a ball whose boundary ridges have one facet.
  const Word q = Word::parse(kA2, "1 2 1");
  const auto complex = facets(q, evaluate(Word::parse(kA2, "1")));
  EXPECT_FALSE(complex.sphere);
  EXPECT_EQ(one_based(complex.facets), (std::vector<std::vector<std::size_t>>{{1, 2}, {2, 3}}));
  EXPECT_EQ(flip(complex, complex.facets[0], 0).first, complex.facets[1]);
  EXPECT_THROW(flip(complex, complex.facets[0], 1), DomainError);
}

TEST(IsSphere, Examples) {
  EXPECT_TRUE(is_sphere(pentagon_word(), longest_element(kA2)));
  EXPECT_FALSE(is_sphere(pentagon_word(), evaluate(Word::parse(kA2, "1"))));
  EXPECT_TRUE(is_sphere(Word::parse(kA1, "1 1"), longest_element(kA1)));
}

TEST(Facets, PropertiesOnRandomInstances) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 150; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 12, rng);
    const GroupElement w = demazure_product(q);
    const auto complex = facets(q, w);
    ASSERT_EQ(complex.facets, oracle::exhaustive_facets(q, w)) << q.to_string();
    std::map<Subword, std::size_t> degree;
    for (const auto& f : complex.facets) {
      EXPECT_EQ(f.count(), q.size() - w.length());
      EXPECT_EQ(complement_product(q, f, q.size()), w);
      EXPECT_TRUE(is_reduced(kept_letters(q, f.switch_role())));
      for (std::size_t i : f.positions()) {
        const auto [g, j] = flip(complex, f, i);
        EXPECT_TRUE(g.contains(j));
        EXPECT_FALSE(f.contains(j));
        ++degree[f];
      }
    }
    for (const auto& [f, deg] : degree) EXPECT_EQ(deg, q.size() - w.length());
  }
}

TEST(Facets, NonSphereMatchesExhaustive) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 10, rng);
    const GroupElement w = fixtures::random_element(q.datum(), rng, 6);
    EXPECT_EQ(facets(q, w).facets, oracle::exhaustive_facets(q, w)) << q.to_string();
  }
}

TEST(EulerCharacteristic, SpheresHaveSphereCharacteristic) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 10, rng);
    const GroupElement w = demazure_product(q);
    const auto fs = oracle::exhaustive_facets(q, w);
    const std::size_t dim = q.size() - w.length();
    EXPECT_EQ(oracle::reduced_euler_characteristic(fs, q.size()), dim % 2 == 1 ? 1 : -1);
  }
}

TEST(Strata, Examples) {
  const auto reduced = strata_poset(Word::parse(kA2, "1 2 1"), longest_element(kA2));
  EXPECT_EQ(reduced.nodes.size(), 1u);

  const auto pent = strata_poset(pentagon_word(), longest_element(kA2));
  EXPECT_EQ(pent.nodes[pent.maximum].count(), 5u);
  std::set<std::vector<std::size_t>> minimal;
  for (std::size_t i : pent.minimal) minimal.insert(pent.nodes[i].one_based());
  EXPECT_EQ(minimal, (std::set<std::vector<std::size_t>>{{1, 2, 3}, {1, 2, 5}, {1, 4, 5}, {2, 3, 4}, {3, 4, 5}}));
  EXPECT_TRUE(pent.intersection_closed);

  const auto a1 = strata_poset(Word::parse(kA1, "1 1"), longest_element(kA1));
  EXPECT_EQ(one_based(a1.nodes), (std::vector<std::vector<std::size_t>>{{1}, {1, 2}, {2}}));
  EXPECT_EQ(a1.covers.size(), 2u);

  EXPECT_THROW(strata_poset(pentagon_word(), evaluate(Word::parse(kA2, "1"))), DomainError);
}

TEST(Strata, MinimalStrataAreFacetComplements) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 60; ++trial) {
    const Word q = fixtures::random_instance(fixtures::small_data(), 0, 9, rng);
    const GroupElement w = demazure_product(q);
    const auto poset = strata_poset(q, w);
    std::set<Subword> minimal, complements;
    for (std::size_t i : poset.minimal) minimal.insert(poset.nodes[i]);
    for (const auto& f : facets(q, w).facets) complements.insert(f.switch_role());
    EXPECT_EQ(minimal, complements);
    for (auto [a, b] : poset.covers) EXPECT_EQ(poset.nodes[a].count() + 1, poset.nodes[b].count());
  }
}

TEST(Richardson, WorkedA3Example) {
  const GroupElement v = evaluate(Word::parse(kA3, "1 2 3 1 2"));
  const GroupElement u = evaluate(Word::parse(kA3, "1 2"));
  const Word r = Word::parse(kA3, "1 2 3 1 2"), s = Word::parse(kA3, "3 1 2 1");
  EXPECT_EQ(evaluate(s), u.inverse() * longest_element(kA3));
  EXPECT_EQ(demazure_product(r + s), longest_element(kA3));
  const auto seed = richardson_seed(u, v);
  EXPECT_TRUE(seed.demazure_is_longest);
  EXPECT_EQ(seed.fiber_dim, 3u);
  EXPECT_EQ(evaluate(seed.r), v);
  EXPECT_EQ(evaluate(seed.s), u.inverse() * longest_element(kA3));
}

TEST(Richardson, TrivialCasesAndErrors) {
  const GroupElement w0 = longest_element(kA2);
  const auto top = richardson_seed(w0, w0);
  EXPECT_EQ(top.q.size(), 3u);
  EXPECT_EQ(top.fiber_dim, 0u);
  const auto bottom = richardson_seed(GroupElement::identity(kA2), w0);
  EXPECT_EQ(bottom.q.size(), 6u);
  EXPECT_EQ(bottom.fiber_dim, 3u);
  EXPECT_THROW(richardson_seed(evaluate(Word::parse(kA2, "1")), evaluate(Word::parse(kA2, "2"))), DomainError);
}
