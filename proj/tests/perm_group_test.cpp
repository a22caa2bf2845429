#include "kneser/perm_group.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "kneser/errors.hpp"
#include "kneser/kneser_graph.hpp"

namespace kneser {
namespace {

// Sym([n]) as images vectors, for the injectivity check.
std::vector<Permutation> all_permutations(int n) {
  std::vector<int> images(n);
  for (int i = 0; i < n; ++i) images[i] = i + 1;
  std::vector<Permutation> out;
  do out.emplace_back(images);
  while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::uint64_t factorial_for_test(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

TEST(InducedTest, TranspositionOnH31) {
  const auto kg = build_bipartite_kneser(3, 1);
  const auto f = induced_automorphism(kg, Permutation::transposition12(3));
  EXPECT_EQ(f.images(), (std::vector<Vertex>{1, 0, 2, 4, 3, 5}));
  EXPECT_TRUE(f.is_automorphism_of(kg.graph()));
}

TEST(InducedTest, IdentityInducesIdentity) {
  const auto kg = build_bipartite_kneser(5, 2);
  EXPECT_TRUE(induced_automorphism(kg, Permutation::identity(5)).is_identity());
}

TEST(InducedTest, WrongGroundSet) {
  const auto kg = build_bipartite_kneser(5, 2);
  EXPECT_THROW(induced_automorphism(kg, Permutation::identity(4)), DomainError);
}

TEST(InducedTest, PreservesContainmentOnSampledPairs) {
  const auto kg = build_bipartite_kneser(7, 3);
  std::mt19937 rng(5);
  std::vector<int> images{1, 2, 3, 4, 5, 6, 7};
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(kg.vertex_count() - 1));
  for (int trial = 0; trial < 1000; ++trial) {
    std::shuffle(images.begin(), images.end(), rng);
    const Permutation theta(images);
    const auto f = induced_automorphism(kg, theta);
    const Vertex u = pick(rng);
    const Vertex v = pick(rng);
    const bool before = kg.label(u).is_subset_of(kg.label(v));
    const bool after = kg.label(f(u)).is_subset_of(kg.label(f(v)));
    ASSERT_EQ(before, after);
    // f_theta maps each label to its image set.
    std::vector<int> mapped;
    for (int x : kg.label(u).elements()) mapped.push_back(theta(x));
    ASSERT_EQ(kg.label(f(u)), Subset::from_elements(7, mapped));
  }
}

TEST(InducedTest, InjectiveOnSymmetricGroup) {
  for (int n = 3; n <= 5; ++n) {
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      const auto kg = build_bipartite_kneser(n, k);
      std::set<VertexPermutation> images;
      const auto perms = all_permutations(n);
      for (const auto& theta : perms) images.insert(induced_automorphism(kg, theta));
      EXPECT_EQ(images.size(), perms.size()) << n << "," << k;
    }
  }
}

TEST(InducedTest, Homomorphism) {
  const auto kg = build_bipartite_kneser(5, 2);
  const auto p = Permutation::from_cycles(5, {{1, 3}, {2, 4, 5}});
  const auto q = Permutation::long_cycle(5);
  EXPECT_EQ(induced_automorphism(kg, p * q),
            compose(induced_automorphism(kg, p), induced_automorphism(kg, q)));
}

TEST(ComplementMapTest, Properties) {
  for (auto [n, k] : {std::pair{3, 1}, {5, 2}, {7, 3}}) {
    const auto kg = build_bipartite_kneser(n, k);
    const auto a = complement_automorphism(kg);
    EXPECT_TRUE(a.is_automorphism_of(kg.graph()));
    EXPECT_EQ(element_order(a), 2u);
    for (Vertex v = 0; v < kg.vertex_count(); ++v) {
      EXPECT_NE(a(v), v);
      EXPECT_EQ(kg.label(a(v)), complement(kg.label(v)));
    }
  }
}

TEST(ElementOrderTest, Examples) {
  const auto kg = build_bipartite_kneser(5, 1);
  const auto rho = Permutation::from_cycles(5, {{2, 3, 4, 5}});
  EXPECT_EQ(element_order(induced_automorphism(kg, rho)), 4u);
  EXPECT_EQ(element_order(induced_automorphism(kg, Permutation::long_cycle(5))), 5u);
  EXPECT_EQ(element_order(VertexPermutation::identity(4)), 1u);
  EXPECT_EQ(element_order(VertexPermutation({1, 0, 3, 4, 2})), 6u);
}

TEST(VertexPermutationTest, CycleStringAndInverse) {
  const VertexPermutation p({1, 2, 0, 3});
  EXPECT_EQ(p.to_cycle_string(), "(0 1 2)");
  EXPECT_EQ(VertexPermutation::identity(3).to_cycle_string(), "()");
  EXPECT_TRUE(compose(p, inverse(p)).is_identity());
  EXPECT_THROW(VertexPermutation({0, 0}), DomainError);
}

TEST(ClosureTest, Orders) {
  EXPECT_EQ(group_closure(4, {VertexPermutation::identity(4)}).order(), 1u);
  const auto kg = build_bipartite_kneser(3, 1);
  EXPECT_EQ(group_closure(kg.vertex_count(), symmetric_generators(kg, false)).order(), 6u);
  EXPECT_EQ(group_closure(kg.vertex_count(), symmetric_generators(kg, true)).order(), 12u);
}

TEST(ClosureTest, ComplementDoublesTheOrder) {
  for (int n = 3; n <= 6; ++n) {
    for (int k = 1; 2 * k + 1 <= n; ++k) {
      const auto kg = build_bipartite_kneser(n, k);
      const auto sym = group_closure(kg.vertex_count(), symmetric_generators(kg, false));
      const auto full = group_closure(kg.vertex_count(), symmetric_generators(kg, true));
      EXPECT_EQ(sym.order(), factorial_for_test(n));
      EXPECT_EQ(full.order(), 2 * sym.order()) << n << "," << k;
    }
  }
}

TEST(ClosureTest, ElementsAreClosedUnderProduct) {
  const auto kg = build_bipartite_kneser(4, 1);
  const auto group = group_closure(kg.vertex_count(), symmetric_generators(kg, true));
  ASSERT_EQ(group.order(), 48u);
  for (const auto& x : group.elements()) {
    ASSERT_TRUE(group.contains(inverse(x)));
    for (const auto& y : group.elements()) ASSERT_TRUE(group.contains(compose(x, y)));
  }
}

TEST(ClosureTest, CapIsEnforced) {
  const auto kg = build_bipartite_kneser(7, 1);
  EXPECT_THROW(group_closure(kg.vertex_count(), symmetric_generators(kg, true), 100),
               OrderCapExceeded);
}

TEST(GroupTest, UnenumeratedGroup) {
  const PermutationGroup g(3, {VertexPermutation({1, 0, 2})});
  EXPECT_FALSE(g.is_enumerated());
  EXPECT_THROW(g.elements(), NeedEnumerationError);
  EXPECT_THROW(g.order(), NeedEnumerationError);
  const PermutationGroup known(3, {VertexPermutation({1, 0, 2})}, std::nullopt, 2);
  EXPECT_EQ(known.order(), 2u);
}

TEST(OrbitTest, Examples) {
  const auto kg = build_bipartite_kneser(5, 1);
  const auto rho = induced_automorphism(kg, Permutation::from_cycles(5, {{2, 3, 4, 5}}));
  const PermutationGroup cyclic(kg.vertex_count(), {rho});
  const auto two = kg.vertex_of_subset(Subset::from_elements(5, {2}));
  std::vector<Vertex> expected;
  for (int x = 2; x <= 5; ++x) expected.push_back(kg.vertex_of_subset(Subset::from_elements(5, {x})));
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(orbit(cyclic, two), expected);
  EXPECT_EQ(orbit(cyclic, 0), std::vector<Vertex>{0});

  const auto full = PermutationGroup(kg.vertex_count(), symmetric_generators(kg, true));
  EXPECT_EQ(orbits_on_vertices(full).size(), 1u);
  const auto sym = PermutationGroup(kg.vertex_count(), symmetric_generators(kg, false));
  EXPECT_EQ(orbits_on_vertices(sym).size(), 2u);
}

TEST(OrbitTest, PairOrbitsOfH41) {
  const auto kg = build_bipartite_kneser(4, 1);
  const auto full = PermutationGroup(kg.vertex_count(), symmetric_generators(kg, true));
  const auto pairs = orbits_on_ordered_pairs(full);
  EXPECT_EQ(pairs.count, 4u);
  EXPECT_EQ(pairs.id(0, 0), pairs.id(5, 5));
  EXPECT_NE(pairs.id(0, 0), pairs.id(0, 1));
}

TEST(StabilizerTest, OrbitStabilizer) {
  const auto kg = build_bipartite_kneser(4, 1);
  const auto group = group_closure(kg.vertex_count(), symmetric_generators(kg, true));
  const auto stab = stabilizer(group, 0);
  EXPECT_EQ(stab.order(), 6u);
  EXPECT_EQ(orbit(group, 0).size() * stab.order(), group.order());
  for (const auto& g : stab.elements()) EXPECT_EQ(g(0), 0u);
}

TEST(StabilizerTest, SymThreeFixingOne) {
  const auto kg = build_bipartite_kneser(3, 1);
  const auto group = group_closure(kg.vertex_count(), symmetric_generators(kg, false));
  // Enumeration oracle: permutations of {1,2,3} fixing 1.
  std::size_t fixing_one = 0;
  for (const auto& theta : all_permutations(3)) fixing_one += theta(1) == 1;
  EXPECT_EQ(stabilizer(group, 0).order(), fixing_one);
  EXPECT_EQ(fixing_one, 2u);
}

TEST(StabilizerTest, RequiresEnumeration) {
  const PermutationGroup g(3, {VertexPermutation({1, 0, 2})});
  EXPECT_THROW(stabilizer(g, 0), NeedEnumerationError);
}

TEST(CommuteTest, Examples) {
  const auto kg = build_bipartite_kneser(4, 1);
  const auto f12 = induced_automorphism(kg, Permutation::from_cycles(4, {{1, 2}}));
  const auto f23 = induced_automorphism(kg, Permutation::from_cycles(4, {{2, 3}}));
  const auto f34 = induced_automorphism(kg, Permutation::from_cycles(4, {{3, 4}}));
  EXPECT_FALSE(commutes(f12, f23));
  EXPECT_TRUE(commutes(f12, f34));
  EXPECT_TRUE(commutes(f12, complement_automorphism(kg)));
}

TEST(CommuteTest, ComplementOutsideSymmetricImage) {
  for (auto [n, k] : {std::pair{3, 1}, {5, 2}, {5, 1}}) {
    const auto kg = build_bipartite_kneser(n, k);
    const auto sym = group_closure(kg.vertex_count(), symmetric_generators(kg, false));
    EXPECT_FALSE(sym.contains(complement_automorphism(kg)));
  }
}

TEST(RegularActionTest, Examples) {
  const auto kg = build_bipartite_kneser(3, 1);
  const auto full = group_closure(kg.vertex_count(), symmetric_generators(kg, true));
  EXPECT_FALSE(is_regular_action(full, 6));
  const VertexPermutation shift({1, 2, 3, 4, 5, 0});
  EXPECT_TRUE(is_regular_action(group_closure(6, {shift}), 6));
  const VertexPermutation swap({1, 0, 2, 3, 4, 5});
  EXPECT_FALSE(is_regular_action(group_closure(6, {swap}), 6));
}

}  // namespace
}  // namespace kneser
