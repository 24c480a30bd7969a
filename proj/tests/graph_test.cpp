#include <gtest/gtest.h>

#include "chargraph/degrees.hpp"
#include "chargraph/graph.hpp"
#include "chargraph/shapes.hpp"
#include "generators.hpp"
#include "oracles.hpp"

namespace chargraph {
namespace {

CharGraph c4(Prime a, Prime b, Prime c, Prime d) {
  return CharGraph({a, b, c, d}, {{a, b}, {b, c}, {c, d}, {d, a}});
}

TEST(CharGraph, RejectsNonPrimeLabelsAndBadEdges) {
  EXPECT_THROW(CharGraph({2, 4}, {}), std::invalid_argument);
  EXPECT_THROW(CharGraph({2, 3}, {{2, 5}}), std::invalid_argument);
  EXPECT_THROW(CharGraph({2, 3}, {{3, 3}}), std::invalid_argument);
}

TEST(CharGraph, NormalizesOrderAndDuplicates) {
  const CharGraph g({5, 3, 2, 3}, {{5, 3}, {3, 5}, {2, 5}});
  EXPECT_EQ(g.vertices(), (PrimeSet{2, 3, 5}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{2, 5}, {3, 5}}));
}

TEST(DegreeSet, MustContainOne) {
  EXPECT_THROW(DegreeSet({3, 4}), std::invalid_argument);
  EXPECT_THROW(DegreeSet({0, 1}), std::invalid_argument);
  EXPECT_NO_THROW(DegreeSet({1}));
}

TEST(GraphFromCd, Examples) {
  const CharGraph a5 = graph_from_cd(DegreeSet({1, 3, 4, 5}));
  EXPECT_EQ(a5.vertices(), (PrimeSet{2, 3, 5}));
  EXPECT_EQ(a5.size(), 0u);

  EXPECT_TRUE(graph_from_cd(DegreeSet({1})).empty());

  const CharGraph l211 = graph_from_cd(DegreeSet({1, 5, 10, 11, 12}));
  EXPECT_EQ(l211.vertices(), (PrimeSet{2, 3, 5, 11}));
  EXPECT_EQ(l211.edges(), (std::vector<Edge>{{2, 3}, {2, 5}}));
}

TEST(Join, Examples) {
  const CharGraph g = join(edgeless_graph({11, 13}), edgeless_graph({5, 7}));
  EXPECT_TRUE(are_isomorphic(g, c4(2, 3, 5, 7)).has_value());
  EXPECT_EQ(g.vertices(), (PrimeSet{5, 7, 11, 13}));

  const CharGraph x = c4(2, 3, 5, 7);
  EXPECT_EQ(join(CharGraph{}, x), x);

  const CharGraph big = join(edgeless_graph({11, 13, 17}), x);
  EXPECT_EQ(big.order(), 7u);
  EXPECT_EQ(big.size(), 16u);
}

TEST(Join, RejectsOverlap) {
  EXPECT_THROW(join(complete_graph({2, 3}), complete_graph({3, 5})), std::invalid_argument);
  EXPECT_THROW(disjoint_union(complete_graph({2}), complete_graph({2})), std::invalid_argument);
}

TEST(DisjointUnion, Examples) {
  const CharGraph g = disjoint_union(disjoint_union(complete_graph({3, 43, 127}), complete_graph({2})),
                                     complete_graph({5, 29, 113}));
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(connected_components(g).size(), 3u);
  EXPECT_EQ(disjoint_union(g, CharGraph{}), g);
  const CharGraph two = disjoint_union(complete_graph({2}), complete_graph({3}));
  EXPECT_EQ(two.order(), 2u);
  EXPECT_EQ(two.size(), 0u);
}

TEST(Complement, Examples) {
  const CharGraph k4 = complete_graph({2, 3, 5, 7});
  EXPECT_EQ(complement(k4), edgeless_graph({2, 3, 5, 7}));
  const CharGraph g = eval_shape("K3 + K1 + K3");
  EXPECT_EQ(complement(complement(g)), g);
  EXPECT_TRUE(oracle::has_triangle(complement(g)));
}

TEST(Induced, Examples) {
  const CharGraph g = c4(5, 7, 11, 13);  // 5-7-11-13-5
  EXPECT_EQ(induced(g, {5, 11}), edgeless_graph({5, 11}));
  EXPECT_EQ(induced(g, {5, 7}), complete_graph({5, 7}));
  EXPECT_TRUE(induced(g, {}).empty());
  EXPECT_EQ(induced(graph_psl2(64), {3, 7}), complete_graph({3, 7}));
  EXPECT_THROW(induced(g, {17}), std::invalid_argument);
}

TEST(IsKnFree, Examples) {
  EXPECT_TRUE(is_kn_free(eval_shape("K3 + K1 + K3"), 4));
  EXPECT_FALSE(is_kn_free(complete_graph({2, 3, 5, 7}), 4));
  EXPECT_TRUE(is_kn_free(eval_shape("K3^c * C4"), 4));
  EXPECT_FALSE(is_kn_free(eval_shape("K3^c * C4"), 3));
  EXPECT_FALSE(is_kn_free(complete_graph({2, 3}), 2));
  EXPECT_TRUE(is_kn_free(CharGraph{}, 2));
}

TEST(IsKnFree, RejectsBadArguments) {
  EXPECT_THROW(is_kn_free(eval_shape("K13"), 4), std::length_error);
  EXPECT_NO_THROW(is_kn_free(eval_shape("K12"), 4));
  EXPECT_THROW(is_kn_free(eval_shape("K3"), 1), std::invalid_argument);
}

TEST(ConnectedComponents, Examples) {
  EXPECT_EQ(connected_components(graph_psl2(64)), (std::vector<PrimeSet>{{2}, {3, 7}, {5, 13}}));
  EXPECT_EQ(connected_components(edgeless_graph({2, 3, 5})),
            (std::vector<PrimeSet>{{2}, {3}, {5}}));
  EXPECT_EQ(connected_components(eval_shape("K7")).size(), 1u);
  EXPECT_TRUE(connected_components(CharGraph{}).empty());
}

TEST(IsBipartite, Examples) {
  EXPECT_TRUE(is_bipartite(c4(2, 3, 5, 7)));
  EXPECT_FALSE(is_bipartite(complete_graph({2, 3, 5})));
  EXPECT_FALSE(is_bipartite(complement(graph_psl2(u64{1} << 14))));
  EXPECT_FALSE(is_bipartite(eval_shape("C5")));
  EXPECT_TRUE(is_bipartite(CharGraph{}));
}

TEST(OddCycleTriples, Examples) {
  EXPECT_EQ(odd_cycle_triples(graph_psl2(32)), (std::vector<Triple>{{2, 3, 31}, {2, 11, 31}}));
  EXPECT_TRUE(odd_cycle_triples(eval_shape("K7")).empty());
  EXPECT_EQ(odd_cycle_triples(edgeless_graph({2, 3, 5})).size(), 1u);
}

TEST(AreIsomorphic, Examples) {
  const CharGraph cyc = c4(2, 3, 5, 7);
  const auto m = are_isomorphic(cyc, eval_shape("K2^c * K2^c"));
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(oracle::map_preserves_adjacency(cyc, eval_shape("K2^c * K2^c"), *m));

  EXPECT_FALSE(are_isomorphic(eval_shape("K3 + K1"), eval_shape("K2 + K2")).has_value());

  const auto psl = graph_psl2(u64{1} << 14);
  const auto shape = eval_shape("K3 + K1 + K3");
  const auto m2 = are_isomorphic(psl, shape);
  ASSERT_TRUE(m2.has_value());
  EXPECT_TRUE(oracle::map_preserves_adjacency(psl, shape, *m2));
}

TEST(AreIsomorphic, SizeBound) {
  EXPECT_THROW(are_isomorphic(eval_shape("K13"), eval_shape("K13")), std::length_error);
}

TEST(AreIsomorphic, SameDegreeSequenceNonIsomorphic) {
  // C6 and two disjoint triangles are both 2-regular on six vertices.
  EXPECT_FALSE(are_isomorphic(eval_shape("C6"), eval_shape("K3 + K3")).has_value());
  EXPECT_FALSE(are_isomorphic(eval_shape("C6"), eval_shape("C3 + C3")).has_value());
}

TEST(Dot, Deterministic) {
  EXPECT_EQ(to_dot(complete_graph({3, 7}) ), "graph \"Delta\" {\n  3;\n  7;\n  3 -- 7;\n}\n");
}

// ---- properties -----------------------------------------------------------

const std::vector<u64> kPool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

TEST(GraphProperties, ProductOfDegreeSetsIsJoinOfGraphs) {
  gen::Rng rng(20240601);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<u64> pool = kPool;
    std::shuffle(pool.begin(), pool.end(), rng);
    const std::vector<u64> left(pool.begin(), pool.begin() + 4);
    const std::vector<u64> right(pool.begin() + 4, pool.begin() + 8);
    const DegreeSet a = gen::degree_set(rng, left);
    const DegreeSet b = gen::degree_set(rng, right);
    ASSERT_EQ(graph_from_cd(degree_product(a, b)), join(graph_from_cd(a), graph_from_cd(b)));
  }
}

TEST(GraphProperties, ComplementInvolutionAndInducedIdentity) {
  gen::Rng rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<u64> labels(kPool.begin(), kPool.begin() + gen::uniform(rng, 0, 9));
    const CharGraph g = gen::graph(rng, labels);
    ASSERT_EQ(complement(complement(g)), g);
    ASSERT_EQ(induced(g, g.vertices()), g);
  }
}

TEST(GraphProperties, KnFreenessIsMonotoneUnderInducedSubgraphs) {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<u64> labels(kPool.begin(), kPool.begin() + gen::uniform(rng, 1, 9));
    const CharGraph g = gen::graph(rng, labels);
    const std::size_t n = gen::uniform(rng, 2, 5);
    ASSERT_EQ(max_clique_size(g), oracle::subset_max_clique(g));
    if (!is_kn_free(g, n)) continue;
    PrimeSet subset;
    for (Prime v : g.vertices())
      if (gen::uniform(rng, 0, 1)) subset.push_back(v);
    ASSERT_TRUE(is_kn_free(induced(g, subset), n));
  }
}

TEST(GraphProperties, IsomorphismInvariantUnderRelabeling) {
  gen::Rng rng(13);
  const std::vector<u64> target{41, 43, 47, 53, 59, 61, 67, 71, 73};
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 0, 8);
    std::vector<u64> labels(kPool.begin(), kPool.begin() + n);
    const CharGraph g = gen::graph(rng, labels);
    const CharGraph h = gen::relabel(rng, g, std::vector<u64>(target.begin(), target.begin() + n));
    const auto m = are_isomorphic(g, h);
    ASSERT_TRUE(m.has_value());
    ASSERT_TRUE(oracle::map_preserves_adjacency(g, h, *m));
  }
}

TEST(GraphProperties, IsomorphismAgreesWithPermutationSearch) {
  gen::Rng rng(17);
  const std::vector<u64> other{41, 43, 47, 53, 59, 61};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 6);
    const CharGraph a = gen::graph(rng, std::vector<u64>(kPool.begin(), kPool.begin() + n));
    const CharGraph b = gen::graph(rng, std::vector<u64>(other.begin(), other.begin() + n));
    ASSERT_EQ(are_isomorphic(a, b).has_value(), oracle::permutation_isomorphic(a, b));
  }
}

TEST(GraphProperties, IndependentTripleForcesNonBipartiteComplement) {
  gen::Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<u64> labels(kPool.begin(), kPool.begin() + gen::uniform(rng, 0, 8));
    const CharGraph g = gen::graph(rng, labels);
    ASSERT_EQ(odd_cycle_triples(g).empty(), !oracle::has_independent_triple(g));
    if (!odd_cycle_triples(g).empty()) {
      ASSERT_FALSE(is_bipartite(complement(g)));
    }
  }
}

}  // namespace
}  // namespace chargraph
