#include "clustmax/canonical.hpp"

#include <random>
#include <vector>

#include "clustmax/dense_graph.hpp"
#include "clustmax/error.hpp"
#include "clustmax/generators.hpp"
#include "clustmax/graph6.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace clustmax {
namespace {

TEST(CanonicalFormTest, RelabeledPathAgrees) {
  const Graph a = Graph::from_edges(3, {{0, 1}, {1, 2}});
  const Graph b = Graph::from_edges(3, {{1, 0}, {0, 2}});
  EXPECT_EQ(canonical_form(a), canonical_form(b));
}

TEST(CanonicalFormTest, TriangleDiffersFromPath) {
  EXPECT_NE(canonical_form(complete_graph(3)), canonical_form(path_graph(3)));
}

// regular_chain(3, 2) joins the last vertex of each copy to the second-to-last
// of the other. Attaching both inter-copy edges at the last vertex of copy 0
// instead is not allowed (degree 4), so the alternative legal choice swaps
// which degree-2 vertex of copy 1 receives which edge.
TEST(CanonicalFormTest, RegularChainIgnoresAttachmentChoice) {
  const Graph reference = regular_chain(3, 2);
  std::vector<Edge> edges;
  for (int c = 0; c < 2; ++c) {
    const int b = 4 * c;
    edges.insert(edges.end(), {{b, b + 1}, {b, b + 2}, {b, b + 3}, {b + 1, b + 2}, {b + 1, b + 3}});
  }
  edges.emplace_back(3, 7);
  edges.emplace_back(2, 6);
  const Graph alternative = Graph::from_edges(8, edges);
  EXPECT_NE(alternative, reference);
  EXPECT_EQ(canonical_form(alternative), canonical_form(reference));
}

TEST(CanonicalFormTest, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % kMaxDenseOrder;
    const Graph g = oracle::random_graph(n, 0.15 + 0.05 * (trial % 12), rng);
    const Graph h = g.permuted(oracle::random_permutation(n, rng));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
    EXPECT_EQ(canonical_graph(g), canonical_graph(h));
  }
}

TEST(CanonicalFormTest, LabelingReproducesCanonicalGraph) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(9, 0.4, rng);
    const CanonicalLabeling cl = canonical_labeling(g);
    const Graph relabeled = g.permuted(cl.labeling);
    EXPECT_EQ(to_graph6(relabeled), canonical_form(g).graph6);
    EXPECT_EQ(adjacency_code(DenseGraph::from_graph(relabeled)), cl.code);
  }
}

TEST(CanonicalFormTest, AgreesWithBruteForceIsomorphism) {
  std::mt19937 rng(29);
  int isomorphic_pairs = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    // Half the pairs are relabelings, half independent samples with the same
    // number of edges when possible.
    Graph b = trial % 2 == 0 ? a.permuted(oracle::random_permutation(n, rng)) : oracle::random_graph(n, 0.5, rng);
    const bool expected = oracle::isomorphic(a, b);
    isomorphic_pairs += expected;
    EXPECT_EQ(canonical_form(a) == canonical_form(b), expected) << to_graph6(a) << " " << to_graph6(b);
    EXPECT_EQ(is_isomorphic(a, b), expected);
  }
  EXPECT_GT(isomorphic_pairs, 100);
}

TEST(CanonicalFormTest, HighlySymmetricGraphs) {
  for (int n = 1; n <= kMaxDenseOrder; ++n) {
    EXPECT_EQ(canonical_graph(Graph(n)), Graph(n));
    EXPECT_EQ(canonical_graph(complete_graph(n)), complete_graph(n));
  }
  // Two cubic graphs on 6 vertices: the prism and K_{3,3}.
  const Graph k33 = complete_bipartite(3, 3);
  const Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  EXPECT_FALSE(is_isomorphic(k33, prism));
  EXPECT_TRUE(is_isomorphic(cycle_graph(16), cycle_graph(16).permuted(std::vector<Vertex>{
                                                 3, 9, 0, 15, 1, 2, 4, 14, 13, 12, 5, 6, 7, 8, 10, 11})));
  // C8 vs two disjoint C4: same degree sequence, refinement alone cannot tell.
  const Graph two_c4 = Graph::from_edges(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  EXPECT_FALSE(is_isomorphic(cycle_graph(8), two_c4));
}

TEST(CanonicalFormTest, RejectsLargeGraphs) {
  EXPECT_THROW(canonical_form(Graph(kMaxDenseOrder + 1)), CapabilityError);
}

}  // namespace
}  // namespace clustmax
