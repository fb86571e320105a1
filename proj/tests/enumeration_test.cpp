#include "clustmax/enumeration.hpp"

#include <set>
#include <string>
#include <vector>

#include "clustmax/canonical.hpp"
#include "clustmax/error.hpp"
#include "clustmax/generators.hpp"
#include "clustmax/graph6.hpp"
#include "gtest/gtest.h"

namespace clustmax {
namespace {

// Published counts of isomorphism classes, used only as test data.
struct CountCase {
  int n;
  DegreeConstraint c;
  std::size_t expected;
};

const std::vector<CountCase>& published_counts() {
  static const std::vector<CountCase> cases{
      {1, DegreeConstraint::any(), 1},
      {2, DegreeConstraint::any(), 2},
      {3, DegreeConstraint::any(), 4},
      {4, DegreeConstraint::any(), 11},
      {5, DegreeConstraint::any(), 34},
      {6, DegreeConstraint::any(), 156},
      {7, DegreeConstraint::any(), 1044},
      {4, DegreeConstraint::any(true), 6},
      {5, DegreeConstraint::any(true), 21},
      {6, DegreeConstraint::any(true), 112},
      {7, DegreeConstraint::any(true), 853},
      {4, DegreeConstraint::regular(3, true), 1},
      {6, DegreeConstraint::regular(3, true), 2},
      {8, DegreeConstraint::regular(3, true), 5},
      {10, DegreeConstraint::regular(3, true), 19},
      {12, DegreeConstraint::regular(3, true), 85},
      {8, DegreeConstraint::regular(3), 6},
      {7, DegreeConstraint::regular(4, true), 2},
      {8, DegreeConstraint::regular(4, true), 6},
      {9, DegreeConstraint::regular(4, true), 16},
      {6, DegreeConstraint::max_degree(3, true), 29},
      {10, DegreeConstraint::max_degree(3, true), 1733},
  };
  return cases;
}

TEST(EnumerateTest, Examples) {
  const auto k4 = enumerate(4, DegreeConstraint::regular(3, true));
  ASSERT_EQ(k4.size(), 1u);
  EXPECT_EQ(k4[0], complete_graph(4));

  const auto cubic6 = enumerate(6, DegreeConstraint::regular(3, true));
  ASSERT_EQ(cubic6.size(), 2u);
  const Graph prism = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  std::set<CanonicalForm> found{canonical_form(cubic6[0]), canonical_form(cubic6[1])};
  EXPECT_EQ(found, (std::set<CanonicalForm>{canonical_form(complete_bipartite(3, 3)), canonical_form(prism)}));

  EXPECT_EQ(enumerate(7, DegreeConstraint::any()).size(), 1044u);
}

TEST(CountTest, PublishedCounts) {
  for (const auto& [n, c, expected] : published_counts()) {
    EXPECT_EQ(count(n, c), expected) << "n=" << n << " " << c.describe();
  }
}

// Max degree 2 on 5 vertices: disjoint unions of paths and cycles. Over the
// partitions 5, 4+1, 3+2, 3+1+1, 2+2+1, 2+1+1+1, 1+1+1+1+1 with one shape for
// sizes 1, 2 and two (path or cycle) for sizes >= 3: 2+2+2+2+1+1+1 = 11.
TEST(CountTest, PathsAndCycles) { EXPECT_EQ(count(5, DegreeConstraint::max_degree(2)), 11u); }

TEST(EnumerateTest, OddOrderCubicIsEmpty) {
  EXPECT_TRUE(enumerate(7, DegreeConstraint::regular(3)).empty());
  EXPECT_EQ(count(1, DegreeConstraint::regular(0)), 1u);
  EXPECT_EQ(count(3, DegreeConstraint::regular(0, true)), 0u);
}

TEST(EnumerateTest, OutputIsSortedCanonicalDistinctAndAdmitted) {
  const std::vector<std::pair<int, DegreeConstraint>> runs{
      {7, DegreeConstraint::any()},
      {8, DegreeConstraint::max_degree(3, true)},
      {10, DegreeConstraint::regular(3)},
      {9, DegreeConstraint::regular(4, true)},
  };
  for (const auto& [n, c] : runs) {
    const auto graphs = enumerate(n, c);
    const auto lines = enumerate_graph6(n, c);
    ASSERT_EQ(graphs.size(), lines.size());
    EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
    std::set<std::string> seen;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      EXPECT_EQ(graphs[i].order(), n);
      EXPECT_TRUE(c.admits(graphs[i]));
      EXPECT_EQ(to_graph6(graphs[i]), lines[i]);
      EXPECT_EQ(canonical_form(graphs[i]).graph6, lines[i]);
      EXPECT_TRUE(seen.insert(canonical_form(graphs[i]).graph6).second);
      EXPECT_EQ(parse_graph6(lines[i]), graphs[i]);
    }
  }
}

// All 2^C(n,2) labeled graphs, deduplicated by canonical form.
TEST(EnumerateTest, MatchesLabeledGraphsAtTinyOrders) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::set<std::string> classes;
    std::set<std::string> connected_classes;
    for (unsigned long mask = 0; mask < (1ul << pairs.size()); ++mask) {
      std::vector<Edge> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask >> i & 1) edges.push_back(pairs[i]);
      const Graph g = Graph::from_edges(n, edges);
      classes.insert(canonical_form(g).graph6);
      if (is_connected(g)) connected_classes.insert(canonical_form(g).graph6);
    }
    const auto all = enumerate_graph6(n, DegreeConstraint::any());
    EXPECT_EQ(std::set<std::string>(all.begin(), all.end()), classes);
    const auto conn = enumerate_graph6(n, DegreeConstraint::any(true));
    EXPECT_EQ(std::set<std::string>(conn.begin(), conn.end()), connected_classes);
  }
}

TEST(EnumerateTest, SameOutputForAnyWorkerCount) {
  const auto one = enumerate_graph6(11, DegreeConstraint::max_degree(3, true), {1});
  const auto four = enumerate_graph6(11, DegreeConstraint::max_degree(3, true), {4});
  const auto all = enumerate_graph6(11, DegreeConstraint::max_degree(3, true), {0});
  EXPECT_EQ(one, four);
  EXPECT_EQ(one, all);
  EXPECT_EQ(one.size(), 5524u);
}

TEST(EnumerateTest, LimitsAndErrors) {
  EXPECT_GE(enumeration_limit(DegreeConstraint::regular(3, true)), 12);
  EXPECT_GE(enumeration_limit(DegreeConstraint::max_degree(3, true)), 12);
  EXPECT_GE(enumeration_limit(DegreeConstraint::any()), 7);
  EXPECT_THROW(enumerate(enumeration_limit(DegreeConstraint::any()) + 1, DegreeConstraint::any()), CapabilityError);
  EXPECT_THROW(count(15, DegreeConstraint::regular(3, true)), CapabilityError);
  EXPECT_THROW(count(0, DegreeConstraint::any()), DomainError);
  EXPECT_THROW(count(4, DegreeConstraint::max_degree(-1)), DomainError);
}

TEST(DegreeConstraintTest, AdmitsAndDescribes) {
  EXPECT_TRUE(DegreeConstraint::regular(3).admits(complete_graph(4)));
  EXPECT_FALSE(DegreeConstraint::regular(3).admits(named("diamond")));
  EXPECT_TRUE(DegreeConstraint::max_degree(3).admits(named("diamond")));
  EXPECT_FALSE(DegreeConstraint::any(true).admits(Graph(2)));
  EXPECT_EQ(DegreeConstraint::regular(3, true).describe(), "connected 3-regular");
  EXPECT_EQ(DegreeConstraint::max_degree(4).describe(), "max-degree-4");
}

}  // namespace
}  // namespace clustmax
