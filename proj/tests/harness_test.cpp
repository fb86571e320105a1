#include "clustmax/harness.hpp"

#include <json.hpp>

#include "clustmax/canonical.hpp"
#include "clustmax/clustering.hpp"
#include "clustmax/error.hpp"
#include "clustmax/generators.hpp"
#include "clustmax/graph6.hpp"
#include "gtest/gtest.h"

namespace clustmax {
namespace {

Rational frac(long n, long d) { return Rational(BigInt(n), BigInt(d)); }

TEST(RegularReportTest, AttainedAtChain) {
  const TheoremReport r = verify_regular_bound(3, 8);
  EXPECT_EQ(r.theorem_id, "T1");
  EXPECT_EQ(r.bound, frac(1, 2));
  EXPECT_EQ(r.max_found, frac(1, 2));
  EXPECT_TRUE(r.attained);
  EXPECT_TRUE(r.characterization_ok);
  EXPECT_EQ(r.graphs_examined, 5u);
  EXPECT_EQ(r.extremal_graphs, std::vector<std::string>{canonical_form(regular_chain(3, 2)).graph6});
  EXPECT_TRUE(r.passed());
}

TEST(RegularReportTest, NotAttainedWhenOrderIndivisible) {
  for (int n : {6, 10}) {
    const TheoremReport r = verify_regular_bound(3, n);
    EXPECT_LT(r.max_found, r.bound);
    EXPECT_FALSE(r.attained);
    EXPECT_TRUE(r.characterization_ok);
    EXPECT_TRUE(r.passed());
  }
}

TEST(RegularReportTest, FourRegular) {
  const TheoremReport r = verify_regular_bound(4, 10);
  EXPECT_EQ(r.bound, frac(7, 10));
  EXPECT_EQ(r.max_found, frac(7, 10));
  EXPECT_TRUE(r.passed());
  EXPECT_THROW(verify_regular_bound(3, 4), DomainError);
  EXPECT_THROW(verify_regular_bound(2, 6), DomainError);
}

TEST(SubcubicReportTest, SmallOrders) {
  const TheoremReport r6 = verify_subcubic_bound(6);
  EXPECT_EQ(r6.theorem_id, "T3");
  EXPECT_EQ(r6.max_found, frac(7, 9));
  EXPECT_TRUE(r6.attained);
  EXPECT_TRUE(r6.characterization_ok);
  const Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_EQ(r6.extremal_graphs, std::vector<std::string>{canonical_form(two_triangles).graph6});
  EXPECT_TRUE(r6.passed());

  const TheoremReport r7 = verify_subcubic_bound(7);
  EXPECT_EQ(r7.max_found, frac(5, 7));
  const Graph mixed = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
  EXPECT_NE(std::find(r7.extremal_graphs.begin(), r7.extremal_graphs.end(), canonical_form(mixed).graph6),
            r7.extremal_graphs.end());
  EXPECT_TRUE(r7.passed());

  const TheoremReport r8 = verify_subcubic_bound(8);
  EXPECT_LT(r8.max_found, frac(17, 24));
  EXPECT_FALSE(r8.attained);
  EXPECT_TRUE(r8.predicted_graphs.empty());
  EXPECT_TRUE(r8.passed());
  EXPECT_THROW(verify_subcubic_bound(5), DomainError);
}

TEST(EdgeAddReportTest, SmallOrders) {
  const Rational expected[] = {1, frac(5, 6), frac(4, 5)};
  for (int n = 3; n <= 5; ++n) {
    const TheoremReport r = verify_edge_add_bound(n);
    EXPECT_EQ(r.max_found, expected[n - 3]);
    EXPECT_EQ(r.extremal_graphs, std::vector<std::string>{canonical_form(complete_bipartite(2, n - 2)).graph6});
    EXPECT_TRUE(r.passed());
  }
  EXPECT_THROW(verify_edge_add_bound(2), DomainError);
}

TEST(CavemanReportTest, Examples) {
  const TheoremReport r = verify_caveman_rewire(3, 2);
  EXPECT_EQ(r.bound, frac(7, 12));
  EXPECT_EQ(r.max_found, frac(37, 48));
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(verify_caveman_rewire(4, 2).passed());
  EXPECT_TRUE(verify_caveman_rewire(3, 4).passed());
  EXPECT_THROW(verify_caveman_rewire(2, 2), DomainError);
}

TEST(StructuralClaimsTest, PredicatesOnKnownGraphs) {
  const Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {3, 5}});
  for (const Check& c : structural_claims(two_triangles)) EXPECT_TRUE(c.ok) << c.name;

  const auto chain = structural_claims(regular_chain(3, 2));
  ASSERT_EQ(chain.size(), 5u);
  EXPECT_FALSE(chain[0].ok);  // one 8-vertex block

  const auto twin_inner = structural_claims(family_b(family_b_skeleton({0, 2, 0}, 0)));
  EXPECT_TRUE(twin_inner[0].ok);
  EXPECT_FALSE(twin_inner[4].ok);

  const Graph path = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {4, 6}});
  EXPECT_FALSE(structural_claims(path)[3].ok);
}

TEST(ReportJsonTest, Shape) {
  const TheoremReport r = verify_caveman_rewire(3, 2);
  const auto j = nlohmann::json::parse(report_json(r));
  EXPECT_EQ(j["theorem_id"], "caveman_rewire");
  EXPECT_EQ(j["parameters"]["k"], 3);
  EXPECT_EQ(j["bound"]["num"], "7");
  EXPECT_EQ(j["bound"]["den"], "12");
  EXPECT_EQ(j["max_found"]["num"], "37");
  EXPECT_EQ(j["max_found"]["decimal"], "0.77083333333333333333");
  EXPECT_EQ(j["passed"], true);
  EXPECT_TRUE(j["checks"].is_array());
  EXPECT_EQ(report_json(r), report_json(verify_caveman_rewire(3, 2)));
}

TEST(ReportJsonTest, ReportsAreReproducible) {
  EXPECT_EQ(report_json(verify_subcubic_bound(9, {1})), report_json(verify_subcubic_bound(9, {3})));
  EXPECT_EQ(report_json(verify_edge_add_bound(6, {1})), report_json(verify_edge_add_bound(6, {2})));
}

TEST(ClassifyJsonTest, Fields) {
  const Graph two_diamonds = Graph::from_edges(
      8, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}});
  const auto j = nlohmann::json::parse(classify_json(two_diamonds));
  EXPECT_EQ(j["n"], 8);
  EXPECT_EQ(j["blocks"].size(), 3u);
  EXPECT_EQ(j["blocks"][0]["kind"], "diamond");
  EXPECT_EQ(j["blocks"][0]["endblock"], true);
  EXPECT_EQ(j["cut_vertices"], nlohmann::json::array({3, 4}));
  EXPECT_EQ(j["type"]["d"], 2);
  EXPECT_EQ(j["in_b0"], true);
  EXPECT_EQ(j["in_b"], false);

  const auto small = nlohmann::json::parse(classify_json(named("paw")));
  EXPECT_TRUE(small["in_b"].is_null());
  EXPECT_EQ(small["s_set"], nlohmann::json::array({3}));

  const auto split = nlohmann::json::parse(classify_json(Graph(3)));
  EXPECT_EQ(split["connected"], false);
  EXPECT_TRUE(split.contains("error"));
}

}  // namespace
}  // namespace clustmax
