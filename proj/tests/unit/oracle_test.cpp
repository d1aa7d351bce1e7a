#include <gtest/gtest.h>

#include "corpus.hpp"
#include "implicit_net/oracle.hpp"

using namespace implicit_net;
using namespace implicit_net::testing;

namespace {

const CheckResult& check(const VerificationReport& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c;
  throw std::runtime_error("no check named " + name);
}

UserNetwork with_extra_edge(const UserNetwork& net, UserIndex a, UserIndex b) {
  std::vector<std::vector<UserIndex>> lists(net.num_users());
  for (UserIndex u = 0; u < net.num_users(); ++u) lists[u].assign(net.neighbors(u).begin(), net.neighbors(u).end());
  lists[a].push_back(b);
  lists[b].push_back(a);
  for (auto& l : lists) std::sort(l.begin(), l.end());
  return UserNetwork::from_sorted_lists(std::move(lists));
}

}  // namespace

TEST(OracleTwoPath, ToyPairs) {
  auto g = toy_graph();
  EXPECT_TRUE(oracle_two_path(g, 0, 2));   // u1,u3 via i3
  EXPECT_FALSE(oracle_two_path(g, 0, 1));  // u1,u2
  EXPECT_TRUE(oracle_two_path(g, 1, 3));
  EXPECT_THROW(oracle_two_path(g, 2, 2), std::invalid_argument);
  EXPECT_THROW(oracle_two_path(g, 0, 9), std::invalid_argument);
}

TEST(OracleTwoPath, DegreeZeroUserNeverConnected) {
  auto g = BipartiteRatingGraph::from_index_pairs(3, 1, std::vector<std::pair<UserIndex, ItemIndex>>{{0, 0}, {1, 0}});
  EXPECT_FALSE(oracle_two_path(g, 2, 0));
  EXPECT_FALSE(oracle_two_path(g, 1, 2));
}

TEST(IncidenceBitmap, AgreesWithScalarOracle) {
  for (const auto& [name, g] : corpus(40)) {
    IncidenceBitmap bitmap(g);
    for (UserIndex u = 0; u < g.num_users(); ++u) {
      EXPECT_EQ(bitmap.shared_items(u, u), g.user_degree(u));
      for (UserIndex v = u + 1; v < g.num_users(); ++v) ASSERT_EQ(bitmap.share_item(u, v), oracle_two_path(g, u, v)) << name;
    }
  }
}

TEST(VerifyProjection, ToyPasses) {
  auto g = toy_graph();
  auto report = verify_projection(g, project_exhaustive(g));
  EXPECT_TRUE(report.overall()) << report.to_text();
  EXPECT_EQ(report.checks.size(), 4u);
}

TEST(VerifyProjection, SpuriousEdgeIsCaught) {
  auto g = toy_graph();
  auto bad = with_extra_edge(project_clique_addition(g), 0, 1);
  auto report = verify_projection(g, bad);
  EXPECT_FALSE(report.overall());
  const auto& c = check(report, "edge_criterion");
  EXPECT_FALSE(c.passed);
  EXPECT_NE(c.counterexample.find("(u1,u2)"), std::string::npos) << c.counterexample;
  EXPECT_TRUE(check(report, "item_cliques").passed);
}

TEST(VerifyProjection, MissingEdgeBreaksCliqueCheck) {
  auto g = toy_graph();
  auto net = project_clique_addition(g);
  std::vector<std::vector<UserIndex>> lists(5);
  for (UserIndex u = 0; u < 5; ++u)
    for (UserIndex v : net.neighbors(u))
      if (!((u == 2 && v == 4) || (u == 4 && v == 2))) lists[u].push_back(v);
  auto report = verify_projection(g, UserNetwork::from_sorted_lists(lists));
  EXPECT_FALSE(check(report, "edge_criterion").passed);
  EXPECT_FALSE(check(report, "item_cliques").passed);
}

TEST(VerifyProjection, AsymmetryIsCaught) {
  auto g = toy_graph();
  std::vector<std::vector<UserIndex>> lists{{2, 4}, {3}, {0, 4}, {1}, {0}};
  auto report = verify_projection(g, UserNetwork::from_sorted_lists(lists));
  EXPECT_FALSE(check(report, "symmetry").passed);
}

TEST(VerifyProjection, EveryAlgorithmPassesOnCorpus) {
  for (const auto& [name, g] : corpus()) {
    for (auto algorithm : {ProjectionAlgorithm::kExhaustive, ProjectionAlgorithm::kCliqueAddition,
                           ProjectionAlgorithm::kMatrixProduct}) {
      auto report = verify_projection(g, project(g, algorithm));
      EXPECT_TRUE(report.overall()) << name << "\n" << report.to_text();
    }
    EXPECT_TRUE(verify_counts(g, two_path_counts(g)).overall()) << name;
  }
}

TEST(VerifyProjection, ArgumentAndSizeErrors) {
  auto g = toy_graph();
  EXPECT_THROW(verify_projection(g, UserNetwork(4)), std::invalid_argument);

  std::vector<std::pair<UserIndex, ItemIndex>> pairs{{0, 0}};
  auto big = BipartiteRatingGraph::from_index_pairs(2001, 1, pairs);
  EXPECT_THROW(verify_projection(big, UserNetwork(2001)), SizeLimitError);
  OracleOptions lifted;
  lifted.ignore_size_limit = true;
  EXPECT_TRUE(verify_projection(big, UserNetwork(2001), lifted).overall());
}

TEST(VerifyCounts, DetectsWrongEntry) {
  auto g = toy_graph();
  std::vector<std::size_t> offsets{0, 1, 2, 3, 4, 5};
  std::vector<CountMatrix::Entry> diagonal_only{{0, 1}, {1, 1}, {2, 2}, {3, 1}, {4, 2}};
  auto report = verify_counts(g, CountMatrix(offsets, diagonal_only));
  EXPECT_FALSE(check(report, "count_entries").passed);
  EXPECT_TRUE(check(report, "count_diagonal").passed);
}

TEST(VerifyComponents, ToyPassesAndInjectedFaultsFail) {
  auto g = toy_graph();
  auto net = project_clique_addition(g);
  std::span<const std::string> labels = g.user_labels();

  EXPECT_TRUE(verify_components(net, ComponentSet{{{0, 2, 4}, {1, 3}}}, labels).overall());

  auto merged = verify_components(net, ComponentSet{{{0, 1, 2, 3, 4}}}, labels);
  EXPECT_FALSE(check(merged, "connected").passed);
  EXPECT_TRUE(check(merged, "no_cross_edge").passed);

  auto split = verify_components(net, ComponentSet{{{0, 2}, {1, 3}, {4}}}, labels);
  const auto& cross = check(split, "no_cross_edge");
  EXPECT_FALSE(cross.passed);
  EXPECT_TRUE(cross.counterexample.find("(u1,u5)") != std::string::npos ||
              cross.counterexample.find("(u3,u5)") != std::string::npos)
      << cross.counterexample;
}

TEST(VerifyComponents, CoverageViolationsAreReportedNotThrown) {
  auto net = project_clique_addition(toy_graph());
  auto missing = verify_components(net, ComponentSet{{{0, 2, 4}}});
  EXPECT_FALSE(check(missing, "exhaustive").passed);

  auto doubled = verify_components(net, ComponentSet{{{0, 2, 4}, {1, 3, 4}}});
  EXPECT_FALSE(check(doubled, "disjoint").passed);

  auto outside = verify_components(net, ComponentSet{{{0, 2, 4}, {1, 3}, {9}}});
  EXPECT_FALSE(check(outside, "in_range").passed);
}

TEST(VerificationReport, Serialization) {
  VerificationReport r;
  r.add("alpha", true);
  r.add("beta", false, "(a,b)");
  EXPECT_FALSE(r.overall());
  EXPECT_EQ(r.to_key_value(),
            "check=alpha pass=true counterexample=-\n"
            "check=beta pass=false counterexample=(a,b)\n");
  EXPECT_EQ(r.to_text(), "PASS alpha\nFAIL beta: (a,b)\noverall: FAIL\n");
  VerificationReport empty;
  EXPECT_TRUE(empty.overall());
}
