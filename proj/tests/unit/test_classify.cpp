#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "chd/classify.hpp"
#include "helpers.hpp"

using namespace chd;
using namespace chd::test;

namespace {

Graph relabel(const Graph& g, const std::vector<Vertex>& p) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(p[u], p[v]);
  return Graph::from_edge_list(g.order(), edges);
}

}  // namespace

TEST(ClassifyReachabilityGraph, CompleteBipartite) {
  CatalogLabel l = classify_reachability_graph(undirected("K(kappa=3,lambda=5)"));
  EXPECT_TRUE(l.classified());
  EXPECT_EQ(l.confidence, Confidence::exact);
  ASSERT_TRUE(l.family.has_value());
  EXPECT_EQ(l.family->kind, FamilyKind::K);
  EXPECT_EQ(l.family->kappa, 3u);
  EXPECT_EQ(l.family->lambda, 5u);
}

TEST(ClassifyReachabilityGraph, ComplementOfPerfectMatching) {
  CatalogLabel l = classify_reachability_graph(undirected("CP(kappa=4)"));
  ASSERT_TRUE(l.family.has_value());
  EXPECT_EQ(l.family->kind, FamilyKind::CP);
  EXPECT_EQ(l.family->kappa, 4u);
  EXPECT_EQ(l.classification_case, "6.4(iv)");
}

TEST(ClassifyReachabilityGraph, Cycle) {
  CatalogLabel l = classify_reachability_graph(undirected("C(m=3)"));
  ASSERT_TRUE(l.family.has_value());
  EXPECT_EQ(l.family->kind, FamilyKind::C);
  EXPECT_EQ(l.family->m, 3u);
  EXPECT_TRUE(l.matches(parse_family_spec("CP(kappa=3)")));
}

TEST(ClassifyReachabilityGraph, Tree) {
  CatalogLabel l = classify_reachability_graph(make_graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(l.classification_case, "6.4(i)");
}

TEST(ClassifyReachabilityGraph, Errors) {
  EXPECT_THROW(classify_reachability_graph(underlying_graph(triangle())), Error);
  EXPECT_THROW(classify_reachability_graph(make_graph(4, {{0, 1}, {2, 3}})), Error);
}

TEST(ClassifyReachabilityGraph, GenericBipartite) {
  Graph g = underlying_graph(build_generic_bipartite(16, 2, 3));
  CatalogLabel l = classify_reachability_graph(g);
  EXPECT_TRUE(l.classified());
  EXPECT_EQ(l.confidence, Confidence::local_evidence);
  EXPECT_GE(l.genericity_level, 2u);
}

TEST(ClassifyReachabilityGraph, DeterministicUnderRelabeling) {
  std::mt19937_64 rng(42);
  for (const char* s : {"K(kappa=2,lambda=4)", "CP(kappa=5)", "C(m=4)"}) {
    Graph g = undirected(s);
    std::string expected = to_string(classify_reachability_graph(g));
    for (int round = 0; round < 5; ++round) {
      std::vector<Vertex> p(g.order());
      std::iota(p.begin(), p.end(), Vertex{0});
      std::shuffle(p.begin(), p.end(), rng);
      EXPECT_EQ(to_string(classify_reachability_graph(relabel(g, p))), expected) << s;
    }
  }
}

TEST(Genericity, CompleteBipartiteFailsWithCompletenessWitness) {
  auto r = check_genericity(undirected("K(kappa=3,lambda=3)"), 1);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_TRUE(r.witness->with.empty());
  EXPECT_EQ(r.witness->without.size(), 1u);
  EXPECT_EQ(to_string(*r.witness), "U={} W={0}");
}

TEST(Genericity, ComplementOfMatchingPassesOneFailsTwo) {
  Graph g = undirected("CP(kappa=3)");
  EXPECT_TRUE(check_genericity(g, 1).passed);
  auto r = check_genericity(g, 2);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->with.size() + r.witness->without.size(), 2u);
}

TEST(Genericity, Errors) {
  EXPECT_THROW(check_genericity(underlying_graph(triangle()), 1), Error);
  EXPECT_THROW(check_genericity(undirected("C(m=3)"), 0), Error);
}

TEST(ClassifyDigraph, TypeOneExamples) {
  CatalogLabel t = classify_digraph(gen("T(kappa=2,lambda=3,r=4)"));
  EXPECT_EQ(t.type, "TypeI");
  EXPECT_EQ(t.classification_case, "4.2(1)");
  EXPECT_TRUE(t.matches(parse_family_spec("T(kappa=2,lambda=3,r=4)")));

  CatalogLabel x = classify_digraph(gen("X_lambda_T(T=tournament(kind=triangle,n=3),lambda=2,r=4)"));
  EXPECT_EQ(x.type, "TypeI");
  EXPECT_EQ(x.classification_case, "4.2(2)");
  ASSERT_TRUE(x.family.has_value());
  EXPECT_EQ(x.family->lambda, 2u);
}

TEST(ClassifyDigraph, MBall) {
  CatalogLabel l = classify_digraph(gen("M(kappa=3,m=2,r=6)"));
  EXPECT_EQ(to_string(l), "TypeII case=7.6(5) M(kappa=3,m=2) confidence=local-evidence");
}

TEST(ClassifyDigraph, LargerMembers) {
  for (const char* s : {"M(kappa=4,m=2,r=5)", "DL(K(kappa=3,lambda=3),r=4)", "DL(C(m=3),r=5)"}) {
    CatalogLabel l = classify_digraph(gen(s));
    EXPECT_TRUE(l.classified() && l.matches(parse_family_spec(s))) << s << " -> " << to_string(l);
  }
}

TEST(ClassifyDigraph, OutOfScopeAndOutside) {
  CatalogLabel finite = classify_digraph(digraph("C(m=3)"));
  EXPECT_EQ(finite.status, LabelStatus::not_in_scope);
  EXPECT_EQ(to_string(finite).rfind("not in scope", 0), 0u);

  CatalogLabel linear = classify_digraph(gen("X_undirected(kappa=3,lambda=2,r=4)"));
  EXPECT_EQ(linear.status, LabelStatus::outside_classification);

  EXPECT_THROW(classify_digraph(make(4, {{0, 1}, {2, 3}})), Error);
}
