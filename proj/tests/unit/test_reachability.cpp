#include <gtest/gtest.h>

#include <set>

#include "brute_force.hpp"
#include "chd/isomorphism.hpp"
#include "chd/reachability.hpp"
#include "helpers.hpp"

using namespace chd;
using namespace chd::test;

TEST(ReachabilityClass, TriangleHasSingletonClasses) {
  ReachClass c = reachability_class(triangle(), {0, 1});
  EXPECT_EQ(c.edges, (std::vector<Edge>{{0, 1}}));
  EXPECT_FALSE(c.universal);
  auto partition = reachability_partition(triangle());
  EXPECT_EQ(std::set<std::size_t>(partition.begin(), partition.end()).size(), 3u);
}

TEST(ReachabilityClass, AlternatingCycleIsUniversal) {
  Digraph c = digraph("C(m=3)");
  ReachClass cls = reachability_class(c, c.edges().front());
  EXPECT_EQ(cls.edges.size(), 6u);
  EXPECT_TRUE(cls.universal);
  EXPECT_TRUE(isomorphic(cls.delta.digraph, c));
}

TEST(ReachabilityClass, CompleteBipartiteIsUniversal) {
  Digraph k = digraph("K(kappa=2,lambda=2)");
  for (const Edge& e : k.edges()) EXPECT_TRUE(reachability_class(k, e).universal);
}

TEST(ReachabilityClass, NonEdgeThrows) { EXPECT_THROW(reachability_class(triangle(), {0, 2}), Error); }

TEST(ReachabilityDigraph, FamilyBalls) {
  struct Case {
    const char* ball;
    const char* delta;
  };
  for (auto [ball, delta] : {Case{"M(kappa=3,m=2,r=5)", "CP(kappa=3)"},
                             Case{"Mprime(m=2,r=5)", "K(kappa=2,lambda=2)"},
                             Case{"DL(K(kappa=2,lambda=3),r=4)", "K(kappa=2,lambda=3)"}}) {
    auto report = reachability_digraph(gen(ball));
    EXPECT_TRUE(isomorphic(report.representative.delta.digraph, digraph(delta))) << ball;
    EXPECT_TRUE(report.all_isomorphic) << ball;
    EXPECT_FALSE(report.representative.universal) << ball;
  }
}

TEST(ReachabilityDigraph, FiniteCycle) {
  auto report = reachability_digraph(gen("C(m=3)"));
  EXPECT_EQ(report.class_count, 1u);
  EXPECT_EQ(report.representative.edges.size(), 6u);
}

TEST(ReachabilityDigraph, MPrimeClassIsTheAbPairs) {
  ConstructedBall mp = build_M_prime(2, 4);
  auto report = reachability_digraph(mp.ball);
  const auto& to_host = report.representative.delta.to_host;
  std::set<Vertex> vertices(to_host.begin(), to_host.end());
  // Each class holds {a_w, sigma(a_w)} x {b_w, sigma(b_w)} for a single w.
  bool found = false;
  for (const auto& p : mp.trace.ab_pairs) {
    if (p.a && p.b && vertices.count(*p.a) && vertices.count(*p.b)) found = true;
  }
  EXPECT_TRUE(found);
}

TEST(ReachabilityDigraph, TypeTwoBallsHaveBipartiteDelta) {
  for (const char* s : {"M(kappa=3,m=3,r=6)", "M(kappa=4,m=2,r=5)", "Mprime(m=3,r=5)", "DL(CP(kappa=3),r=5)"}) {
    auto report = reachability_digraph(gen(s));
    EXPECT_TRUE(two_coloring(underlying_graph(report.representative.delta.digraph)).has_value()) << s;
  }
}

TEST(ReachabilityPartition, AgreesWithClosureAndIsSymmetric) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Digraph d = oracle::random_digraph(4 + seed % 5, 77 + seed);
    auto partition = reachability_partition(d);
    for (std::size_t i = 0; i < d.edges().size(); ++i) {
      ReachClass c = reachability_class(d, d.edges()[i]);
      std::vector<Edge> same;
      for (std::size_t j = 0; j < d.edges().size(); ++j) {
        if (partition[j] == partition[i]) same.push_back(d.edges()[j]);
      }
      EXPECT_EQ(c.edges, same);
      for (const Edge& f : c.edges) {
        auto back = reachability_class(d, f).edges;
        EXPECT_TRUE(std::find(back.begin(), back.end(), d.edges()[i]) != back.end());
      }
    }
  }
}

TEST(DescendantDigraph, Examples) {
  Subdigraph single = descendant_digraph(make(2, {{0, 1}}), 0);
  EXPECT_EQ(single.digraph.order(), 2u);
  EXPECT_EQ(single.digraph.size(), 1u);
  EXPECT_EQ(descendant_digraph(triangle(), 2).digraph.order(), 3u);
}

TEST(DescendantDigraph, MBallDescendantsAreForests) {
  BallDigraph ball = build_M(3, 3, 6).ball;
  auto inner = ball.interior_mask(1);
  for (Vertex x : ball.interior(3)) {
    std::vector<Vertex> keep;
    for (Vertex v : descendant_digraph(ball.digraph, x).to_host) {
      if (inner[v]) keep.push_back(v);
    }
    EXPECT_TRUE(is_forest(underlying_graph(induced_subdigraph(ball.digraph, keep).digraph)));
  }
}

TEST(NeighborhoodGraph, Examples) {
  Graph k22 = undirected("K(kappa=2,lambda=2)");
  auto [x, y] = k22.edges().front();
  Graph omega = neighborhood_graph(k22, x, y).graph;
  EXPECT_EQ(omega.order(), 2u);
  EXPECT_EQ(omega.size(), 1u);

  Graph cp = undirected("CP(kappa=3)");
  auto [a, b] = cp.edges().front();
  NeighborhoodGraph n = neighborhood_graph(cp, a, b);
  EXPECT_EQ(n.graph.order(), 2u);
  EXPECT_EQ(n.graph.size(), 0u);
  EXPECT_EQ(n.side_x.size(), 1u);
  EXPECT_EQ(n.side_y.size(), 1u);

  Graph c6 = undirected("C(m=3)");
  auto [u, v] = c6.edges().front();
  Graph oc = neighborhood_graph(c6, u, v).graph;
  EXPECT_EQ(oc.order(), 2u);
  EXPECT_EQ(oc.size(), 0u);

  EXPECT_THROW(neighborhood_graph(c6, 0, 3), Error);
}
