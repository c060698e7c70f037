#include <gtest/gtest.h>

#include <map>
#include <set>

#include "chd/cuts.hpp"
#include "chd/reachability.hpp"
#include "helpers.hpp"

using namespace chd;
using namespace chd::test;

namespace {

SharedGraph share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

SharedGraph cycle6() { return share(make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}})); }

SharedGraph two_k4() {
  return share(make_graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                              {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6}}));
}

SharedGraph path(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return share(Graph::from_edge_list(n, edges));
}

std::vector<Vertex> set(std::initializer_list<Vertex> v) { return v; }

}  // namespace

TEST(Separation, SixCycleFromSide) {
  Separation s = separation_from_side(cycle6(), set({0, 1, 2}));
  EXPECT_EQ(s.separator, set({0, 2}));
  EXPECT_EQ(s.order(), 2u);
  EXPECT_EQ(s.wing_a, set({1}));
}

TEST(Separation, TwoK4AtSharedVertex) {
  auto g = two_k4();
  Separation s = separation_from_side(g, set({0, 1, 2, 3}));
  EXPECT_EQ(s.separator, set({3}));
  EXPECT_TRUE(s.essential);
  EXPECT_TRUE(is_essential(*g, s));
}

TEST(Separation, Path) {
  Separation s = separation_from_side(path(3), set({0, 1}));
  EXPECT_EQ(s.separator, set({1}));
}

TEST(Separation, Errors) {
  auto g = path(3);
  EXPECT_THROW(separation_from_side(g, {}), Error);
  EXPECT_THROW(separation_from_side(g, set({0, 1, 2})), Error);
  EXPECT_THROW(make_separation(g, set({0}), set({1, 2})), Error);  // edge 0-1 crosses
  EXPECT_THROW(make_separation(g, set({0, 1}), set({2})), Error);
}

TEST(Separation, NotEssentialWhenSeparatorIsRedundant) {
  // Cutting the 6-cycle at {0,2,3}: removing 3 alone still leaves the wings apart.
  auto g = cycle6();
  Separation s = make_separation(g, set({0, 1, 2, 3}), set({0, 2, 3, 4, 5}));
  EXPECT_FALSE(is_essential(*g, s));
}

TEST(Nested, IdenticalAndPath) {
  auto g = path(4);
  Separation s1 = separation_from_side(g, set({0, 1}));
  Separation s2 = separation_from_side(g, set({0, 1, 2}));
  CutSystem system = make_cut_system(g, {s1, s2}, {{0}, {3}});
  EXPECT_TRUE(are_nested(s1, s1, system));
  EXPECT_TRUE(are_nested(s1, s2, system));
  EXPECT_TRUE(are_nested(s2, s1, system));
  EXPECT_EQ(system.nested, true);
}

TEST(Nested, CrossingSixCycleSeparators) {
  auto g = cycle6();
  Separation s1 = make_separation(g, set({0, 1, 2, 3}), set({0, 3, 4, 5}));
  Separation s2 = make_separation(g, set({1, 2, 3, 4}), set({0, 1, 4, 5}));
  CutSystem system = make_cut_system(g, {s1, s2}, {});
  EXPECT_FALSE(are_nested(s1, s2, system));
  EXPECT_FALSE(are_nested(s2, s1, system));
  EXPECT_EQ(system.nested, false);
}

TEST(Nested, HostMismatchThrows) {
  Separation a = separation_from_side(path(3), set({0, 1}));
  Separation b = separation_from_side(path(4), set({0, 1}));
  CutSystem system = make_cut_system(a.host, {a}, {});
  EXPECT_THROW(are_nested(a, b, system), Error);
}

TEST(CandidateCuts, TwoK4) {
  auto g = two_k4();
  auto c = enumerate_candidate_cuts(g, {{0, 1, 2}, {4, 5, 6}}, 2);
  EXPECT_TRUE(c.flag.empty());
  EXPECT_EQ(c.order, 1u);
  ASSERT_FALSE(c.cuts.empty());
  for (const auto& s : c.cuts) EXPECT_EQ(s.separator, set({3}));
}

TEST(CandidateCuts, Flags) {
  EXPECT_EQ(enumerate_candidate_cuts(cycle6(), {}, 2).flag, "no end proxies");
  EXPECT_EQ(enumerate_candidate_cuts(cycle6(), {{0}}, 2).flag, "fewer than two end proxies");
  EXPECT_THROW(enumerate_candidate_cuts(cycle6(), {{0}, {3}}, 5), Error);
}

TEST(Blocks, TwoK4) {
  auto g = two_k4();
  auto c = enumerate_candidate_cuts(g, {{0, 1, 2}, {4, 5, 6}}, 2);
  CutSystem system = make_cut_system(g, c.cuts, {{0, 1, 2}, {4, 5, 6}});
  auto bs = derive_blocks_and_separators(system);
  EXPECT_EQ(bs.separators, (std::vector<std::vector<Vertex>>{{3}}));
  std::set<std::vector<Vertex>> blocks(bs.blocks.begin(), bs.blocks.end());
  EXPECT_EQ(blocks, (std::set<std::vector<Vertex>>{{0, 1, 2, 3}, {3, 4, 5, 6}}));

  StructureTree tree = build_structure_tree(system);
  EXPECT_TRUE(tree.is_tree);
  EXPECT_EQ(tree.tree.order(), 3u);
  EXPECT_EQ(tree.tree.degree(tree.separator_node(0)), 2u);
  std::string dot = to_dot(tree);
  EXPECT_NE(dot.find("shape=box"), std::string::npos);
  EXPECT_NE(dot.find("shape=ellipse"), std::string::npos);
}

TEST(Blocks, PathOfLengthThree) {
  auto g = path(4);
  auto c = enumerate_candidate_cuts(g, {{0}, {3}}, 1);
  CutSystem system = make_cut_system(g, c.cuts, {{0}, {3}});
  auto bs = derive_blocks_and_separators(system);
  std::set<std::vector<Vertex>> blocks(bs.blocks.begin(), bs.blocks.end());
  EXPECT_EQ(blocks, (std::set<std::vector<Vertex>>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(build_structure_tree(system).is_tree);
}

TEST(Blocks, SingleCutOnPath) {
  auto g = path(3);
  Separation s = separation_from_side(g, set({0, 1}));
  CutSystem system = make_cut_system(g, {s, make_separation(g, s.b, s.a)}, {{0}, {2}});
  EXPECT_EQ(system.condition_i, true);
  StructureTree tree = build_structure_tree(system);
  EXPECT_TRUE(tree.is_tree);
  EXPECT_EQ(tree.tree.order(), 3u);
}

TEST(Blocks, NotNestedThrows) {
  auto g = cycle6();
  Separation s1 = make_separation(g, set({0, 1, 2, 3}), set({0, 3, 4, 5}));
  Separation s2 = make_separation(g, set({1, 2, 3, 4}), set({0, 1, 4, 5}));
  CutSystem system = make_cut_system(g, {s1, s2}, {});
  EXPECT_THROW(derive_blocks_and_separators(system), Error);
}

TEST(BallCuts, MBallSystem) {
  ConstructedBall c = build_M(3, 2, 6);
  const Digraph& d = c.ball.digraph;
  CutSystem system = ball_cut_system(c.ball, 2);
  EXPECT_EQ(system.min_order(), 2u);
  EXPECT_EQ(system.nested, true);
  EXPECT_EQ(system.ends_separated, true);
  for (const auto& s : system.separators()) {
    ASSERT_EQ(s.size(), 2u);
    EXPECT_FALSE(d.adjacent(s[0], s[1]));
    bool sigma_pair = (c.trace.sigma[s[0]] && *c.trace.sigma[s[0]] == s[1]) ||
                      (c.trace.sigma[s[1]] && *c.trace.sigma[s[1]] == s[0]);
    EXPECT_TRUE(sigma_pair);
  }
  for (const auto& cut : system.cuts) {
    for (auto [x, y] : cut.host->edges()) {
      bool xa = std::binary_search(cut.wing_a.begin(), cut.wing_a.end(), x);
      bool yb = std::binary_search(cut.wing_b.begin(), cut.wing_b.end(), y);
      bool xb = std::binary_search(cut.wing_b.begin(), cut.wing_b.end(), x);
      bool ya = std::binary_search(cut.wing_a.begin(), cut.wing_a.end(), y);
      EXPECT_FALSE((xa && yb) || (xb && ya));
    }
  }
  StructureTree tree = build_structure_tree(system);
  EXPECT_TRUE(tree.is_tree);
  for (auto [u, v] : tree.tree.edges()) EXPECT_TRUE((u < tree.separators.size()) != (v < tree.separators.size()));
}

TEST(BallCuts, MThreeThreeBlockCycles) {
  ConstructedBall c = build_M(3, 3, 7);
  CutSystem system = ball_cut_system(c.ball, 2, 3);
  ASSERT_EQ(system.nested, true);
  StructureTree tree = build_structure_tree(system);
  ASSERT_TRUE(tree.is_tree);
  auto boundary = c.ball.boundary_mask();
  std::map<std::size_t, std::size_t> inner_sizes;
  for (std::size_t j = 0; j < tree.blocks.size(); ++j) {
    const auto& b = tree.blocks[j];
    if (std::any_of(b.begin(), b.end(), [&](Vertex v) { return boundary[v]; })) continue;
    ++inner_sizes[b.size()];
    if (b.size() != 3) continue;
    // The separators around such a block chain its vertices along sigma.
    std::set<Vertex> seen;
    for (auto [u, v] : tree.tree.edges()) {
      std::size_t other = u == tree.block_node(j) ? v : (v == tree.block_node(j) ? u : SIZE_MAX);
      if (other == SIZE_MAX) continue;
      const auto& s = tree.separators[other];
      seen.insert(s.begin(), s.end());
    }
    EXPECT_EQ(seen, std::set<Vertex>(b.begin(), b.end()));
  }
  EXPECT_GT(inner_sizes[3], 0u);
  EXPECT_GT(inner_sizes[6], 0u);
}

TEST(BallCuts, MPrimeSeparatorsAvoidEdgesAndTwoArcs) {
  BallDigraph ball = build_M_prime(2, 7).ball;
  const Digraph& d = ball.digraph;
  CutSystem system = ball_cut_system(ball, 2, 4);
  EXPECT_EQ(system.min_order(), 2u);
  for (const auto& s : system.separators()) {
    ASSERT_EQ(s.size(), 2u);
    EXPECT_FALSE(d.adjacent(s[0], s[1]));
    for (Vertex w : d.out(s[0])) EXPECT_FALSE(d.has_edge(w, s[1]));
    for (Vertex w : d.out(s[1])) EXPECT_FALSE(d.has_edge(w, s[0]));
  }
}
