#include <gtest/gtest.h>

#include <filesystem>

#include "brute_force.hpp"
#include "chd/document.hpp"
#include "helpers.hpp"

using namespace chd;
using namespace chd::test;

TEST(Document, TriangleHasNoBallBlock) {
  std::string text = to_json(triangle());
  EXPECT_EQ(text,
            "{\"edges\":[[0,1],[1,2],[2,0]],\"format\":\"chd-digraph\",\"version\":1,\"vertices\":{\"count\":3}}\n");
  DigraphDocument doc = from_json(text);
  EXPECT_FALSE(doc.has_ball_block);
  EXPECT_TRUE(doc.ball.exact());
}

TEST(Document, BallBlock) {
  BallDigraph ball = gen("M(kappa=3,m=2,r=3)");
  std::string text = to_json(ball);
  EXPECT_NE(text.find("\"boundary\""), std::string::npos);
  EXPECT_NE(text.find("\"end_proxies\""), std::string::npos);
  DigraphDocument doc = from_json(text);
  EXPECT_TRUE(doc.has_ball_block);
  EXPECT_EQ(doc.ball.boundary, ball.boundary);
  EXPECT_EQ(doc.ball.end_proxies, ball.end_proxies);
  EXPECT_EQ(doc.ball.family, ball.family);
  EXPECT_EQ(doc.ball.digraph, ball.digraph);
}

TEST(Document, RoundTripIsByteIdentical) {
  for (const char* s : {"M(kappa=3,m=2,r=4)", "DL(C(m=2),r=3)", "CP(kappa=3)", "generic_bipartite(n=8,t=1,seed=2)"}) {
    std::string text = to_json(gen(s));
    EXPECT_EQ(to_json(from_json(text).ball), text) << s;
  }
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Digraph d = oracle::random_digraph(6, seed);
    EXPECT_EQ(from_json(to_json(d)).ball.digraph, d);
  }
}

TEST(Document, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "chd_document_test.json";
  std::string text = to_json(gen("Mprime(m=2,r=3)"));
  write_file(path.string(), text);
  EXPECT_EQ(read_file(path.string()), text);
  EXPECT_EQ(load_document(path.string()).ball.radius, 3u);
  std::filesystem::remove(path);
  EXPECT_THROW(read_file(path.string()), Error);
}

TEST(Document, MalformedInputs) {
  EXPECT_THROW(from_json("{"), Error);
  EXPECT_THROW(from_json("[]"), Error);
  EXPECT_THROW(from_json(R"({"format":"other","version":1,"vertices":{"count":1},"edges":[]})"), Error);
  EXPECT_THROW(from_json(R"({"format":"chd-digraph","version":2,"vertices":{"count":1},"edges":[]})"), Error);
  EXPECT_THROW(from_json(R"({"format":"chd-digraph","version":1,"vertices":{"count":2},"edges":[[0,1,1]]})"), Error);
  EXPECT_THROW(from_json(R"({"format":"chd-digraph","version":1,"vertices":{"count":2},"edges":[[0,2]]})"), Error);
  EXPECT_THROW(from_json(R"({"format":"chd-digraph","version":1,"vertices":{"count":2,"labels":["a"]},"edges":[]})"),
               Error);
  EXPECT_THROW(
      from_json(R"({"format":"chd-digraph","version":1,"vertices":{"count":2},"edges":[],"ball":{"root":5,"radius":1,"boundary":[],"end_proxies":[]}})"),
      Error);
}

TEST(Document, Dot) {
  std::string dot = to_dot(gen("M(kappa=3,m=2,r=2)"));
  EXPECT_EQ(dot.rfind("digraph chd {", 0), 0u);
  EXPECT_NE(dot.find("style=dashed"), std::string::npos);
  EXPECT_NE(dot.find("peripheries=2"), std::string::npos);
  EXPECT_NE(dot.find(" -> "), std::string::npos);
  EXPECT_EQ(to_dot(triangle()).find("style=dashed"), std::string::npos);
}
