#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "chd/document.hpp"
#include "cli.hpp"

namespace fs = std::filesystem;
using chd::cli::dispatch;

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome r;
  r.code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("chd_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GenWritesFile) {
  Outcome r = run({"gen", "M(kappa=3,m=2,r=5)", "-o", path("m32.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(fs::exists(path("m32.json")));
  EXPECT_TRUE(chd::load_document(path("m32.json")).has_ball_block);
}

TEST_F(CliTest, GenToStdoutAndDot) {
  Outcome json = run({"gen", "C(m=2)"});
  EXPECT_EQ(json.code, 0);
  EXPECT_EQ(json.out.rfind("{\"edges\"", 0), 0u);
  Outcome dot = run({"gen", "C(m=2)", "--format", "dot"});
  EXPECT_EQ(dot.out.rfind("digraph chd {", 0), 0u);
}

TEST_F(CliTest, GenSeeds) {
  Outcome a = run({"gen", "generic_bipartite(n=8,t=1)", "--seed", "4"});
  Outcome b = run({"gen", "generic_bipartite(n=8,t=1)", "--seed", "4"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run({"gen", "generic_bipartite(n=8,t=1,seed=3)", "--seed", "4"}).code, 2);
  EXPECT_EQ(run({"gen", "C(m=2)", "--seed", "4"}).code, 2);
  EXPECT_EQ(run({"gen", "M(kappa=3,m=2,r=3)", "--seed", "4"}).code, 0);
}

TEST_F(CliTest, IsoRespectingBoundary) {
  ASSERT_EQ(run({"gen", "line_of(DL(C(m=2),r=6))", "-o", path("lofdlc4.json")}).code, 0);
  ASSERT_EQ(run({"gen", "Mprime(m=2,r=4)", "-o", path("mprime4.json")}).code, 0);
  Outcome r = run({"iso", path("lofdlc4.json"), path("mprime4.json"), "--respect-boundary"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("isomorphic\n", 0), 0u);
  ASSERT_EQ(run({"gen", "M(kappa=3,m=2,r=3)", "-o", path("m.json")}).code, 0);
  Outcome no = run({"iso", path("m.json"), path("mprime4.json")});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "not isomorphic\n");
}

TEST_F(CliTest, CheckTransitiveTournament) {
  ASSERT_EQ(run({"gen", "tournament(kind=linear,n=3)", "-o", path("tt3.json")}).code, 0);
  Outcome r = run({"check", path("tt3.json"), "--prop", "c-homog", "--max-size", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("witness: [0,1] -> "), std::string::npos);
  EXPECT_EQ(run({"check", path("tt3.json"), "--prop", "triangle-free"}).code, 1);
  EXPECT_EQ(run({"check", path("tt3.json"), "--prop", "arc-trans", "--k", "1"}).code, 1);
}

TEST_F(CliTest, CheckBallsAndFlags) {
  ASSERT_EQ(run({"gen", "M(kappa=3,m=2,r=5)", "-o", path("m.json")}).code, 0);
  EXPECT_EQ(run({"check", path("m.json"), "--prop", "triangle-free"}).code, 0);
  EXPECT_EQ(run({"check", path("m.json"), "--prop", "c-homog", "--max-size", "3", "--margin", "2"}).code, 0);
  EXPECT_EQ(run({"check", path("m.json"), "--prop", "homog"}).code, 2);
  EXPECT_EQ(run({"check", path("m.json"), "--prop", "triangle-free", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"check", path("m.json"), "--prop", "arc-trans", "--max-size", "2"}).code, 2);
  EXPECT_EQ(run({"check", path("m.json"), "--prop", "bogus"}).code, 2);
}

TEST_F(CliTest, ReachCutsClassify) {
  ASSERT_EQ(run({"gen", "M(kappa=3,m=2,r=6)", "-o", path("m.json")}).code, 0);
  Outcome reach = run({"reach", path("m.json")});
  EXPECT_EQ(reach.code, 0);
  EXPECT_NE(reach.out.find("alias CP(kappa=3)"), std::string::npos);
  EXPECT_EQ(run({"reach", path("m.json"), "--edge", "0,1"}).code, 0);
  EXPECT_EQ(run({"reach", path("m.json"), "--edge", "0"}).code, 2);

  Outcome cuts = run({"cuts", path("m.json"), "--max-order", "2"});
  EXPECT_EQ(cuts.code, 0);
  EXPECT_NE(cuts.out.find("of order 2"), std::string::npos);
  Outcome dot = run({"cuts", path("m.json"), "--dot"});
  EXPECT_NE(dot.out.find("shape=box"), std::string::npos);

  Outcome cls = run({"classify", path("m.json")});
  EXPECT_EQ(cls.code, 0);
  EXPECT_EQ(cls.out.substr(0, cls.out.find('\n')), "TypeII case=7.6(5) M(kappa=3,m=2) confidence=local-evidence");
}

TEST_F(CliTest, ReportsAreReproducible) {
  ASSERT_EQ(run({"gen", "DL(C(m=2),r=4)", "-o", path("d.json")}).code, 0);
  for (auto args : std::vector<std::vector<std::string>>{{"reach", path("d.json")},
                                                         {"cuts", path("d.json")},
                                                         {"classify", path("d.json")}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST_F(CliTest, UsageAndDataErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"gen", "Q(m=2)"}).code, 2);
  EXPECT_EQ(run({"classify", path("missing.json")}).code, 2);
  std::ofstream(path("bad.json")) << "{\"format\":\"chd-digraph\",\"version\":1,\"vertices\":{\"count\":2},"
                                     "\"edges\":[[0,1],[1,0]]}";
  Outcome r = run({"classify", path("bad.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("antisymmetry violated"), std::string::npos);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, BinaryExitCodes) {
  std::string bin = CHD_BINARY;
  std::string out = path("t.json");
  EXPECT_EQ(std::system((bin + " gen 'tournament(kind=linear,n=3)' -o " + out + " > /dev/null").c_str()), 0);
  int status = std::system((bin + " check " + out + " --prop c-homog --max-size 2 > /dev/null").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 1);
  status = std::system((bin + " check " + out + " > /dev/null 2>&1").c_str());
  EXPECT_EQ(WEXITSTATUS(status), 2);
}
