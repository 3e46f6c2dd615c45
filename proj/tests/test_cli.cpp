#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include <unistd.h>

#include "alia/cli.hpp"
#include "alia/fixtures.hpp"
#include "alia/io.hpp"
#include "support/generators.hpp"

namespace alia {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "alia");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(ALIA_DATA_DIR) + "/" + name; }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("alia_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

const std::vector<std::string> kSwap2 = {"--vars", "2", "--reflection", "swap:1,2", "--lform", "x1 - x2"};

std::vector<std::string> poly(std::vector<std::string> head) {
  head.insert(head.end(), kSwap2.begin(), kSwap2.end());
  return head;
}

TEST_F(Cli, CheckAlia) {
  Outcome ok = run({"check", "alia", data("sample_subadjacent.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "left-alia: PASS\n");
  Outcome bad = run({"check", "alia", data("cyclic3.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "left-alia: FAIL at (1,2,3): 2*e1 + 2*e2 + 2*e3\n");
  Outcome broken = run({"check", "alia", data("broken.json")});
  EXPECT_EQ(broken.code, 2);
  EXPECT_NE(broken.err.find("malformed rational"), std::string::npos);
  EXPECT_EQ(run({"check", "alia", tmp("missing.json")}).code, 2);
}

TEST_F(Cli, CheckJson) {
  Outcome r = run({"check", "alia", "--json", data("cyclic3.json")});
  EXPECT_EQ(r.code, 1);
  auto j = io::json::parse(r.out);
  EXPECT_EQ(j["pass"], false);
  EXPECT_EQ(j["witness"]["index"], io::json::parse("[1,2,3]"));
}

TEST_F(Cli, WrongKindIsAnInputError) {
  EXPECT_EQ(run({"check", "alia", data("sample_pre.json")}).code, 2);
  EXPECT_EQ(run({"check", "pre-alia", data("sample_pre.json")}).code, 0);
  EXPECT_EQ(run({"check", "zinbiel", data("half_shuffle3.json")}).code, 0);
}

TEST_F(Cli, CanonicalRThenYbe) {
  Outcome b = run({"build", "canonical-r", "-i", data("sample_pre.json"), "-o", tmp("d.json"), "-r", tmp("r.json")});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_NE(b.out.find("verification:\nybe: PASS"), std::string::npos);
  EXPECT_EQ(run({"check", "ybe", "-a", tmp("d.json"), "-r", tmp("r.json")}).code, 0);
  EXPECT_EQ(run({"check", "alia", tmp("d.json")}).code, 0);
  EXPECT_EQ(run({"check", "ybe", "-a", data("sample_subadjacent.json"), "-r", tmp("r.json")}).code, 2);
}

TEST_F(Cli, TriangularDelta) {
  ASSERT_EQ(run({"build", "canonical-r", "-i", data("sample_pre.json"), "-o", tmp("d.json"), "-r", tmp("r.json")}).code, 0);
  Outcome t = run({"build", "triangular", "-a", tmp("d.json"), "-r", tmp("r.json"), "-o", tmp("delta.json")});
  ASSERT_EQ(t.code, 0) << t.err;
  Comultiplication delta = io::comultiplication_from_json(io::read_file(tmp("delta.json")));
  // delta(e1*) = e1* (x) e2* - e2* (x) e1* in the double's basis e1, e2, e1*, e2*
  EXPECT_EQ(delta[2](2, 3), Scalar(1));
  EXPECT_EQ(delta[2](3, 2), Scalar(-1));
  EXPECT_EQ(run({"check", "bialgebra", "-a", tmp("d.json"), "-d", tmp("delta.json")}).code, 0);
}

TEST_F(Cli, DoubleDimensionMismatch) {
  Outcome r = run({"build", "double", "-a", data("sample_subadjacent.json"), "--astar", data("cyclic3.json"), "-o",
               tmp("x.json")});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(fs::exists(tmp("x.json")));
}

TEST_F(Cli, BuilderOutputRoundTrips) {
  ASSERT_EQ(run({"build", "sub-adjacent", "-i", data("sample_pre.json"), "-o", tmp("a.json")}).code, 0);
  EXPECT_EQ(io::algebra_from_json(io::read_file(tmp("a.json"))), fixtures::sample_subadjacent());
  ASSERT_EQ(run({"build", "coadjoint", "-a", tmp("a.json"), "-o", tmp("rep.json")}).code, 0);
  EXPECT_EQ(run({"check", "rep", tmp("rep.json")}).code, 0);
  ASSERT_EQ(run({"build", "semidirect", "-p", tmp("rep.json"), "-o", tmp("sd.json")}).code, 0);
  EXPECT_EQ(run({"check", "alia", tmp("sd.json")}).code, 0);
}

TEST_F(Cli, PolyCommands) {
  Outcome dd = run(poly({"poly", "dd", "--apply", "x1^3"}));
  EXPECT_EQ(dd.code, 0);
  EXPECT_EQ(dd.out, "x1^2 + x1*x2 + x2^2\n");
  EXPECT_EQ(run(poly({"poly", "dd", "--apply", "5"})).out, "0\n");
  Outcome br = run(poly({"poly", "bracket", "--f", "x1", "--g", "x2"}));
  EXPECT_EQ(br.out, "-2*x1\n");
  EXPECT_EQ(run(poly({"poly", "check-leibniz", "--deg", "3"})).code, 0);
  EXPECT_EQ(run(poly({"poly", "check-alia", "--deg", "2", "--triples", "20"})).code, 0);
  EXPECT_EQ(run({"poly", "is-reflection", "--vars", "2"}).code, 0);
  Outcome inexact = run({"poly", "dd", "--vars", "2", "--reflection", "swap:1,2", "--lform", "x1 + x2", "--apply", "x1"});
  EXPECT_EQ(inexact.code, 1);
  EXPECT_NE(inexact.err.find("inexact division"), std::string::npos);
  EXPECT_EQ(run({"poly", "is-reflection", "--vars", "2", "--reflection", "[[-1,0],[0,-1]]"}).code, 1);
  EXPECT_EQ(run(poly({"poly", "dd", "--apply", "x1^"})).code, 2);
}

TEST_F(Cli, Demo) {
  Outcome d = run({"demo"});
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("demo: PASS"), std::string::npos);
  Outcome j = run({"demo", "--json"});
  EXPECT_EQ(j.code, 0);
  auto doc = io::json::parse(j.out);
  EXPECT_EQ(doc["pass"], true);
  EXPECT_EQ(doc["stages"].size(), 8u);
}

TEST_F(Cli, DemoOnMutatedInput) {
  PreAlgebraTable p = fixtures::sample_pre();
  p.succ()(0, 1, 0) += 1;
  p.prec()(0, 1, 0) -= 1;  // same sub-adjacent bracket, broken identity
  io::write_file(tmp("p.json"), io::to_json(p));
  Outcome d = run({"demo", "-i", tmp("p.json")});
  EXPECT_EQ(d.code, 1);
  EXPECT_NE(d.out.find("FAIL"), std::string::npos);

  // change of basis: still pre-left-Alia, but the tables no longer match the goldens
  PreAlgebraTable q = testing::transport(fixtures::sample_pre(), Matrix{{1, 1}, {0, 1}});
  io::write_file(tmp("q.json"), io::to_json(q));
  Outcome e = run({"demo", "-i", tmp("q.json")});
  EXPECT_EQ(e.code, 1);
  EXPECT_NE(e.out.find("DIFF"), std::string::npos);
}

TEST_F(Cli, Usage) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"check", "nonsense"}).code, 2);
  EXPECT_EQ(run({"build", "canonical-r", "-i", data("sample_pre.json")}).code, 2);
}

}  // namespace
}  // namespace alia
