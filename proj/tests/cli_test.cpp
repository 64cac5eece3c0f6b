#include <gtest/gtest.h>

#include <sstream>

#include "kfk/cli.hpp"

using namespace kfk;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, Relator) {
  const auto r = run({"relator", "--n", "7", "--b", "2", "--t", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "yxyxxyxxYXYXXYXX\n");
}

TEST(Cli, FiberJsonRoundTrip) {
  const auto r = run({"fiber", "--n", "7", "--b", "2", "--t", "4", "--p", "3", "--q", "2", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("fibred"), true);
  EXPECT_EQ(j.at("brown").at("max_positions"), json::array({1}));
  EXPECT_EQ(j.at("brown").at("min_positions"), json::array({9}));
  const auto parsed = j.get<FibrationVerdict>();
  EXPECT_EQ(parsed, fibers_over_slope({7, 2, 4}, {3, 2}));
  EXPECT_EQ(json(parsed).dump(), json(fibers_over_slope({7, 2, 4}, {3, 2})).dump());
}

TEST(Cli, FiberText) {
  const auto r = run({"fiber", "--n", "7", "--b", "2", "--t", "4", "--p", "1", "--q", "0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("fibred: yes"), std::string::npos);
  EXPECT_NE(r.out.find("7 curves"), std::string::npos);
}

TEST(Cli, JsonRoundTripsOtherResults) {
  const auto s = run({"surgery", "--p", "5", "--q", "2", "--w", "3", "--m", "1", "--json"});
  ASSERT_EQ(s.code, 0);
  const auto res = json::parse(s.out).get<SurgeryResult>();
  EXPECT_EQ(res.p_prime, 13);
  EXPECT_EQ(res.meridian_image, std::make_pair(std::int64_t{1}, std::int64_t{9}));

  const auto o = run({"orbilens", "--a1", "4", "--a2", "6", "--json"});
  ASSERT_EQ(o.code, 0);
  EXPECT_EQ(json::parse(o.out).get<QuotientData>(), (QuotientData{12, 2, 3, 2}));

  const BrownVerdict v = brown_criterion(Word::parse("xyXYxyXY"), {1, 1});
  EXPECT_EQ(json::parse(json(v).dump()).get<BrownVerdict>(), v);
}

TEST(Cli, SlopeCommands) {
  EXPECT_EQ(run({"slope", "parity", "--p", "3", "--q", "2"}).out, "12\n");
  EXPECT_EQ(run({"slope", "dist", "--p", "3", "--q", "2", "--p2", "1", "--q2", "0"}).out, "2\n");
  EXPECT_EQ(run({"slope", "clique", "--bound", "1"}).out, "3 (0,1) (1,0) (1,1)\n");
}

TEST(Cli, SurgeryAndOrbilens) {
  EXPECT_EQ(run({"surgery", "--p", "5", "--q", "2", "--w", "3", "--m", "1"}).out, "13\n");
  EXPECT_EQ(run({"orbilens", "--a1", "2", "--a2", "3"}).out, "n 6 abar1 2 abar2 3 base_order 1\n");
}

TEST(Cli, Cone) {
  const auto r = run({"cone", "--u", "1", "--v", "1", "--n", "7", "--m-max", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m,c1,c2,error\n1,7,8,1/8\n2,14,15,1/15\n");
}

TEST(Cli, Alexander) {
  const auto r = run({"alexander", "--n", "7", "--b", "2", "--t", "4", "--p", "3", "--q", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "polynomial T^7 - 1\nterms 0:-1 7:1\nmonic true\n");
}

TEST(Cli, Sweep) {
  const auto a = run({"sweep", "--max-n", "5", "--max-slope", "4", "--csv", "-"});
  const auto b = run({"sweep", "--max-n", "5", "--max-slope", "4", "--csv", "-"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("n,b,t,p,q,wx,wy,max_pos,min_pos,fibred\n", 0), 0u);
  EXPECT_NE(a.err.find("falsifications 0"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"fiber", "--n", "7"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"relator", "--n", "x", "--b", "1", "--t", "0"}).code, 2);
  EXPECT_EQ(run({}).code, 2);

  const auto coprime = run({"fiber", "--n", "7", "--b", "2", "--t", "4", "--p", "7", "--q", "1"});
  EXPECT_EQ(coprime.code, 1);
  EXPECT_NE(coprime.err.find("WindingNotCoprime"), std::string::npos);

  const auto knot = run({"relator", "--n", "3", "--b", "1", "--t", "1"});
  EXPECT_EQ(knot.code, 1);
  EXPECT_NE(knot.err.find("NotAKnot"), std::string::npos);

  const auto surgery = run({"surgery", "--p", "4", "--q", "2", "--w", "1", "--m", "1"});
  EXPECT_EQ(surgery.code, 1);
  EXPECT_NE(surgery.err.find("InvalidInput"), std::string::npos);
}
