#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

using posetop::Json;

namespace {

struct Invocation {
  int status;
  std::string out;
  std::string err;
};

Invocation run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int status = posetop::cli::run_command(args, in, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST(Cli, PolyPrintsTheDVector) {
  const Invocation r = run({"poly", "{x<y,z<y,z<w}"});
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(contains(r.out, "d = [0,1,5,5]")) << r.out;
  EXPECT_TRUE(contains(r.out, "reciprocity: pass"));
  const Json j = Json::parse(run({"--json", "poly", "{x<y,z<y,z<w}"}).out);
  EXPECT_EQ(j["d"], Json::parse(R"(["0","1","5","5"])"));
  EXPECT_EQ(j["strict_poly"]["coeffs"]["3"], "5/1");
  EXPECT_EQ(j["schema"], "v1");
}

TEST(Cli, InverseSum) {
  EXPECT_EQ(run({"inverse-sum", "A5", "--r", "2"}).out, "1082\n");
  EXPECT_EQ(run({"inverse-sum", "A5", "--r", "3"}).out, "273/4\n");
  EXPECT_EQ(run({"inverse-sum", "C1 * (C1 | C1 | C1)", "--r", "5", "--weak"}).out, "575/512\n");
  const Invocation bad = run({"inverse-sum", "A2", "--r", "1/2"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_TRUE(contains(bad.err, "DivergentParameter"));
}

TEST(Cli, ZetaIdentityForTheCube) {
  const Invocation r = run({"zeta-identity", "A3"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "rhs: 6*(zeta(4) - 17/16) - 6*(zeta(3) - 9/8) + (zeta(2) - 5/4)")) << r.out;
  EXPECT_TRUE(contains(r.out, "±"));
  EXPECT_TRUE(contains(r.out, "\nPASS\n"));
  const Json j = Json::parse(run({"--json", "zeta-identity", "A3"}).out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["rhs"]["zeta_coeffs"]["3"], "6/1");
  // The human output carries the same numbers as the JSON output.
  EXPECT_TRUE(contains(r.out, j["numeric"]["lhs"].get<std::string>().substr(0, 20)));
}

TEST(Cli, SeriesEvalTropicalTables) {
  const Invocation s = run({"series", "A3", "--weak"});
  EXPECT_TRUE(contains(s.out, "closed form: (x^3 + 4*x^2 + x) / (1-x)^4")) << s.out;
  const Invocation e = run({"eval", "C2", "--at", "4"});
  EXPECT_EQ(e.out, "strict: 6\nweak: 10\n");
  EXPECT_EQ(run({"eval", "C2", "--at", "4", "--weak"}).out, "weak: 10\n");
  EXPECT_EQ(run({"tropical", "{x<y>z<w}", "--lengths", "0,1,4,2"}).out, "6\n");
  EXPECT_EQ(run({"tables", "--eulerian", "4"}).out, "n=1: 1\nn=2: 1 1\nn=3: 1 4 1\nn=4: 1 11 11 1\n");
  EXPECT_TRUE(contains(run({"tables", "--stirling", "4"}).out, "n=4: 0 1 7 6 1"));
}

TEST(Cli, ExitCodes) {
  const Invocation syntax = run({"poly", "{x<"});
  EXPECT_EQ(syntax.status, 2);
  EXPECT_TRUE(contains(syntax.err, "line 1, column 4")) << syntax.err;
  EXPECT_EQ(run({"poly", "A13"}).status, 3);
  EXPECT_EQ(run({"--guard", "13", "eval", "A13", "--at", "2"}).status, 0);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"series", "A2", "--weak", "--strict"}).status, 2);
  EXPECT_EQ(run({"tables"}).status, 2);
  EXPECT_EQ(run({"--digits", "5", "poly", "A1"}).status, 2);
  EXPECT_EQ(run({"--help"}).status, 0);
  // A precision too low for the certified tail bound to fit the tolerance.
  EXPECT_EQ(run({"--tolerance", "1e-40", "--term-cap", "50", "zeta-identity", "A2"}).status, 1);
}

TEST(Cli, DefinesAndBatchInput) {
  const Invocation r = run({"--define", "N={x<y>z<w}", "poly", "N(C2, C1, C1, C1)"});
  EXPECT_TRUE(contains(r.out, "d = [0,0,3,11,9]")) << r.err;
  const Invocation batch = run({"inverse-sum", "-", "--r", "2"}, "A1\n# skipped\n\nA2\n{x<\nA3\n");
  EXPECT_EQ(batch.status, 2);
  EXPECT_EQ(batch.out, "# A1\n2\n# A2\n6\n# {x<\n# A3\n26\n");
  EXPECT_TRUE(contains(batch.err, "(input: {x<)"));
  const Invocation json = run({"--json", "eval", "-", "--at", "3"}, "C1\nC2\n");
  std::istringstream lines(json.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(Json::parse(line)["at"], "3/1");
    ++count;
  }
  EXPECT_EQ(count, 2);
}

TEST(Cli, DigitsFromEnvironmentAndFlag) {
  ::setenv("POSETOPERAD_DIGITS", "30", 1);
  const Invocation env = run({"zeta-identity", "C1"});
  ::setenv("POSETOPERAD_DIGITS", "nope", 1);
  EXPECT_EQ(run({"poly", "C1"}).status, 2);
  ::unsetenv("POSETOPERAD_DIGITS");
  EXPECT_EQ(env.status, 0);
  EXPECT_EQ(run({"--digits", "80", "zeta-identity", "C1"}).status, 0);
}

TEST(Cli, VerifySuiteIsDeterministicAcrossThreadCounts) {
  const Invocation one = run({"--json", "verify-suite", "--threads", "1"});
  const Invocation many = run({"--json", "verify-suite", "--threads", "8"});
  EXPECT_EQ(one.status, 0) << one.out.substr(0, 2000);
  EXPECT_EQ(one.out, many.out);
  const Json j = Json::parse(one.out);
  EXPECT_EQ(j["passed"], j["total"]);
  EXPECT_EQ(j["discrepancies"].size(), 3u);
  std::vector<std::string> ids;
  for (const auto& c : j["cases"]) ids.push_back(c["id"]);
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  EXPECT_EQ(run({"verify-suite"}).out, run({"verify-suite", "--threads", "3"}).out);
}
