#include <gtest/gtest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "run.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = epsalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EPSALG_TEST_DATA) + "/" + name; }

}  // namespace

TEST(Cli, NormalizeBosonExample) {
  const Result r = run({"normalize", "--alg", "boson:n=1", "a1*ad1*ad1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "ad1^2*a1 + 2*h*ad1\n");
}

TEST(Cli, NormalizeStrategiesAgree) {
  for (const char* s : {"leftmost", "rightmost", "random"}) {
    EXPECT_EQ(run({"normalize", "--family", "pseudo-boson", "--n", "2", "--strategy", s, "a2*a1*ad2*ad1"}).out,
              run({"normalize", "--family", "pseudo-boson", "--n", "2", "a2*a1*ad2*ad1"}).out);
  }
}

TEST(Cli, DimOfExclusionAlgebra) {
  EXPECT_EQ(run({"dim", "--alg", "excl:n=2"}).out, "9\n");
  EXPECT_EQ(run({"dim", "--alg", "fermion:n=2", "--classical"}).out, "16\n");
  EXPECT_EQ(run({"dim", "--alg", "boson:n=1", "--maxlen", "3"}).out, "infinite: 10 irreducible words of length <= 3\n");
}

TEST(Cli, Brackets) {
  EXPECT_EQ(run({"bracket", "--kind", "comm", "--family", "boson", "a1", "ad1"}).out, "h\n");
  EXPECT_EQ(run({"bracket", "--kind", "poisson", "--family", "fermion", "a1", "ad1"}).out, "1\n");
  EXPECT_EQ(run({"bracket", "--kind", "comm", "--alg", "qplane:2", "x", "y"}).out, "0\n");
}

TEST(Cli, Mu) {
  EXPECT_EQ(run({"mu", "--family", "fermion", "--n", "1", "--order", "0", "a1", "ad1"}).out, "-ad1*a1\n");
  EXPECT_EQ(run({"mu", "--family", "boson", "--n", "1", "--order", "2", "a1^2", "ad1^2"}).out, "2\n");
}

TEST(Cli, VerifyPoissonPseudoFermion) {
  const Result r = run({"verify", "--suite", "poisson", "--alg", "pseudo-fermion:n=2", "--samples", "200", "--seed", "7"});
  EXPECT_EQ(r.code, 0) << r.out;
}

TEST(Cli, VerifyNoaListsEachPair) {
  const Result r = run({"verify", "--suite", "noa", "--family", "excl-dual", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(2,1)"), std::string::npos);
}

TEST(Cli, VerifyFailureExitsOne) {
  const Result r = run({"verify", "--suite", "poisson", "--family", "fermion", "--n", "2", "--factor", "eps_c",
                        "--samples", "20"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, MachineFormat) {
  const Result r = run({"--format", "machine", "verify", "--suite", "oscillator", "--family", "boson", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    const auto rec = nlohmann::json::parse(line);
    EXPECT_EQ(rec.at("suite"), "oscillator");
    EXPECT_EQ(rec.at("status"), "pass");
    EXPECT_TRUE(rec.contains("case") && rec.contains("payload"));
    ++count;
  }
  EXPECT_GT(count, 10u);
}

TEST(Cli, SuitesAreReproducible) {
  const std::vector<std::string> args{"verify", "--suite", "lie", "--alg", "cex", "--samples", "30", "--seed", "3"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, OtherSuites) {
  for (const char* suite : {"deformation", "confluence", "factor", "structure"}) {
    EXPECT_EQ(run({"verify", "--suite", suite, "--family", "pseudo-boson", "--n", "2", "--samples", "10"}).code, 0)
        << suite;
  }
  EXPECT_EQ(run({"verify", "--suite", "commutative", "--family", "boson", "--n", "2", "--classical"}).code, 0);
  EXPECT_EQ(run({"verify", "--suite", "commutative", "--family", "boson", "--n", "2"}).code, 1);
}

TEST(Cli, Confluence) {
  const Result r = run({"confluence", "--alg", "fermion:n=2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 unresolved"), std::string::npos);
}

TEST(Cli, RankCounterexample) {
  const Result r = run({"rank", "--alg", "cex", "--matrix", data("cex_exchange.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("invertible pair: yes"), std::string::npos);
  EXPECT_NE(r.out.find("{(1,0):1}"), std::string::npos);
  EXPECT_NE(r.out.find("{(0,1):1}"), std::string::npos);
  EXPECT_NE(r.out.find("not multiplicative"), std::string::npos);
}

TEST(Cli, RankRowOperation) {
  const Result r = run({"rank", "--alg", "pseudo-boson:n=2", "--classical", "--matrix", data("pseudo_boson_rowop.json")});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
}

TEST(Cli, SpecFile) {
  EXPECT_EQ(run({"normalize", "--spec", data("weyl.json"), "q*p^2"}).out, "p^2*q + 2*h*p\n");
}

TEST(Cli, ParseErrorsExitTwo) {
  const Result r = run({"normalize", "--alg", "boson:n=1", "a1 ** ad1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("offset 4"), std::string::npos);
  EXPECT_EQ(run({"normalize", "--alg", "boson:n=1", "a7"}).code, 2);
  EXPECT_EQ(run({"normalize", "--alg", "photon:n=1", "a1"}).code, 2);
  EXPECT_EQ(run({"normalize", "a1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope", "--alg", "cex"}).code, 2);
  EXPECT_EQ(run({"normalize", "--spec", "/nonexistent.json", "p"}).code, 2);
}

TEST(Cli, Presets) {
  const Result r = run({"presets"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("qplane:<q>"), std::string::npos);
}
