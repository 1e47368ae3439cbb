#include <gtest/gtest.h>

#include "epsalg/epsalg.hpp"

using namespace epsalg;

namespace {

const char* kCounterexample = R"json({
  "name": "cex-from-file",
  "moduli": [2, 2],
  "generators": [
    {"name": "x", "grade": [1, 0]}, {"name": "X", "grade": [1, 0]},
    {"name": "y", "grade": "(0,1)"}, {"name": "Y", "grade": [0, 1]}
  ],
  "factor": "counterexample",
  "rules": ["x*X -> 1", "X*x -> 1", "y*Y -> 1", "Y*y -> 1",
            "y*x -> -x*y", "Y*x -> -x*Y", "y*X -> -X*y", "Y*X -> -X*Y"]
})json";

}  // namespace

TEST(SpecFile, LoadsCounterexample) {
  const Algebra a = load_spec_text(kCounterexample);
  EXPECT_EQ(a.name(), "cex-from-file");
  EXPECT_TRUE(a.system().check_confluence().empty());
  const Algebra preset = build_counterexample();
  const Evaluator ea(a), ep(preset);
  for (const char* s : {"y*x*Y*X", "Y*X*y", "x*y*X*Y"}) {
    EXPECT_EQ(a.format(a.normalize(ea(s))), preset.format(preset.normalize(ep(s))));
  }
}

TEST(SpecFile, WeylAlgebraWithCustomFactor) {
  const Algebra a = load_spec_text(R"({
    "generators": [{"name": "p", "grade": [1]}, {"name": "q", "grade": [-1]}],
    "factor": {"base": -1, "form": [[0]]},
    "rules": ["q*p -> p*q + h"]
  })");
  EXPECT_TRUE(a.symbolic());
  const Evaluator eval(a);
  EXPECT_EQ(a.format(a.normalize(eval("q*p*p"))), "p^2*q + 2*h*p");
}

TEST(SpecFile, FixedH) {
  const Algebra a = load_spec_text(R"({
    "generators": [{"name": "p", "grade": [1]}, {"name": "q", "grade": [-1]}],
    "factor": "eps_c",
    "rules": ["q*p -> p*q + h^2"],
    "h": "1/2"
  })");
  EXPECT_FALSE(a.symbolic());
  EXPECT_EQ(a.format(a.normalize(Evaluator(a)("q*p"))), "p*q + 1/4");
}

TEST(SpecFile, ValidationErrors) {
  EXPECT_THROW(load_spec_text("{"), SpecError);
  EXPECT_THROW(load_spec_text(R"({"generators": []})"), SpecError);
  EXPECT_THROW(load_spec_text(R"({"generators": [{"name": "x", "grade": [1]}], "rules": ["x*x = 0"]})"), SpecError);
  EXPECT_THROW(load_spec_text(R"({"generators": [{"name": "x", "grade": [1]}], "rules": ["x*z -> 0"]})"), SpecError);
  // Inhomogeneous right side.
  EXPECT_THROW(load_spec_text(R"({"generators": [{"name": "x", "grade": [1]}], "rules": ["x*x -> x"]})"), SpecError);
  // Left side with a coefficient.
  EXPECT_THROW(load_spec_text(R"({"generators": [{"name": "x", "grade": [1]}], "rules": ["2*x*x -> 0"]})"), SpecError);
  EXPECT_THROW(load_spec_text(R"({"generators": [{"name": "x", "grade": [1]}], "factor": "eps_z"})"), SpecError);
  EXPECT_THROW(load_spec_file("/nonexistent/spec.json"), SpecError);
}
