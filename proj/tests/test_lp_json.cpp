#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "declab/errors.hpp"
#include "declab/linear_program.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace declab;

namespace {

LinearProgram sample() {
  LinearProgram lp;
  lp.add_variable("x", VarSign::NonNegative);
  lp.add_variable("t", VarSign::Free);
  lp.add_constraint("cap", {{"x", Rat(1)}}, Rel::Le, Rat(3));
  lp.add_constraint("link", {{"t", Rat(1)}, {"x", Rat(-2, 3)}}, Rel::Eq, Rat(-1, 2));
  lp.add_constraint("floor", {{"t", Rat(1)}}, Rel::Ge, Rat(-5));
  lp.set_objective({{"t", Rat(1)}, {"x", Rat(1, 7)}});
  return lp;
}

}  // namespace

TEST_CASE("builder validation") {
  LinearProgram lp;
  lp.add_variable("x", VarSign::NonNegative);
  CHECK_THROWS_AS(lp.add_variable("x", VarSign::Free), MalformedProgram);
  CHECK_THROWS_AS(lp.add_variable("", VarSign::Free), MalformedProgram);
  CHECK_THROWS_AS(lp.add_constraint("c", {{"y", Rat(1)}}, Rel::Le, Rat(0)), MalformedProgram);
  lp.add_constraint("c", {{"x", Rat(1)}}, Rel::Le, Rat(0));
  CHECK_THROWS_AS(lp.add_constraint("c", {{"x", Rat(2)}}, Rel::Le, Rat(1)), MalformedProgram);
  CHECK_THROWS_AS(lp.var_index("missing"), MissingVariable);
  CHECK(lp.has_var("x"));
  CHECK(!lp.has_var("y"));
}

TEST_CASE("zero coefficients are not stored") {
  LinearProgram lp;
  lp.add_variable("x", VarSign::NonNegative);
  lp.add_variable("y", VarSign::NonNegative);
  lp.add_constraint("c", {{"x", Rat(1)}, {"y", Rat(0)}}, Rel::Le, Rat(1));
  CHECK(lp.constraint("c").coeffs.size() == 1);
}

TEST_CASE("json round trip preserves everything") {
  const LinearProgram lp = sample();
  const std::string text = lp.to_json();
  const LinearProgram back = LinearProgram::from_json(text);
  CHECK(back.to_json() == text);
  CHECK(back.vars().size() == 2);
  CHECK(back.vars()[1].sign == VarSign::Free);
  CHECK(back.constraints().size() == 3);
  CHECK(back.constraint("link").rel == Rel::Eq);
  CHECK(back.constraint("link").rhs == Rat(-1, 2));
  CHECK(back.constraint("link").coeffs.at(back.var_index("x")) == Rat(-2, 3));
}

TEST_CASE("json shape matches the documented schema") {
  const auto doc = nlohmann::json::parse(sample().to_json());
  REQUIRE(doc.contains("vars"));
  REQUIRE(doc.contains("constraints"));
  REQUIRE(doc.contains("objective"));
  CHECK(doc["vars"][0]["name"] == "x");
  CHECK(doc["vars"][0]["sign"] == "nonnegative");
  CHECK(doc["vars"][1]["sign"] == "free");
  const auto& con = doc["constraints"][1];
  CHECK(con["label"] == "link");
  CHECK(con["rel"] == "=");
  CHECK(con["rhs"] == "-1/2");
  CHECK(con["coeffs"]["x"] == "-2/3");
  CHECK(doc["objective"]["sense"] == "max");
  CHECK(doc["objective"]["coeffs"]["x"] == "1/7");
}

TEST_CASE("from_json rejects malformed input") {
  CHECK_THROWS_AS(LinearProgram::from_json("not json"), MalformedProgram);
  CHECK_THROWS_AS(LinearProgram::from_json("{}"), MalformedProgram);
  CHECK_THROWS_AS(LinearProgram::from_json(R"({"vars":[{"name":"x","sign":"bogus"}],)"
                                           R"("constraints":[],"objective":{"coeffs":{},"sense":"max"}})"),
                  MalformedProgram);
  CHECK_THROWS_AS(LinearProgram::from_json(R"({"vars":[{"name":"x","sign":"free"}],)"
                                           R"("constraints":[],"objective":{"coeffs":{},"sense":"min"}})"),
                  MalformedProgram);
  CHECK_THROWS_AS(
      LinearProgram::from_json(R"({"vars":[{"name":"x","sign":"free"}],"constraints":[)"
                               R"({"label":"c","coeffs":{"y":"1"},"rel":"<=","rhs":"0"}],)"
                               R"("objective":{"coeffs":{},"sense":"max"}})"),
      MalformedProgram);
  CHECK_THROWS_AS(
      LinearProgram::from_json(R"({"vars":[{"name":"x","sign":"free"}],"constraints":[)"
                               R"({"label":"c","coeffs":{"x":"1.5"},"rel":"<=","rhs":"0"}],)"
                               R"("objective":{"coeffs":{},"sense":"max"}})"),
      MalformedProgram);
}
