#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lu/scene.hpp"

using namespace lu;

namespace {

const std::string kDir = LU_FIXTURES_DIR;

std::string fixture(const char* name) { return kDir + "/" + name + ".json"; }

}  // namespace

TEST_CASE("fixtures load") {
  auto f1 = load_scene(fixture("F1"));
  CHECK(f1.ring.vars() == VarNames{"x", "y"});
  CHECK(f1.nu.rank() == 1);
  CHECK(f1.nu.variable_values()[0].is_infinite());
  auto f2 = load_scene(fixture("F2"));
  CHECK(f2.nu.rank() == 2);
  auto f4 = load_scene(fixture("F4"));
  CHECK(f4.ring.ideal().is_zero());
  for (const char* n : {"F3", "F4_cusp", "cone"}) CHECK_NOTHROW(load_scene(fixture(n)));
}

TEST_CASE("scene diagnostics") {
  CHECK_THROWS_AS(load_scene(kDir + "/missing.json"), IoError);

  const std::string bad_weights = R"({
  "vars": ["x", "y"],
  "ideal": [],
  "valuation": {"weights": [[1, 2, 3]]}
})";
  try {
    parse_scene(bad_weights);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 4);
  }

  const std::string bad_poly = "{\"vars\": [\"x\"],\n \"ideal\": [\"x^\"],\n \"valuation\": {\"weights\": [[1]]}}";
  try {
    parse_scene(bad_poly);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }

  CHECK_THROWS_AS(parse_scene("{\"vars\": [\"x\"], "), SyntaxError);
  CHECK_THROWS_AS(parse_scene(R"({"vars": ["x"], "ideal": ["z"], "valuation": {"weights": [[1]]}})"),
                  SyntaxError);
  CHECK_THROWS_AS(
      parse_scene(R"({"vars": ["x"], "valuation": {"weights": [[1]], "rank": 2}})"), SyntaxError);

  // valid syntax, failing certification
  try {
    parse_scene(R"({"vars": ["x", "y"], "ideal": ["x^2", "x*y"],
                    "valuation": {"support": ["x", "y"], "weights": [[1, 1]]}})");
    FAIL("expected CertificationError");
  } catch (const CertificationError& e) {
    CHECK(e.axiom() == "V4");
  }
}

TEST_CASE("prime field scenes") {
  auto s = parse_scene(R"({"field": {"Fp": 7}, "vars": ["x", "y"], "ideal": ["y^2 - x^3"],
                           "valuation": {"weights": [[2, 3]]}})");
  CHECK(s.ring.field().p == 7);
  auto t = run_reduction(s.ring, s.nu);
  CHECK(t.verdict == Verdict::Uniformized);
}

TEST_CASE("trace round trip") {
  for (const char* n : {"F1", "F2", "F3", "F4", "F4_cusp"}) {
    auto s = load_scene(fixture(n));
    auto t = run_reduction(s.ring, s.nu);
    const std::string text = trace_json(t);
    CHECK(text == trace_json(run_reduction(s.ring, s.nu)));
    auto r = replay_trace(s, text);
    CHECK(r.final_gb == emit_basis(t.final.ideal(), t.final.vars(), t.final_nu));
    CHECK(r.final.str() == t.final.str());
  }
}

TEST_CASE("blowup step json") {
  auto s = load_scene(fixture("F2"));
  auto B = local_blowup(s.ring, s.nu, s.ring.parse("v"), {s.ring.parse("y")});
  const std::string j = blowup_json(B);
  CHECK(j.find("\"x - u*t\"") != std::string::npos);
  CHECK(j.find("Q[u,v,t]/(t^2)") != std::string::npos);
}
