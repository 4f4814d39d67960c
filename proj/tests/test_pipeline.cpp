#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lu/pipeline.hpp"

using namespace lu;

namespace {

Ideal ideal(const VarNames& vars, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, vars));
  return Ideal(vars.size(), ps);
}

const VarNames kXY{"x", "y"};
const VarNames kUVXY{"u", "v", "x", "y"};
const VarNames kUXY{"u", "x", "y"};

LocalRing f1() { return LocalRing(kXY, ideal(kXY, {"x^2", "x*y"}), ideal(kXY, {"x", "y"})); }
LocalRing f2() {
  return LocalRing(kUVXY, ideal(kUVXY, {"x^2", "x*y", "y^2", "v*x - u*y"}),
                   ideal(kUVXY, {"u", "v", "x", "y"}));
}
LocalRing f3() { return LocalRing(kUXY, ideal(kUXY, {"u*y - x^2"}), ideal(kUXY, {"u", "x", "y"})); }
LocalRing cusp() { return LocalRing(kXY, ideal(kXY, {"y^2 - x^3"}), ideal(kXY, {"x", "y"})); }

WeightValuation nu_f1() { return certify_weight_valuation(f1(), ideal(kXY, {"x"}), {{0, 1}}); }
WeightValuation nu_f2() {
  return certify_weight_valuation(f2(), ideal(kUVXY, {"x", "y"}), {{1, 0, 0, 0}, {0, 1, 0, 0}});
}
WeightValuation nu_f3() {
  return certify_weight_valuation(f3(), Ideal::zero(3), {{0, 1, 2}, {1, 1, 1}});
}
WeightValuation nu_cusp() { return certify_weight_valuation(cusp(), Ideal::zero(2), {{2, 3}}); }

std::vector<std::string> emitted(const LocalRing& ring, const WeightValuation& nu) {
  return ring.ideal().basis_strings(ring.vars(), emission_order(nu));
}

}  // namespace

TEST_CASE("step 1 on F1") {
  auto s = step1_unique_associated_prime(f1(), nu_f1());
  REQUIRE(s.steps.size() == 1);
  CHECK(s.steps[0].label == "ass-prime");
  CHECK(s.steps[0].blowup.b == f1().parse("y"));
  CHECK(s.ass_counts == std::vector<std::size_t>{2, 1});
  CHECK(s.steps[0].ass_is_nilradical);
  CHECK(is_regular_local(reduced_ring(s.ring)).regular);
}

TEST_CASE("step 1 is trivial on a prime") {
  auto s = step1_unique_associated_prime(f3(), nu_f3());
  CHECK(s.steps.empty());
  CHECK(s.ass_counts == std::vector<std::size_t>{1});
}

TEST_CASE("trim on F3") {
  auto nu = nu_f3();
  auto nu1 = truncate(nu, f3(), 1);
  auto s = step2_make_red_regular(f3(), nu, nu1);
  REQUIRE(s.steps.size() == 1);
  CHECK(s.steps[0].label == "trim");
  CHECK(s.steps[0].blowup.b == f3().parse("u"));
  CHECK(s.steps[0].blowup.a_list == std::vector<Polynomial>{f3().parse("x")});
  REQUIRE(s.parameters.size() == 1);
  CHECK(normal_form(s.parameters[0], s.ring.ideal()).str(s.ring.vars()) == "t");
  for (const auto& c : s.checks) CHECK_MESSAGE(c.passed, c.name);
}

TEST_CASE("step 3 on F2") {
  auto nu = nu_f2();
  auto nu1 = truncate(nu, f2(), 1);
  auto s = step3_make_normally_flat(f2(), nu, nu1);
  REQUIRE(s.steps.size() == 1);
  const auto& B = s.steps[0].blowup;
  CHECK(B.b == f2().parse("v"));
  CHECK(B.a_list == std::vector<Polynomial>{f2().parse("y")});
  CHECK(s.steps[0].clause == "nu1-compatible");
  CHECK(s.steps[0].report.passed());
  CHECK(emitted(s.ring, s.nu) == std::vector<std::string>{"x - u*t", "y - v*t", "t^2"});
  auto nf = is_normally_flat(s.ring);
  CHECK(nf.yes);
  CHECK(nf.N == 2);
}

TEST_CASE("toric oracle on the cusp") {
  auto o = toric_uniformizer(cusp(), nu_cusp());
  CHECK(o.supported);
  CHECK(!o.blowups.empty());
  CHECK(o.blowups.size() <= 3);
  CHECK(is_regular_local(o.blowups.back().chart).regular);

  LocalRing plane(kXY, Ideal::zero(2), ideal(kXY, {"x", "y"}));
  auto mono = certify_weight_valuation(plane, Ideal::zero(2), {{2, 3}});
  CHECK(toric_uniformizer(plane, mono).blowups.empty());

  const VarNames xyz{"x", "y", "z"};
  LocalRing cone(xyz, ideal(xyz, {"x*y - z^2 - x*z"}), ideal(xyz, {"x", "y", "z"}));
  auto w = certify_weight_valuation(cone, Ideal::zero(3), {{1, 1, 1}});
  auto u = toric_uniformizer(cone, w);
  CHECK(!u.supported);
  CHECK(!u.reason.empty());
}

TEST_CASE("run_reduction on the fixtures") {
  auto t1 = run_reduction(f1(), nu_f1());
  CHECK(t1.verdict == Verdict::Uniformized);
  CHECK(t1.steps.size() == 1);
  CHECK(t1.ass_sequence == std::vector<std::size_t>{2, 1});

  auto t2 = run_reduction(f2(), nu_f2());
  CHECK_MESSAGE(t2.verdict == Verdict::Uniformized, t2.reason);
  REQUIRE(t2.steps.size() == 1);
  CHECK(t2.steps[0].label == "normal-flat");
  CHECK(t2.final.str() == "Q[u,v,t]/(t^2)");
  CHECK(t2.final_flatness.N == 2);

  auto t3 = run_reduction(f3(), nu_f3());
  CHECK_MESSAGE(t3.verdict == Verdict::Uniformized, t3.reason);
  REQUIRE(t3.steps.size() == 1);
  CHECK(t3.steps[0].label == "trim");

  auto t4 = run_reduction(cusp(), nu_cusp());
  CHECK(t4.verdict == Verdict::Uniformized);
  CHECK(t4.steps.size() <= 3);

  for (const auto* t : {&t1, &t2, &t3, &t4})
    for (const auto& s : t->steps) {
      CHECK(s.ass_count == 1);
      CHECK(s.ass_is_nilradical);
    }
}

TEST_CASE("budget and unsupported verdicts") {
  auto t = run_reduction(f1(), nu_f1(), toric_uniformizer, 0);
  CHECK(t.verdict == Verdict::BudgetExceeded);

  const VarNames xyz{"x", "y", "z"};
  LocalRing cone(xyz, ideal(xyz, {"x*y - z^2 - x*z"}), ideal(xyz, {"x", "y", "z"}));
  auto w = certify_weight_valuation(cone, Ideal::zero(3), {{1, 1, 1}});
  auto u = run_reduction(cone, w);
  CHECK(u.verdict == Verdict::Unsupported);
  CHECK(!u.reason.empty());
}

TEST_CASE("regular input needs no blowups") {
  LocalRing plane(kXY, Ideal::zero(2), ideal(kXY, {"x", "y"}));
  auto nu = certify_weight_valuation(plane, Ideal::zero(2), {{1, 1}});
  auto t = run_reduction(plane, nu);
  CHECK(t.verdict == Verdict::Uniformized);
  CHECK(t.steps.empty());
}
