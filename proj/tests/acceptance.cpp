// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "lu/scene.hpp"
#include "oracles.hpp"

using namespace lu;

namespace {

const std::string kDir = LU_FIXTURES_DIR;
const std::vector<std::string> kFixtures{"F1", "F2", "F3", "F4", "F4_cusp"};

Scene scene(const std::string& name) { return load_scene(kDir + "/" + name + ".json"); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::string join(const std::vector<std::string>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
  return s + "}";
}

Outcome c1() {
  Outcome o;
  auto s = scene("F1");
  auto t0 = std::chrono::steady_clock::now();
  auto t = run_reduction(s.ring, s.nu);
  const double dt = seconds_since(t0);
  o.require(dt < 5, "took " + std::to_string(dt) + " s");
  o.require(t.verdict == Verdict::Uniformized, "verdict " + verdict_name(t.verdict));
  o.require(t.steps.size() == 1, std::to_string(t.steps.size()) + " blowups");
  if (t.steps.size() == 1) {
    const auto& st = t.steps[0];
    o.require(st.label == "ass-prime", "label " + st.label);
    o.require(emit(st.blowup.b, s.ring.vars(), s.nu) == "y", "b is not y");
  }
  auto reduced = emit_basis(nilradical(s.ring), s.ring.vars(), s.nu);
  o.require(reduced == std::vector<std::string>{"x"}, "reduced GB " + join(reduced));
  auto gb = emit_basis(t.final.ideal(), t.final.vars(), t.final_nu);
  o.require(gb == std::vector<std::string>{"x", "t"}, "chart GB " + join(gb));
  o.require(t.final.str() == "Q[y]" && is_regular_local(t.final).regular,
            "final chart " + t.final.str() + " is not a regular ring in one variable");
  o.require(t.ass_sequence == std::vector<std::size_t>{2, 1}, "|Ass| sequence");
  o.detail = o.pass ? "1 ass-prime blowup b = y, chart GB " + join(gb) + ", |Ass| [2, 1]" : o.detail;
  return o;
}

Outcome c2() {
  Outcome o;
  auto s = scene("F2");
  auto t0 = std::chrono::steady_clock::now();
  auto t = run_reduction(s.ring, s.nu);
  const double dt = seconds_since(t0);
  o.require(dt < 30, "took " + std::to_string(dt) + " s");
  o.require(t.verdict == Verdict::Uniformized, "verdict " + verdict_name(t.verdict));
  o.require(t.steps.size() == 1, std::to_string(t.steps.size()) + " blowups");
  if (t.steps.size() == 1) {
    const auto& B = t.steps[0].blowup;
    o.require(t.steps[0].label == "normal-flat", "label " + t.steps[0].label);
    o.require(emit(B.b, s.ring.vars(), s.nu) == "v" && B.a_list.size() == 1 &&
                  emit(B.a_list[0], s.ring.vars(), s.nu) == "y",
              "blowup is not along (v, y)");
  }
  auto gb = emit_basis(t.final.ideal(), t.final.vars(), t.final_nu);
  o.require(gb == std::vector<std::string>{"x - u*t", "y - v*t", "t^2"}, "chart GB " + join(gb));
  auto nf = is_normally_flat(t.final);
  o.require(nf.yes && nf.N == 2, "not normally flat with N = 2");
  o.require(is_regular_local(reduced_ring(t.final)).regular, "reduced chart not regular");
  if (o.pass) o.detail = "normal-flat blowup along (v, y), chart GB " + join(gb) + ", Yes(N=2)";
  return o;
}

Outcome c3() {
  Outcome o;
  auto s = scene("F3");
  auto nu1 = truncate(s.nu, s.ring, 1);
  auto seg = step2_make_red_regular(s.ring, s.nu, nu1);
  o.require(seg.steps.size() == 1, std::to_string(seg.steps.size()) + " blowups in step 2");
  if (seg.steps.size() == 1) {
    const auto& B = seg.steps[0].blowup;
    o.require(seg.steps[0].label == "trim", "label " + seg.steps[0].label);
    o.require(emit(B.b, s.ring.vars(), s.nu) == "u" && B.a_list.size() == 1 &&
                  emit(B.a_list[0], s.ring.vars(), s.nu) == "x",
              "blowup is not along (u, x)");
  }
  const Ideal p1 = center_ideal(truncate(seg.nu, seg.ring, 1), seg.ring);
  o.require(seg.parameters.size() == 1, "center needs " + std::to_string(seg.parameters.size()) +
                                            " generators");
  std::string gen;
  if (seg.parameters.size() == 1) {
    o.require(seg.ring.ideal().with(seg.parameters[0]) == p1, "parameter does not generate p1");
    gen = normal_form(seg.parameters[0], seg.ring.ideal()).str(seg.ring.vars());
    o.require(gen == "t", "principal generator " + gen);
  }
  for (const auto& c : seg.checks) o.require(c.passed, c.name + ": " + c.witness);
  auto reg = is_regular_local(reduced_ring(seg.ring));
  o.require(reg.regular, "reduced chart not regular");
  if (o.pass)
    o.detail = "trim along (u, x), p1 = (" + gen + "), r + t = " + std::to_string(reg.krulldim);
  return o;
}

Outcome c4() {
  Outcome o;
  auto s = scene("F4_cusp");
  auto t0 = std::chrono::steady_clock::now();
  auto t = run_reduction(s.ring, s.nu, toric_uniformizer);
  const double dt = seconds_since(t0);
  auto plane = scene("F4");
  auto tp = run_reduction(plane.ring, plane.nu, toric_uniformizer);
  o.require(dt < 5, "took " + std::to_string(dt) + " s");
  o.require(t.verdict == Verdict::Uniformized, "verdict " + verdict_name(t.verdict));
  o.require(t.steps.size() <= 3, std::to_string(t.steps.size()) + " blowups");
  o.require(is_regular_local(t.final).regular, "final chart fails the Jacobian criterion");
  o.require(tp.verdict == Verdict::Uniformized, "F4 plane not uniformized");
  if (o.pass)
    o.detail = std::to_string(t.steps.size()) + " blowup(s), final " + t.final.str();
  return o;
}

// b, a: monomials in the variables of `ring` with nu(a) >= nu(b)
std::pair<Polynomial, Polynomial> random_pair(std::mt19937_64& rng, const LocalRing& ring,
                                              const WeightValuation& nu) {
  const std::size_t n = ring.nvars();
  std::vector<std::size_t> finite;
  for (std::size_t i = 0; i < n; ++i)
    if (!nu.variable_values()[i].is_infinite() && !normal_form(Polynomial::variable(i, n, ring.field()), ring.ideal()).is_zero())
      finite.push_back(i);
  auto mono = [&]() {
    std::size_t i = finite[rng() % finite.size()];
    unsigned e = 1 + static_cast<unsigned>(rng() % 2);
    return Polynomial::variable(i, n, ring.field()).pow(e);
  };
  for (;;) {
    Polynomial b = mono(), a = mono();
    if (a == b) continue;
    if (nu.value_of(a) < nu.value_of(b)) std::swap(a, b);
    return {b, a};
  }
}

Outcome c5() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937_64 rng(kSampleSeed);
  const VarNames xy{"x", "y"};
  int ok = 0, done = 0;
  while (done < 20) {
    const bool cusp = rng() % 2;
    LocalRing ring(xy, cusp ? Ideal(2, {parse_polynomial("y^2 - x^3", xy)}) : Ideal::zero(2),
                   Ideal(2, {parse_polynomial("x", xy), parse_polynomial("y", xy)}));
    std::vector<std::int64_t> w;
    if (cusp) {
      const std::int64_t k = 1 + static_cast<std::int64_t>(rng() % 3);
      w = {2 * k, 3 * k};
    } else {
      w = {1 + static_cast<std::int64_t>(rng() % 6), 1 + static_cast<std::int64_t>(rng() % 6)};
    }
    auto nu = certify_weight_valuation(ring, Ideal::zero(2), {w}, 0);
    auto [b1, a1] = random_pair(rng, ring, nu);
    auto B1 = local_blowup(ring, nu, b1, {a1});
    auto [b2, a2] = random_pair(rng, B1.chart, B1.chart_nu);
    auto B2 = local_blowup(B1.chart, B1.chart_nu, b2, {a2}, {"s"});
    ++done;
    try {
      auto C = compose(B1, B2);
      const bool iso = C.chart.ideal().contains(B2.chart.ideal()) &&
                       B2.chart.ideal().contains(C.chart.ideal());
      if (iso) ++ok;
      else o.require(false, "pair " + std::to_string(done) + " not isomorphic");
    } catch (const Error& e) {
      o.require(false, "pair " + std::to_string(done) + ": " + e.what());
    }
  }
  const double dt = seconds_since(t0);
  o.require(dt < 60, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(ok) + "/20 composites isomorphic";
  return o;
}

std::vector<std::pair<Scene, ReductionTrace>>& traces() {
  static std::vector<std::pair<Scene, ReductionTrace>> all = [] {
    std::vector<std::pair<Scene, ReductionTrace>> v;
    for (const auto& f : kFixtures) {
      auto s = scene(f);
      auto t = run_reduction(s.ring, s.nu);
      v.emplace_back(std::move(s), std::move(t));
    }
    return v;
  }();
  return all;
}

Outcome c6() {
  Outcome o;
  int compatible = 0;
  for (const auto& [s, t] : traces())
    for (const auto& st : t.steps) {
      if (!st.report.precondition) continue;
      ++compatible;
      // recompute rather than trust the recorded report
      const auto& B = st.blowup;
      auto nu1 = B.nu.rank() == 1 ? B.nu : truncate(B.nu, B.source, 1);
      auto rep = verify_center_isos(B, nu1);
      o.require(rep.passed() && st.report.passed(), "step " + st.label + ": " + rep.str());
    }
  o.require(compatible > 0, "no nu1-compatible blowups were generated");
  if (o.pass) o.detail = std::to_string(compatible) + " compatible blowup(s), 0 failures";
  return o;
}

bool unique_ass_is_nilradical(const LocalRing& ring) {
  std::vector<Ideal> ass;
  for (auto& q : associated_primes(ring.ideal()))
    if (ring.center().contains(q)) ass.push_back(q);
  return ass.size() == 1 && locally_equal(ass[0], nilradical(ring), ring.center());
}

Outcome c7() {
  Outcome o;
  int charts = 0;
  for (const auto& [s, t] : traces()) {
    std::vector<LocalRing> rings;
    std::size_t step1 = 0;
    while (step1 < t.steps.size() && t.steps[step1].label == "ass-prime") ++step1;
    if (step1 == 0) rings.push_back(s.ring);
    for (const auto& st : t.steps) {
      rings.push_back(st.blowup.chart);
      o.require(st.ass_count == 1 && st.ass_is_nilradical, "recorded violation at " + st.label);
    }
    for (const auto& r : rings) {
      ++charts;
      o.require(unique_ass_is_nilradical(r), "chart " + r.str() + " has another associated prime");
    }
  }
  if (o.pass) o.detail = std::to_string(charts) + " charts, 0 violations";
  return o;
}

Outcome c8() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  int n = 0;
  for (const auto& f : kFixtures) {
    auto s = scene(f);
    auto rep = check_axioms(s.nu, s.ring, 200);
    ++n;
    o.require(rep.pairs == 200, f + ": only " + std::to_string(rep.pairs) + " pairs");
    o.require(rep.v1_failures == 0 && rep.v2_failures == 0, f + ": " + rep.first_failure);
  }
  const double dt = seconds_since(t0);
  o.require(dt < 10, "took " + std::to_string(dt) + " s");
  if (o.pass) o.detail = std::to_string(n) + " valuations x 200 pairs, 0 violations";
  return o;
}

Outcome c9() {
  Outcome o;
  int modules = 0, ideals = 0;
  std::vector<LocalRing> rings;
  for (const auto& [s, t] : traces()) {
    rings.push_back(s.ring);
    for (const auto& st : t.steps) rings.push_back(st.blowup.chart);
    // the same rings at the center of nu1
    if (s.nu.rank() > 1) {
      auto nu1 = truncate(s.nu, s.ring, 1);
      rings.push_back(LocalRing::trusted(s.ring.vars(), s.ring.ideal(), center_ideal(nu1, s.ring)));
    }
  }
  for (const auto& r : rings) {
    const unsigned N = nilpotency_index(r);
    for (unsigned n = 1; n < N; ++n) {
      auto m = graded_piece(r, n);
      if (m.generators.size() > 3) continue;
      auto lib = is_free_at_center(m, r);
      auto ref = oracle::freeness_by_basis_enumeration(m, r);
      ++modules;
      o.require(lib.free == ref.free && (!lib.free || lib.rank == ref.rank),
                "freeness mismatch on " + r.str() + " n = " + std::to_string(n));
    }
    auto ass = associated_primes(r.ideal());
    Ideal meet = ass.front();
    for (std::size_t i = 1; i < ass.size(); ++i) meet = intersect(meet, ass[i]);
    ++ideals;
    o.require(meet == radical(r.ideal()), "associated primes of " + r.str() + " miss the radical");
  }
  o.require(modules > 0, "no modules checked");
  if (o.pass)
    o.detail = std::to_string(modules) + " modules, " + std::to_string(ideals) + " ideals, 0 mismatches";
  return o;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome c10() {
  Outcome o;
  const std::string dir = LU_WORK_DIR;
  for (const auto& f : kFixtures) {
    std::string out[2];
    for (int k = 0; k < 2; ++k) {
      const std::string path = dir + "/determinism_" + f + "_" + std::to_string(k) + ".json";
      std::remove(path.c_str());
      const std::string cmd = std::string("\"") + LU_CLI_PATH + "\" run \"" + kDir + "/" + f +
                              ".json\" --trace \"" + path + "\" 2>/dev/null";
      const int rc = std::system(cmd.c_str());
      o.require(rc == 0, f + ": lu run failed");
      out[k] = slurp(path);
    }
    o.require(!out[0].empty() && out[0] == out[1], f + ": traces differ");
  }
  if (o.pass) o.detail = std::to_string(kFixtures.size()) + " fixtures, byte-identical traces";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"F1 end-to-end", c1},
      {"F2 end-to-end", c2},
      {"F3 trim", c3},
      {"F4 cusp with the toric oracle", c4},
      {"composition suite", c5},
      {"center isomorphism suite", c6},
      {"unique associated prime invariant", c7},
      {"valuation axiom suite", c8},
      {"oracle cross-checks", c9},
      {"determinism", c10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    if (!o.pass) ++failed;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": "
              << o.detail << std::endl;
  }
  return failed ? 1 : 0;
}
