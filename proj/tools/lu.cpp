// lu: command-line driver for the local uniformization pipeline.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "lu/scene.hpp"

namespace {

enum Exit { kOk = 0, kError = 1, kUnsupported = 2, kBudget = 3 };

struct Options {
  std::string cmd;
  std::string scene;
  std::string b;
  std::vector<std::string> a;
  std::string oracle = "toric";
  unsigned budget = lu::kDefaultBudget;
  std::string trace;
  std::string seed;
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw lu::IoError("cannot write " + path);
  out << text;
}

void print_list(const char* head, const std::vector<std::string>& items) {
  std::cout << head << ":";
  for (const auto& s : items) std::cout << " " << s << ";";
  std::cout << "\n";
}

lu::WeightValuation first_row(const lu::Scene& s) {
  return s.nu.rank() == 1 ? s.nu : lu::truncate(s.nu, s.ring, 1);
}

lu::LocalBlowup blowup_from_flags(const lu::Scene& s, const Options& o) {
  if (o.b.empty()) throw lu::PreconditionError("--b is required");
  lu::Polynomial b = s.ring.parse(o.b);
  std::vector<lu::Polynomial> a;
  for (const auto& x : o.a) a.push_back(s.ring.parse(x));
  return lu::local_blowup(s.ring, s.nu, b, a);
}

void print_segment(const lu::Segment& seg) {
  for (const auto& st : seg.steps) {
    const auto& B = st.blowup;
    std::cout << st.label << ": b = " << lu::emit(B.b, B.source.vars(), B.nu) << ", a =";
    for (const auto& x : B.a_list) std::cout << " " << lu::emit(x, B.source.vars(), B.nu);
    std::cout << " -> " << B.chart.str() << "\n";
  }
  for (const auto& c : seg.checks)
    std::cout << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL " + c.witness) << "\n";
  print_list("ideal", lu::emit_basis(seg.ring.ideal(), seg.ring.vars(), seg.nu));
  std::cout << "ring: " << seg.ring.str() << "\n";
}

int run(const Options& o) {
  const lu::Scene s = lu::load_scene(o.scene);
  const auto& vars = s.ring.vars();

  if (o.cmd == "check") {
    std::uint64_t seed = lu::kSampleSeed;
    if (!o.seed.empty()) seed = std::stoull(o.seed, nullptr, 16);
    auto rep = lu::check_axioms(s.nu, s.ring, 200, seed);
    auto reg = lu::is_regular_local(lu::reduced_ring(s.ring));
    auto nf = lu::is_normally_flat(s.ring);
    std::cout << "ring: " << s.ring.str() << "\n";
    print_list("ideal", lu::emit_basis(s.ring.ideal(), vars, s.nu));
    print_list("center", lu::emit_basis(s.ring.center(), vars, s.nu));
    print_list("support", lu::emit_basis(s.nu.support(), vars, s.nu));
    std::cout << "valuation rank: " << s.nu.rank() << "\n";
    for (std::size_t i = 0; i < vars.size(); ++i)
      std::cout << "  nu(" << vars[i] << ") = " << s.nu.variable_values()[i].str() << "\n";
    std::cout << "axioms: " << rep.pairs << " pairs, V1 failures " << rep.v1_failures
              << ", V2 failures " << rep.v2_failures << "\n";
    std::cout << "reduced regular: " << (reg.regular ? "yes" : "no") << " (embdim " << reg.embdim
              << ", dim " << reg.krulldim << ")\n";
    std::cout << "normally flat: " << (nf.yes ? "yes N=" + std::to_string(nf.N)
                                              : "no at n=" + std::to_string(nf.first_bad_n))
              << "\n";
    return rep.v1_failures || rep.v2_failures ? kError : kOk;
  }
  if (o.cmd == "blowup") {
    auto B = blowup_from_flags(s, o);
    if (!o.trace.empty()) write_out(o.trace, lu::blowup_json(B));
    std::cout << "chart: " << B.chart.str() << "\n";
    print_list("chart ideal", lu::emit_basis(B.chart.ideal(), B.chart.vars(), B.chart_nu));
    print_list("center", lu::emit_basis(B.chart.center(), B.chart.vars(), B.chart_nu));
    std::cout << "stabilization N: " << B.stabilization_N << "\n";
    return kOk;
  }
  if (o.cmd == "step1") {
    print_segment(lu::step1_unique_associated_prime(s.ring, s.nu, o.budget));
    return kOk;
  }
  if (o.cmd == "step2") {
    print_segment(lu::step2_make_red_regular(s.ring, s.nu, first_row(s), o.budget));
    return kOk;
  }
  if (o.cmd == "step3") {
    print_segment(lu::step3_make_normally_flat(s.ring, s.nu, first_row(s), o.budget));
    return kOk;
  }
  if (o.cmd == "run") {
    auto t = lu::run_reduction(s.ring, s.nu, lu::toric_uniformizer, o.budget);
    write_out(o.trace, lu::trace_json(t));
    std::cerr << "verdict: " << lu::verdict_name(t.verdict);
    if (!t.reason.empty()) std::cerr << " (" << t.reason << ")";
    std::cerr << "\n";
    switch (t.verdict) {
      case lu::Verdict::Uniformized: return kOk;
      case lu::Verdict::Unsupported: return kUnsupported;
      case lu::Verdict::BudgetExceeded: return kBudget;
    }
  }
  if (o.cmd == "verify-lemmas") {
    auto B = blowup_from_flags(s, o);
    auto nu1 = first_row(s);
    auto rep = lu::verify_center_isos(B, nu1);
    std::cout << "compatible with nu1: " << (lu::is_compatible(B, nu1) ? "yes" : "no") << "\n";
    std::cout << "center isomorphisms: " << rep.str() << "\n";
    return !rep.precondition || rep.passed() ? kOk : kError;
  }
  throw lu::PreconditionError("unknown command " + o.cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local uniformization by reduction steps"};
  Options o;
  app.add_option("cmd", o.cmd, "check | blowup | step1 | step2 | step3 | run | verify-lemmas")
      ->required()
      ->check(CLI::IsMember({"check", "blowup", "step1", "step2", "step3", "run", "verify-lemmas"}));
  app.add_option("scene", o.scene, "scene JSON file")->required();
  app.add_option("--b", o.b, "blowup denominator b");
  app.add_option("--a", o.a, "blowup numerator a_i (repeatable)");
  app.add_option("--oracle", o.oracle, "rank-one oracle")->check(CLI::IsMember({"toric"}));
  app.add_option("--budget", o.budget, "total blowup budget");
  app.add_option("--trace", o.trace, "trace output path (run: default stdout)");
  app.add_option("--seed", o.seed, "hex seed for sampled axiom checks");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }

  try {
    return run(o);
  } catch (const lu::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const lu::UnsupportedInstance& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const lu::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
