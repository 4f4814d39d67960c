#include "lu/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace lu {

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Uniformized: return "Uniformized";
    case Verdict::Unsupported: return "Unsupported";
    case Verdict::BudgetExceeded: return "BudgetExceeded";
  }
  return "?";
}

MonomialOrder emission_order(const WeightValuation& nu) {
  const auto& vals = nu.variable_values();
  std::vector<std::size_t> perm(vals.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t i, std::size_t j) { return vals[i] > vals[j]; });
  std::vector<std::vector<std::int64_t>> rows;
  for (std::size_t i : perm) {
    std::vector<std::int64_t> row(vals.size(), 0);
    row[i] = 1;
    rows.push_back(std::move(row));
  }
  return MonomialOrder::weighted(std::move(rows), MonomialOrder::Base::Lex);
}

namespace {

struct Ctx {
  unsigned left = 0;
  std::vector<TraceStep> steps;

  void take() {
    if (left == 0) throw BudgetExceeded("blowup budget exhausted");
    --left;
  }
};

Polynomial clean(const Polynomial& f) {
  return f.is_zero() ? f : f.primitive(MonomialOrder::lex());
}

std::vector<Ideal> local_ass(const LocalRing& ring) {
  std::vector<Ideal> out;
  for (auto& q : associated_primes(ring.ideal()))
    if (ring.center().contains(q)) out.push_back(std::move(q));
  return out;
}

// g lies in `ideal` after localizing at `center`
bool locally_in(const Polynomial& g, const Ideal& ideal, const Ideal& center) {
  return ideal.contains(g) || !center.contains(colon_ideal(ideal, g));
}

void record(Ctx& ctx, std::string label, std::string clause, const LocalBlowup& B) {
  TraceStep s;
  s.label = std::move(label);
  s.clause = std::move(clause);
  s.blowup = B;
  const WeightValuation nu1 = B.nu.rank() == 1 ? B.nu : truncate(B.nu, B.source, 1);
  s.report = verify_center_isos(B, nu1);
  auto ass = local_ass(B.chart);
  s.ass_count = ass.size();
  s.ass_is_nilradical =
      ass.size() == 1 && locally_equal(ass[0], nilradical(B.chart), B.chart.center());
  ctx.steps.push_back(std::move(s));
}

std::string clause_for(const LocalBlowup& B, const WeightValuation& nu1) {
  return is_compatible(B, nu1) ? "nu1-compatible" : "b outside p, a_i in I";
}

Segment step1_impl(Ctx& ctx, const LocalRing& ring, const WeightValuation& nu) {
  Segment s;
  s.ring = ring;
  s.nu = nu;
  for (;;) {
    auto ass = local_ass(s.ring);
    if (!s.ass_counts.empty() && ass.size() >= s.ass_counts.back() && ass.size() > 1)
      throw HypothesisFailed("step 1 blowup did not reduce the associated primes");
    s.ass_counts.push_back(ass.size());
    if (ass.size() <= 1) break;

    std::vector<Ideal> outside;
    for (const auto& q : ass)
      if (!s.nu.support().contains(q)) outside.push_back(q);
    if (outside.empty())
      throw UnsupportedInstance("every associated prime lies in the support");
    std::sort(outside.begin(), outside.end(), ideal_less);

    std::vector<Polynomial> gens;
    for (const auto& g : outside.front().basis()) gens.push_back(clean(g));
    const std::size_t k = s.nu.argmin(gens);
    std::vector<Polynomial> a;
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (i != k) a.push_back(gens[i]);
    ctx.take();
    LocalBlowup B = local_blowup(s.ring, s.nu, gens[k], a);
    record(ctx, "ass-prime", "associated prime outside the support", B);
    s.ring = B.chart;
    s.nu = B.chart_nu;
  }
  return s;
}

// all k-subsets of 0..n-1 in lex order
void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out,
             std::vector<std::size_t>& cur, std::size_t from = 0) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

Segment trim_impl(Ctx& ctx, const LocalRing& ring, const WeightValuation& nu) {
  Segment s;
  s.ring = ring;
  s.nu = nu;
  for (;;) {
    const WeightValuation nu1 = s.nu.rank() == 1 ? s.nu : truncate(s.nu, s.ring, 1);
    const Ideal p = center_ideal(nu1, s.ring);
    const Ideal rad = nilradical(s.ring);
    const Ideal& m = s.ring.center();
    Regularity reg = is_regular_local(LocalRing::trusted(s.ring.vars(), rad, p));
    if (!reg.regular) throw HypothesisFailed("reduced ring is not regular at the center of nu1");
    const std::size_t r = static_cast<std::size_t>(reg.krulldim);

    // candidate parameters, lowest nu1-value first
    std::vector<Polynomial> cands;
    for (const auto& g : p.basis())
      if (!rad.contains(g)) cands.push_back(clean(g));
    std::stable_sort(cands.begin(), cands.end(), [&](const Polynomial& a, const Polynomial& b) {
      return nu1.value_of(a) < nu1.value_of(b);
    });

    std::vector<std::vector<std::size_t>> subs;
    std::vector<std::size_t> cur;
    subsets(cands.size(), r, subs, cur);
    std::vector<std::vector<Polynomial>> systems;
    for (const auto& sub : subs) {
      std::vector<Polynomial> y;
      for (auto i : sub) y.push_back(cands[i]);
      if (locally_equal(rad.with(y), p, p)) systems.push_back(std::move(y));
    }
    if (systems.empty()) throw HypothesisFailed("no regular system of parameters among the generators");

    const std::vector<Polynomial>* done = nullptr;
    for (const auto& y : systems)
      if (locally_equal(rad.with(y), p, m)) {
        done = &y;
        break;
      }
    if (done) {
      s.parameters = *done;
      break;
    }

    const std::vector<Polynomial>& y = systems.front();
    const Ideal spanned = rad.with(y);
    const Polynomial* extra = nullptr;
    for (const auto& g : cands)
      if (!locally_in(g, spanned, m)) {
        extra = &g;
        break;
      }
    std::vector<Polynomial> gens{*extra};
    gens.insert(gens.end(), y.begin(), y.end());
    const Polynomial* b = nullptr;
    auto syz = syzygies(gens, rad);
    for (const auto& c : syz)
      if (!p.contains(c[0])) {
        b = &c[0];
        break;
      }
    if (!b) throw HypothesisFailed("extra generator of p has no relation with a unit coefficient");
    ctx.take();
    LocalBlowup B = local_blowup(s.ring, s.nu, clean(*b), y);
    record(ctx, "trim", clause_for(B, nu1), B);
    s.ring = B.chart;
    s.nu = B.chart_nu;
  }

  // p / (p^2 + I) is free over R/p on the parameters
  const WeightValuation nu1 = s.nu.rank() == 1 ? s.nu : truncate(s.nu, s.ring, 1);
  const Ideal p = center_ideal(nu1, s.ring);
  bool free = true;
  if (!s.parameters.empty()) {
    for (const auto& c : syzygies(s.parameters, p.power(2) + nilradical(s.ring)))
      for (const auto& e : c)
        if (!p.contains(e)) free = false;
  }
  s.checks.push_back({"p/(p^2+I) free on the parameters", free, free ? "" : "relation outside p"});
  if (!free) throw HypothesisFailed("p/(p^2+I) is not free on the parameters");
  return s;
}

Segment step2_impl(Ctx& ctx, const LocalRing& ring, const WeightValuation& nu) {
  Segment s = trim_impl(ctx, ring, nu);
  const WeightValuation nu1 = s.nu.rank() == 1 ? s.nu : truncate(s.nu, s.ring, 1);
  const Ideal p = center_ideal(nu1, s.ring);
  Regularity quot = is_regular_local(LocalRing::trusted(s.ring.vars(), p, s.ring.center()));
  Regularity red = is_regular_local(reduced_ring(s.ring));
  const int r = static_cast<int>(s.parameters.size());
  s.checks.push_back({"R/p regular", quot.regular, "embdim " + std::to_string(quot.embdim)});
  s.checks.push_back({"r + t = dim", r + quot.embdim == red.krulldim,
                      std::to_string(r) + " + " + std::to_string(quot.embdim) +
                          " != " + std::to_string(red.krulldim)});
  s.checks.push_back({"reduced ring regular", red.regular, "embdim " + std::to_string(red.embdim)});
  for (auto& c : s.checks)
    if (c.passed) c.witness.clear();
  for (const auto& c : s.checks)
    if (!c.passed) throw HypothesisFailed("step 2: " + c.name + " fails (" + c.witness + ")");
  return s;
}

Segment step3_impl(Ctx& ctx, const LocalRing& ring, const WeightValuation& nu) {
  Segment s;
  s.ring = ring;
  s.nu = nu;
  for (;;) {
    NormalFlatness nf = is_normally_flat(s.ring);
    if (nf.yes) break;
    const WeightValuation nu1 = s.nu.rank() == 1 ? s.nu : truncate(s.nu, s.ring, 1);
    const Ideal p = center_ideal(nu1, s.ring);
    GradedPiecePresentation gp = graded_piece(s.ring, nf.first_bad_n);
    LocalRing at_p = LocalRing::trusted(s.ring.vars(), s.ring.ideal(), p);
    if (!is_free_at_center(gp, at_p).free)
      throw HypothesisFailed("I^" + std::to_string(gp.n) + "/I^" + std::to_string(gp.n + 1) +
                             " is not free at the center of nu1");

    // relation entry outside p of least value
    std::optional<std::size_t> best_k;
    Polynomial best;
    ValueVector best_v;
    for (const auto& col : gp.relations)
      for (std::size_t k = 0; k < col.size(); ++k) {
        if (col[k].is_zero() || p.contains(col[k])) continue;
        ValueVector v = s.nu.value_of(col[k]);
        if (!best_k || v < best_v) {
          best_k = k;
          best = col[k];
          best_v = v;
        }
      }
    if (!best_k) throw HypothesisFailed("no relation with a coefficient outside p");
    std::vector<Polynomial> a;
    for (std::size_t i = 0; i < gp.generators.size(); ++i)
      if (i != *best_k) a.push_back(clean(gp.generators[i]));
    ctx.take();
    LocalBlowup B = local_blowup(s.ring, s.nu, clean(best), a);
    record(ctx, "normal-flat", clause_for(B, nu1), B);
    s.ring = B.chart;
    s.nu = B.chart_nu;
  }
  s.checks.push_back({"normally flat", true, ""});
  return s;
}

Segment finish(Ctx& ctx, Segment s) {
  s.steps = std::move(ctx.steps);
  return s;
}

bool uniformized(const LocalRing& ring) {
  return is_regular_local(reduced_ring(ring)).regular && is_normally_flat(ring).yes;
}

struct State {
  LocalRing ring;
  WeightValuation nu;
};

bool same_ring(const LocalRing& a, const LocalRing& b) {
  return a.vars() == b.vars() && a.ideal() == b.ideal();
}

State reduce_impl(Ctx& ctx, const LocalRing& ring, const WeightValuation& nu,
                  const RankOneUniformizer& oracle, std::vector<std::size_t>* ass_seq) {
  Segment s1 = step1_impl(ctx, ring, nu);
  if (ass_seq) *ass_seq = s1.ass_counts;
  State st{s1.ring, s1.nu};

  if (st.nu.rank() == 1) {
    OracleResult o = oracle(st.ring, st.nu, ctx.left);
    if (!o.supported) throw UnsupportedInstance(o.reason);
    for (const auto& B : o.blowups) {
      if (!same_ring(B.source, st.ring)) throw ChartMismatch("oracle blowups are not consecutive");
      ctx.take();
      record(ctx, "oracle", "rank-one oracle", B);
      st = {B.chart, B.chart_nu};
    }
    return st;
  }

  // nu1 on the localization at its center
  Decomposition d = decompose(st.nu, st.ring, 1);
  LocalRing at_p = LocalRing::trusted(st.ring.vars(), st.ring.ideal(), d.center1);
  if (!is_regular_local(reduced_ring(at_p)).regular) {
    Ctx sub{ctx.left, {}};
    reduce_impl(sub, at_p, d.nu1, oracle, nullptr);
    for (const auto& step : sub.steps) {
      const LocalBlowup& S = step.blowup;
      if (S.source.vars() != st.ring.vars())
        throw UnsupportedInstance("localized chart left the lifted chart");
      const WeightValuation nu1 = truncate(st.nu, st.ring, 1);
      const Ideal p = center_ideal(nu1, st.ring);
      const Polynomial one = Polynomial::constant(1, st.ring.nvars(), st.ring.field());
      std::vector<Fraction> a;
      for (const auto& x : S.a_list) a.push_back({x, one});
      LiftedBlowup L = lift_from_localization(st.ring, st.nu, nu1, p, {S.b, one}, a);
      if (L.swapped) throw UnsupportedInstance("lift exchanged b; later local steps do not apply");
      if (!L.report.passed()) throw HypothesisFailed("lift from the localization: " + L.report.str());
      ctx.take();
      record(ctx, "regularize", "lifted from the localization at p", L.blowup);
      st = {L.blowup.chart, L.blowup.chart_nu};
    }
    d = decompose(st.nu, st.ring, 1);
  }

  // nu2 on R/p
  if (!is_regular_local(reduced_ring(d.quotient)).regular) {
    Ctx sub{ctx.left, {}};
    reduce_impl(sub, d.quotient, d.nu2, oracle, nullptr);
    for (const auto& step : sub.steps) {
      const LocalBlowup& S = step.blowup;
      if (S.source.vars() != st.ring.vars())
        throw UnsupportedInstance("quotient chart left the lifted chart");
      const WeightValuation nu1 = truncate(st.nu, st.ring, 1);
      const Ideal p = center_ideal(nu1, st.ring);
      LiftedBlowup L = lift_from_quotient(st.ring, st.nu, nu1, p, S.b, S.a_list);
      if (!L.report.passed()) throw HypothesisFailed("lift from the quotient: " + L.report.str());
      ctx.take();
      record(ctx, "regularize", "lifted from the quotient by p", L.blowup);
      st = {L.blowup.chart, L.blowup.chart_nu};
    }
  }

  Segment s2 = step2_impl(ctx, st.ring, st.nu);
  st = {s2.ring, s2.nu};
  Segment s3 = step3_impl(ctx, st.ring, st.nu);
  st = {s3.ring, s3.nu};
  if (!is_regular_local(reduced_ring(st.ring)).regular)
    throw HypothesisFailed("reduced ring stopped being regular in step 3");
  return st;
}

}  // namespace

Segment step1_unique_associated_prime(const LocalRing& ring, const WeightValuation& nu,
                                      unsigned budget) {
  Ctx ctx{budget, {}};
  return finish(ctx, step1_impl(ctx, ring, nu));
}

Segment trim_center_generators(const LocalRing& ring, const WeightValuation& nu,
                               const WeightValuation& nu1, unsigned budget) {
  if (!(nu1.weights().front() == nu.weights().front()))
    throw PreconditionError("nu1 is not the first row of nu");
  Ctx ctx{budget, {}};
  return finish(ctx, trim_impl(ctx, ring, nu));
}

Segment step2_make_red_regular(const LocalRing& ring, const WeightValuation& nu,
                               const WeightValuation& nu1, unsigned budget) {
  if (!(nu1.weights().front() == nu.weights().front()))
    throw PreconditionError("nu1 is not the first row of nu");
  Ctx ctx{budget, {}};
  return finish(ctx, step2_impl(ctx, ring, nu));
}

Segment step3_make_normally_flat(const LocalRing& ring, const WeightValuation& nu,
                                 const WeightValuation& nu1, unsigned budget) {
  if (!(nu1.weights().front() == nu.weights().front()))
    throw PreconditionError("nu1 is not the first row of nu");
  Ctx ctx{budget, {}};
  return finish(ctx, step3_impl(ctx, ring, nu));
}

OracleResult toric_uniformizer(const LocalRing& ring, const WeightValuation& nu,
                               unsigned budget) {
  OracleResult out;
  if (nu.rank() != 1) {
    out.supported = false;
    out.reason = "toric oracle needs a rank-one valuation";
    return out;
  }
  LocalRing cur = ring;
  WeightValuation cnu = nu;
  while (!uniformized(cur)) {
    std::vector<bool> occurs(cur.nvars(), false);
    for (const auto& g : cur.ideal().basis()) {
      if (g.size() > 2) {
        out.supported = false;
        out.reason = "defining ideal is not generated by monomials and binomials";
        out.blowups.clear();
        return out;
      }
      if (g.total_degree() < 2) continue;
      for (std::size_t i = 0; i < cur.nvars(); ++i)
        if (g.uses_variable(i)) occurs[i] = true;
    }
    std::vector<std::size_t> cands;
    for (std::size_t i = 0; i < cur.nvars(); ++i) {
      const ValueVector& v = cnu.variable_values()[i];
      if (occurs[i] && v.positive() && !v.is_infinite()) cands.push_back(i);
    }
    if (cands.size() < 2) {
      out.supported = false;
      out.reason = "no variable pair left for the descent";
      out.blowups.clear();
      return out;
    }
    std::stable_sort(cands.begin(), cands.end(), [&](std::size_t i, std::size_t j) {
      return cnu.variable_values()[i] < cnu.variable_values()[j];
    });
    if (out.blowups.size() >= budget) throw BudgetExceeded("toric oracle exceeded the budget");
    const std::size_t n = cur.nvars();
    LocalBlowup B = local_blowup(cur, cnu, Polynomial::variable(cands[0], n, cur.field()),
                                 {Polynomial::variable(cands[1], n, cur.field())});
    cur = B.chart;
    cnu = B.chart_nu;
    out.blowups.push_back(std::move(B));
  }
  return out;
}

ReductionTrace run_reduction(const LocalRing& ring, const WeightValuation& nu,
                             const RankOneUniformizer& oracle, unsigned budget) {
  ReductionTrace tr;
  Ctx ctx{budget, {}};
  auto last = [&]() {
    if (ctx.steps.empty()) {
      tr.final = ring;
      tr.final_nu = nu;
    } else {
      tr.final = ctx.steps.back().blowup.chart;
      tr.final_nu = ctx.steps.back().blowup.chart_nu;
    }
  };
  try {
    State st = reduce_impl(ctx, ring, nu, oracle, &tr.ass_sequence);
    tr.final = st.ring;
    tr.final_nu = st.nu;
    tr.final_regular = is_regular_local(reduced_ring(st.ring)).regular;
    tr.final_flatness = is_normally_flat(st.ring);
    if (tr.final_regular && tr.final_flatness.yes) {
      tr.verdict = Verdict::Uniformized;
    } else {
      tr.verdict = Verdict::Unsupported;
      tr.reason = "final chart is not regular and normally flat";
    }
  } catch (const BudgetExceeded& e) {
    last();
    tr.verdict = Verdict::BudgetExceeded;
    tr.reason = e.what();
  } catch (const UnsupportedInstance& e) {
    last();
    tr.verdict = Verdict::Unsupported;
    tr.reason = e.what();
  } catch (const HypothesisFailed& e) {
    last();
    tr.verdict = Verdict::Unsupported;
    tr.reason = std::string("hypothesis failed: ") + e.what();
  }
  tr.steps = std::move(ctx.steps);
  return tr;
}

}  // namespace lu
