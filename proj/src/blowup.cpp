#include "lu/blowup.hpp"

#include <algorithm>

#include "factor.hpp"
#include "lu/errors.hpp"

namespace lu {

bool IsoReport::passed() const {
  return precondition &&
         std::all_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.passed; });
}

std::string IsoReport::str() const {
  if (!precondition) return "precondition failed: " + precondition_note;
  std::string s;
  for (const auto& c : checks) {
    if (!s.empty()) s += "; ";
    s += c.name + (c.passed ? ": pass" : ": FAIL (" + c.witness + ")");
  }
  return s;
}

std::vector<Polynomial> LocalBlowup::map() const {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < source.nvars(); ++i)
    out.push_back(Polynomial::variable(i, chart.nvars(), chart.field()));
  return out;
}

VarNames chart_variable_names(const VarNames& taken, std::size_t r) {
  auto used = [&](const std::string& s) {
    return std::find(taken.begin(), taken.end(), s) != taken.end();
  };
  VarNames out;
  if (r == 1) {
    for (const char* c : {"t", "s", "w", "z"})
      if (!used(c)) return {c};
  }
  for (std::size_t k = 1; out.size() < r; ++k) {
    std::string name = "t" + std::to_string(k);
    if (!used(name) && std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

LocalBlowup local_blowup(const LocalRing& source, const WeightValuation& nu, const Polynomial& b,
                         const std::vector<Polynomial>& a_list, VarNames new_names) {
  const std::size_t n = source.nvars(), r = a_list.size(), m = n + r;
  const Field field = source.field();
  if (b.nvars() != n) throw DimensionMismatch("b lives in another ambient");
  const ValueVector vb = nu.value_of(b);
  if (vb.is_infinite()) throw SupportDivision("b = " + b.str(source.vars()) + " lies in the support");
  for (std::size_t i = 0; i < r; ++i) {
    if (a_list[i].nvars() != n) throw DimensionMismatch("a_i lives in another ambient");
    if (nu.value_of(a_list[i]) < vb)
      throw ValueInequalityViolated("nu(" + a_list[i].str(source.vars()) + ") < nu(" +
                                    b.str(source.vars()) + ")");
  }
  if (new_names.empty()) new_names = chart_variable_names(source.vars(), r);
  if (new_names.size() != r) throw DimensionMismatch("wrong number of chart variable names");

  VarNames vars = source.vars();
  vars.insert(vars.end(), new_names.begin(), new_names.end());
  std::vector<Polynomial> gens;
  for (const auto& g : source.ideal().basis()) gens.push_back(g.extended(m));
  const Polynomial bx = b.extended(m);
  for (std::size_t i = 0; i < r; ++i)
    gens.push_back(bx * Polynomial::variable(n + i, m, field) - a_list[i].extended(m));
  Saturation sat = saturation(Ideal(m, gens, field), bx);
  Ideal chart_ideal(m, sat.ideal.basis(), field);
  if (chart_ideal.is_unit()) throw PreconditionError("chart ideal is the unit ideal");

  LocalBlowup out;
  out.source = source;
  out.nu = nu;
  out.b = b;
  out.a_list = a_list;
  out.stabilization_N = sat.exponent;
  LocalRing bare = LocalRing::trusted(vars, chart_ideal, Ideal::unit(m, field));
  out.chart_nu = transport(nu, bare, b, a_list);
  Ideal center = center_ideal(out.chart_nu, bare);
  out.chart = LocalRing::trusted(vars, chart_ideal, center);
  check_centering(out.chart_nu, out.chart);
  return out;
}

namespace {

// p(x, t) with t_i = a_i / b, as (b^e * p(x, a/b)).
Polynomial pull_back(const Polynomial& p, std::size_t n, const Polynomial& b,
                     const std::vector<Polynomial>& a_list, std::uint64_t e) {
  const Field field = b.field();
  Polynomial out(n, field);
  for (const auto& t : p.terms()) {
    std::vector<std::uint32_t> xe(t.mono.exponents().begin(),
                                  t.mono.exponents().begin() + static_cast<long>(n));
    Polynomial term = Polynomial::monomial(Monomial(xe), t.coeff, field);
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < a_list.size(); ++i) {
      term *= a_list[i].pow(t.mono[n + i]);
      d += t.mono[n + i];
    }
    out += term * b.pow(static_cast<unsigned>(e - d));
  }
  return out;
}

std::uint64_t chart_degree(const Polynomial& p, std::size_t n) {
  std::uint64_t best = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t d = 0;
    for (std::size_t i = n; i < t.mono.size(); ++i) d += t.mono[i];
    best = std::max(best, d);
  }
  return best;
}

std::vector<bool> chart_mask(std::size_t n, std::size_t m) {
  std::vector<bool> drop(m, false);
  for (std::size_t i = n; i < m; ++i) drop[i] = true;
  return drop;
}

}  // namespace

LocalBlowup compose(const LocalBlowup& first, const LocalBlowup& second) {
  if (second.source.vars() != first.chart.vars() || !(second.source.ideal() == first.chart.ideal()))
    throw ChartMismatch("second blowup does not start at the first chart");
  const std::size_t n = first.source.nvars();
  const std::size_t nr = first.chart.nvars();
  std::uint64_t e = chart_degree(second.b, n);
  for (const auto& a : second.a_list) e = std::max(e, chart_degree(a, n));

  const Polynomial beta = pull_back(second.b, n, first.b, first.a_list, e);
  std::vector<Polynomial> a_list;
  for (const auto& a : first.a_list) a_list.push_back(a * beta);
  for (const auto& a : second.a_list)
    a_list.push_back(pull_back(a, n, first.b, first.a_list, e) * first.b);
  const Polynomial b = first.b * beta;

  // integer coefficients with no common content
  mpz_class den = b.denominator_lcm();
  for (const auto& a : a_list) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), a.denominator_lcm().get_mpz_t());
  Scalar scale = Scalar::from_rational(mpq_class(den), b.field());

  VarNames names(second.chart.vars().begin() + static_cast<long>(n), second.chart.vars().end());
  std::vector<Polynomial> scaled;
  for (const auto& a : a_list) scaled.push_back(a.scaled(scale));
  LocalBlowup out = local_blowup(first.source, first.nu, b.scaled(scale), scaled, names);

  if (!(out.chart.ideal() == second.chart.ideal()))
    throw IsomorphismCheckFailed("composite chart differs from the two-step chart");
  if (!(out.chart.center() == second.chart.center()))
    throw IsomorphismCheckFailed("composite center differs from the two-step center");
  (void)nr;
  return out;
}

bool is_compatible(const LocalBlowup& blowup, const WeightValuation& mu) {
  if (!mu.value_of(blowup.b).is_zero()) return false;
  return std::all_of(blowup.a_list.begin(), blowup.a_list.end(),
                     [&](const Polynomial& a) { return mu.value_of(a).positive(); });
}

bool locally_equal(const Ideal& a, const Ideal& b, const Ideal& center) {
  auto inside = [&](const Ideal& x, const Ideal& y) {
    for (const auto& g : x.basis())
      if (!y.contains(g) && center.contains(colon_ideal(y, g))) return false;
    return true;
  };
  return inside(a, b) && inside(b, a);
}

namespace {

Ideal center_of(const WeightValuation& nu1, const LocalBlowup& blowup) {
  LocalRing bare = LocalRing::trusted(blowup.chart.vars(), blowup.chart.ideal(),
                                      Ideal::unit(blowup.chart.nvars(), blowup.chart.field()));
  WeightValuation moved = transport(nu1, bare, blowup.b, blowup.a_list);
  return center_ideal(moved, bare);
}

void add(IsoReport& rep, std::string name, bool ok, std::string witness = {}) {
  rep.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(witness)});
}

// R_p -> (R1)_p1: the chart variables are fractions with denominator b
// outside p, and the contraction of the chart ideal agrees with the source
// ideal after localizing at p.
void localization_checks(IsoReport& rep, const LocalBlowup& blowup, const Ideal& p) {
  const std::size_t n = blowup.source.nvars(), m = blowup.chart.nvars();
  add(rep, "denominator outside p", !p.contains(blowup.b), "b in p");
  Ideal contraction = eliminate(blowup.chart.ideal(), chart_mask(n, m));
  add(rep, "kernel of R_p -> (R1)_p1 is zero",
      locally_equal(contraction, blowup.source.ideal().extended(m), p.extended(m)),
      "contracted chart ideal differs locally from the source ideal");
}

}  // namespace

IsoReport verify_center_isos(const LocalBlowup& blowup, const WeightValuation& nu1) {
  IsoReport rep;
  if (!is_compatible(blowup, nu1)) {
    rep.precondition = false;
    rep.precondition_note = "blowup is not compatible with nu1";
    return rep;
  }
  const std::size_t n = blowup.source.nvars(), m = blowup.chart.nvars();
  const Ideal p = center_ideal(nu1, blowup.source);
  const Ideal p1 = center_of(nu1, blowup);

  Ideal kernel = eliminate(p1, chart_mask(n, m));
  add(rep, "kernel of R -> R1/p1 equals p", kernel == p.extended(m),
      "contraction of p1 differs from p");

  bool surjective = !p1.contains(blowup.b.extended(m));
  std::string witness = surjective ? "" : "b lies in p1";
  for (std::size_t i = 0; i < blowup.a_list.size() && surjective; ++i) {
    Polynomial rel = blowup.b.extended(m) * Polynomial::variable(n + i, m, blowup.chart.field()) -
                     blowup.a_list[i].extended(m);
    if (!p1.contains(rel)) {
      surjective = false;
      witness = blowup.chart.vars()[n + i] + " is not a_i/b modulo p1";
    }
  }
  add(rep, "R/p -> R1/p1 is onto", surjective, witness);
  localization_checks(rep, blowup, p);
  return rep;
}

LiftedBlowup lift_from_localization(const LocalRing& ring, const WeightValuation& nu,
                                    const WeightValuation& nu1, const Ideal& p,
                                    const Fraction& b, const std::vector<Fraction>& a_list) {
  const std::size_t n = ring.nvars();
  const Field field = ring.field();
  std::vector<Polynomial> dens;
  auto note = [&](const Polynomial& d) {
    if (p.contains(d)) throw PreconditionError("denominator lies in p");
    if (std::find(dens.begin(), dens.end(), d) == dens.end()) dens.push_back(d);
  };
  note(b.den);
  for (const auto& a : a_list) note(a.den);
  Polynomial common = Polynomial::constant(1, n, field);
  for (const auto& d : dens) common *= d;
  auto clear = [&](const Fraction& f) { return f.num * detail::divide_exact(common, f.den); };

  const Polynomial b0 = clear(b);
  std::vector<Polynomial> a0;
  for (const auto& a : a_list) a0.push_back(clear(a));

  LiftedBlowup out;
  Polynomial bl = b0;
  std::vector<Polynomial> al = a0;
  std::size_t k = 0;
  if (!a0.empty()) {
    k = nu.argmin(a0);
    if (nu.value_of(a0[k]) < nu.value_of(b0)) {
      std::swap(bl, al[k]);
      out.swapped = true;
    }
  }
  out.blowup = local_blowup(ring, nu, bl, al);

  // The blowup of R_p with the original data, and the identification
  // t_i = t'_i / t'_k, t_k = 1 / t'_k when swapped.
  const LocalRing at_p = LocalRing::trusted(ring.vars(), ring.ideal(), p);
  const std::size_t r = a0.size(), m = n + r;
  std::vector<Polynomial> gens;
  for (const auto& g : ring.ideal().basis()) gens.push_back(g.extended(m));
  for (std::size_t i = 0; i < r; ++i)
    gens.push_back(b0.extended(m) * Polynomial::variable(n + i, m, field) - a0[i].extended(m));
  Ideal local_chart = saturation(Ideal(m, gens, field), b0.extended(m)).ideal;
  LocalRing bare = LocalRing::trusted(out.blowup.chart.vars(), local_chart, Ideal::unit(m, field));
  Ideal local_center = center_ideal(transport(nu1, bare, b0, a0), bare);

  // combined ring: x, t (local chart), t' (lifted chart)
  const std::size_t c = n + 2 * r;
  std::vector<std::size_t> to_primed(m);
  for (std::size_t i = 0; i < n; ++i) to_primed[i] = i;
  for (std::size_t i = 0; i < r; ++i) to_primed[n + i] = m + i;
  std::vector<Polynomial> comb;
  for (const auto& g : out.blowup.chart.ideal().basis()) comb.push_back(g.remapped(to_primed, c));
  auto var = [&](std::size_t i) { return Polynomial::variable(i, c, field); };
  for (std::size_t i = 0; i < r; ++i) {
    if (!out.swapped) {
      comb.push_back(var(n + i) - var(m + i));
    } else if (i == k) {
      comb.push_back(var(m + k) * var(n + k) - Polynomial::constant(1, c, field));
    } else {
      comb.push_back(var(m + k) * var(n + i) - var(m + i));
    }
  }
  std::vector<bool> drop(c, false);
  for (std::size_t i = m; i < c; ++i) drop[i] = true;
  Ideal kernel = eliminate(Ideal(c, comb, field), drop);
  std::vector<std::size_t> shrink(c, 0);
  for (std::size_t i = 0; i < m; ++i) shrink[i] = i;
  std::vector<Polynomial> back;
  for (const auto& g : kernel.basis()) back.push_back(g.remapped(shrink, m));
  add(out.report, "blowup of R_p equals the lifted chart at p1",
      locally_equal(Ideal(m, back, field), local_chart, local_center),
      "presentations differ after localizing");
  localization_checks(out.report, out.blowup, p);
  (void)at_p;
  return out;
}

LiftedBlowup lift_from_quotient(const LocalRing& ring, const WeightValuation& nu,
                                const WeightValuation& nu1, const Ideal& p,
                                const Polynomial& b, const std::vector<Polynomial>& a_list) {
  if (p.contains(b)) throw PreconditionError("representative of b lies in p");
  for (const auto& a : a_list)
    if (p.contains(a)) throw PreconditionError("representative of a_i lies in p");
  LiftedBlowup out;
  out.blowup = local_blowup(ring, nu, b, a_list);
  const std::size_t n = ring.nvars(), m = out.blowup.chart.nvars();
  const Field field = ring.field();

  std::vector<Polynomial> gens;
  for (const auto& g : p.basis()) gens.push_back(g.extended(m));
  for (std::size_t i = 0; i < a_list.size(); ++i)
    gens.push_back(b.extended(m) * Polynomial::variable(n + i, m, field) - a_list[i].extended(m));
  Ideal quotient_chart = saturation(Ideal(m, gens, field), b.extended(m)).ideal;
  Ideal p1 = center_of(nu1, out.blowup);
  add(out.report, "R1/p1 equals the blowup of R/p", p1 == quotient_chart,
      "center of nu1 on the chart differs from the quotient chart ideal");
  localization_checks(out.report, out.blowup, p);
  return out;
}

}  // namespace lu
