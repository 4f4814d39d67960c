#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>

#include "lu/errors.hpp"
#include "lu/ideal.hpp"

using namespace lu;

namespace {

const VarNames kXY{"x", "y"};
const VarNames kUVXY{"u", "v", "x", "y"};
const VarNames kUVXYT{"u", "v", "x", "y", "t"};

Ideal ideal(const VarNames& vars, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(parse_polynomial(g, vars));
  return Ideal(vars.size(), ps);
}

Polynomial P(const char* text, const VarNames& vars) { return parse_polynomial(text, vars); }

std::vector<std::string> gb(const Ideal& i, const VarNames& vars) {
  return i.basis_strings(vars);
}

// Oracle: is f a Q-linear combination of m * g_i with deg(m * g_i) <= bound?
bool in_span(const Polynomial& f, const std::vector<Polynomial>& gens, std::uint32_t bound) {
  const std::size_t n = f.nvars();
  std::vector<Polynomial> columns;
  std::vector<std::uint32_t> e(n, 0);
  for (;;) {
    Monomial m(e);
    for (const auto& g : gens)
      if (!g.is_zero() && m.degree() + g.total_degree() <= bound)
        columns.push_back(g.times_monomial(m, Scalar(1)));
    std::size_t i = 0;
    while (i < n && ++e[i] > bound) e[i++] = 0;
    if (i == n) break;
  }
  // row-reduce the columns, then reduce f against them
  std::vector<std::map<Monomial, mpq_class>> rows;
  auto to_map = [](const Polynomial& p) {
    std::map<Monomial, mpq_class> out;
    for (const auto& t : p.terms()) out[t.mono] = t.coeff.value();
    return out;
  };
  auto reduce = [&](std::map<Monomial, mpq_class> v) {
    for (const auto& r : rows) {
      const auto& pivot = *r.rbegin();
      auto it = v.find(pivot.first);
      if (it == v.end()) continue;
      mpq_class c = it->second / pivot.second;
      for (const auto& [m, a] : r) {
        v[m] -= c * a;
        if (v[m] == 0) v.erase(m);
      }
    }
    return v;
  };
  for (const auto& c : columns) {
    auto v = reduce(to_map(c));
    if (v.empty()) continue;
    // keep rows with distinct pivots; earlier rows already eliminated
    for (auto& r : rows) {
      auto it = r.find(v.rbegin()->first);
      if (it == r.end()) continue;
      mpq_class k = it->second / v.rbegin()->second;
      for (const auto& [m, a] : v) {
        r[m] -= k * a;
        if (r[m] == 0) r.erase(m);
      }
    }
    rows.push_back(std::move(v));
  }
  return reduce(to_map(f)).empty();
}

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_deg,
                       int max_terms) {
  std::uniform_int_distribution<int> nterms(1, max_terms), coef(-3, 3);
  std::uniform_int_distribution<std::uint32_t> exp(0, max_deg);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint32_t> e(nvars, 0);
    std::uint32_t budget = exp(rng);
    for (std::uint32_t d = 0; d < budget; ++d) ++e[rng() % nvars];
    terms.push_back({Monomial(e), Scalar(coef(rng))});
  }
  return Polynomial::from_terms(terms, nvars);
}

}  // namespace

TEST_CASE("groebner_basis") {
  CHECK(groebner_basis(Ideal::zero(2), MonomialOrder::degrevlex()).empty());
  CHECK(gb(ideal(kXY, {"x^2", "x*y"}), kXY) == std::vector<std::string>{"x^2", "x*y"});
  Ideal i = ideal(kUVXYT, {"x^2", "x*y", "y^2", "v*x - u*y", "v*t - y"});
  CHECK(i.contains(P("y - v*t", kUVXYT)));
  CHECK(Ideal::unit(2).basis().size() == 1);
}

TEST_CASE("reduced bases are unique and the cache is transparent") {
  Ideal a = ideal(kUVXY, {"x^2", "x*y", "y^2", "v*x - u*y"});
  Ideal b = ideal(kUVXY, {"v*x - u*y", "y^2 + x*y", "x*y", "x^2 - y^2"});
  for (const auto& ord : {MonomialOrder::lex(), MonomialOrder::degrevlex(),
                          MonomialOrder::weighted({{1, 0, 0, 0}, {0, 1, 0, 0}})}) {
    CHECK(a.basis(ord) == b.basis(ord));
    CHECK(a.basis(ord) == buchberger(a.generators(), ord));
  }
}

TEST_CASE("normal_form") {
  Ideal i = ideal(kXY, {"x^2", "x*y"});
  CHECK(normal_form(Polynomial(2), i).is_zero());
  CHECK(normal_form(P("x*y", kXY), i).is_zero());
  CHECK(normal_form(P("y^2", kXY), i) == P("y^2", kXY));
}

TEST_CASE("membership agrees with the linear-algebra oracle") {
  std::mt19937_64 rng(0xC0FFEE);
  int members = 0, others = 0;
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Polynomial> gens;
    const int ngens = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < ngens; ++k) gens.push_back(random_poly(rng, 3, 3, 3));
    Ideal i(3, gens);
    if (i.is_unit()) continue;
    for (int s = 0; s < 6; ++s) {
      Polynomial f = random_poly(rng, 3, 3, 3);
      if (s % 2 == 0) {
        f = Polynomial(3);
        for (const auto& g : gens)
          if (g.total_degree() <= 3) f += random_poly(rng, 3, 3 - static_cast<std::uint32_t>(g.total_degree()), 2) * g;
      }
      bool nf = normal_form(f, i).is_zero();
      bool oracle = in_span(f, gens, 6);
      CHECK(nf == oracle);
      (nf ? members : others)++;
    }
  }
  CHECK(members > 10);
  CHECK(others > 10);
}

TEST_CASE("colon_ideal") {
  Ideal i = ideal(kXY, {"x^2", "x*y"});
  CHECK(colon_ideal(i, Polynomial::constant(1, 2)) == i);
  CHECK(colon_ideal(i, P("x", kXY)) == ideal(kXY, {"x", "y"}));
  CHECK(colon_ideal(i, P("y", kXY)) == ideal(kXY, {"x"}));
  CHECK_THROWS_AS(colon_ideal(i, Polynomial(2)), ZeroDivisorQueryOnZero);
}

TEST_CASE("saturation") {
  auto s0 = saturation(Ideal::zero(2), P("x", kXY));
  CHECK(s0.ideal.is_zero());
  CHECK(s0.exponent == 0);

  auto s1 = saturation(ideal(kXY, {"x^2", "x*y"}), P("y", kXY));
  CHECK(s1.ideal == ideal(kXY, {"x"}));
  CHECK(s1.exponent == 1);

  Ideal i = ideal(kUVXYT, {"x^2", "x*y", "y^2", "v*x - u*y", "v*t - y"});
  auto s2 = saturation(i, P("v", kUVXYT));
  CHECK(s2.ideal == ideal(kUVXYT, {"x - u*t", "y - v*t", "t^2"}));
  CHECK(s2.exponent == 2);
  // the chain is strict below N and stable at N
  Polynomial v = P("v", kUVXYT);
  CHECK(colon_ideal(i, v.pow(2)) == colon_ideal(i, v.pow(3)));
  CHECK(!(colon_ideal(i, v) == colon_ideal(i, v.pow(2))));
}

TEST_CASE("eliminate") {
  const VarNames vyt{"v", "y", "t"};
  CHECK(eliminate(Ideal::zero(3), vyt, {"t"}).is_zero());
  CHECK(eliminate(ideal(vyt, {"v*t - y"}), vyt, {"t"}).is_zero());
  Ideal chart = ideal(kUVXYT, {"x - u*t", "y - v*t", "t^2"});
  Ideal e = eliminate(chart, kUVXYT, {"t"});
  CHECK(e == ideal(kUVXYT, {"x^2", "x*y", "y^2", "v*x - u*y"}));
  CHECK(chart.contains(e));
  for (const auto& g : e.generators()) CHECK(!g.uses_variable(4));
}

TEST_CASE("radical") {
  CHECK(radical(ideal(kXY, {"x^2", "x*y"})) == ideal(kXY, {"x"}));
  Ideal p = ideal(kUVXY, {"x", "y"});
  CHECK(radical(p) == p);
  Ideal f2 = ideal(kUVXY, {"x^2", "x*y", "y^2", "v*x - u*y"});
  Ideal r = radical(f2);
  CHECK(r == p);
  CHECK(radical(r) == r);
  CHECK(r.contains(f2));
  CHECK(radical(ideal(kXY, {"x^3 - x"})) == ideal(kXY, {"x^3 - x"}));
  CHECK(radical(ideal(kXY, {"x^2*y^3"})) == ideal(kXY, {"x*y"}));
}

TEST_CASE("associated_primes") {
  Ideal p = ideal(kUVXY, {"v*x - u*y"});
  CHECK(associated_primes(p) == std::vector<Ideal>{p});
  auto ass = associated_primes(ideal(kXY, {"x^2", "x*y"}));
  CHECK(ass == std::vector<Ideal>{ideal(kXY, {"x"}), ideal(kXY, {"x", "y"})});
  auto ass2 = associated_primes(ideal(kUVXY, {"x^2", "x*y", "y^2", "v*x - u*y"}));
  CHECK(ass2 == std::vector<Ideal>{ideal(kUVXY, {"x", "y"})});
}

TEST_CASE("primary decomposition reassembles the ideal") {
  const VarNames xyz{"x", "y", "z"};
  for (Ideal i : {ideal(kXY, {"x^2", "x*y"}), ideal(kXY, {"x^3*y", "x*y^2"}),
                  ideal(kXY, {"x^2 - y^2", "x*y - y^2"}),
                  ideal(xyz, {"x*y", "x*z", "y*z"}), ideal(xyz, {"x^2", "x*y*z"})}) {
    auto comps = primary_decomposition(i);
    std::vector<Ideal> qs, ps;
    for (const auto& c : comps) {
      qs.push_back(c.primary);
      ps.push_back(c.prime);
      CHECK(is_prime(c.prime).prime());
      CHECK(radical(c.primary) == c.prime);
    }
    CHECK(intersect(qs) == i);
    CHECK(intersect(ps) == radical(i));
  }
}

TEST_CASE("is_prime") {
  CHECK(is_prime(ideal(kXY, {"x", "y"})).prime());
  auto v = is_prime(ideal(kXY, {"x^2"}));
  REQUIRE(v.kind == PrimeVerdict::Kind::NotPrime);
  CHECK(*v.f == P("x", kXY));
  CHECK(*v.g == P("x", kXY));
  CHECK(is_prime(ideal(kUVXY, {"v*x - u*y"})).prime());
  CHECK(is_prime(ideal(kXY, {"y^2 - x^3"})).prime());
  CHECK(is_prime(ideal(kXY, {"x^2 + 1"})).prime());
  CHECK(is_prime(ideal(kXY, {"x^2 - y^2"})).kind == PrimeVerdict::Kind::NotPrime);
  CHECK(is_prime(ideal(kXY, {"x^4 + 4"})).kind == PrimeVerdict::Kind::NotPrime);
  CHECK(is_prime(ideal({"u", "x", "y"}, {"u*y - x^2"})).prime());
  CHECK_THROWS_AS(is_prime(Ideal::unit(2)), NotAProperIdeal);
  // witnesses are certified
  for (Ideal i : {ideal(kXY, {"x*y"}), ideal(kXY, {"x^2 - 2*x*y + y^2"}),
                  ideal(kUVXY, {"x^2", "x*y", "y^2", "v*x - u*y"})}) {
    auto w = is_prime(i);
    REQUIRE(w.kind == PrimeVerdict::Kind::NotPrime);
    CHECK(i.contains(*w.f * *w.g));
    CHECK(!i.contains(*w.f));
    CHECK(!i.contains(*w.g));
  }
}

TEST_CASE("krull_dimension") {
  CHECK(krull_dimension(Ideal::zero(2)) == 2);
  CHECK(krull_dimension(ideal(kXY, {"y^2 - x^3"})) == 1);
  CHECK(krull_dimension(ideal(kUVXY, {"x", "y"})) == 2);
  CHECK(krull_dimension(Ideal::unit(2)) == -1);
}

TEST_CASE("syzygies modulo an ideal") {
  Ideal f2 = ideal(kUVXY, {"x^2", "x*y", "y^2", "v*x - u*y"});
  Ideal i2 = ideal(kUVXY, {"x", "y"}).power(2) + f2;
  std::vector<Polynomial> gens{P("x", kUVXY), P("y", kUVXY)};
  auto syz = syzygies(gens, i2);
  for (const auto& s : syz) CHECK(i2.contains(s[0] * gens[0] + s[1] * gens[1]));
  // (v, -u) lies in the syzygy module
  bool found = false;
  for (const auto& s : syz) {
    Polynomial a = normal_form(s[0], ideal(kUVXY, {"x", "y"}));
    Polynomial b = normal_form(s[1], ideal(kUVXY, {"x", "y"}));
    if (a == P("v", kUVXY) && b == P("-u", kUVXY)) found = true;
    if (a == P("-v", kUVXY) && b == P("u", kUVXY)) found = true;
  }
  CHECK(found);
}

TEST_CASE("resource limits are enforced") {
  auto saved = limits();
  limits().max_spair_reductions = 2;
  Ideal hard = ideal({"x", "y", "z"}, {"x^3 - y*z", "y^3 - x*z", "z^3 - x*y", "x*y*z - 1"});
  CHECK_THROWS_AS(hard.basis(MonomialOrder::lex()), ResourceLimit);
  limits() = saved;
}
