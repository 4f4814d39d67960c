#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lu/errors.hpp"
#include "lu/polynomial.hpp"

using namespace lu;

namespace {

const VarNames kXY{"x", "y"};
const VarNames kUVXY{"u", "v", "x", "y"};

Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars) {
  std::uniform_int_distribution<int> nterms(0, 6), exp(0, 3), num(-9, 9), den(1, 4);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint32_t> e(nvars);
    for (auto& v : e) v = static_cast<std::uint32_t>(exp(rng));
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    terms.push_back({Monomial(e), Scalar::from_rational(c)});
  }
  return Polynomial::from_terms(terms, nvars);
}

std::vector<Monomial> all_monomials(std::size_t nvars, std::uint32_t max_degree) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(nvars, 0);
  for (;;) {
    std::uint32_t d = 0;
    for (auto v : e) d += v;
    if (d <= max_degree) out.emplace_back(e);
    std::size_t i = 0;
    while (i < nvars && ++e[i] > max_degree) e[i++] = 0;
    if (i == nvars) break;
  }
  return out;
}

}  // namespace

TEST_CASE("scalar arithmetic is exact and canonical") {
  Scalar a = Scalar::from_rational(mpq_class(2, 4));
  CHECK(a.value().get_num() == 1);
  CHECK(a.value().get_den() == 2);
  Scalar b = Scalar::from_rational(mpq_class(-1, 3));
  CHECK((a + b).str() == "1/6");
  CHECK((a / b).str() == "-3/2");
  CHECK((a * a.inverse()).is_one());

  Field f7{7};
  Scalar r(5, f7);
  CHECK((r + Scalar(4, f7)).str() == "2");
  CHECK((r * r.inverse()).is_one());
  CHECK((Scalar(3, f7) - Scalar(5, f7)).str() == "5");
}

TEST_CASE("field axioms over F_p on all triples") {
  Field f{5};
  for (long x = 0; x < 5; ++x)
    for (long y = 0; y < 5; ++y)
      for (long z = 0; z < 5; ++z) {
        Scalar a(x, f), b(y, f), c(z, f);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
      }
}

TEST_CASE("parse_polynomial") {
  CHECK(parse_polynomial("0", kXY).is_zero());
  CHECK(parse_polynomial("x^2 - x^2", kXY).is_zero());

  Polynomial p = parse_polynomial("v*x - u*y", kUVXY);
  REQUIRE(p.size() == 2);
  Polynomial vx = Polynomial::variable(1, 4) * Polynomial::variable(2, 4);
  Polynomial uy = Polynomial::variable(0, 4) * Polynomial::variable(3, 4);
  CHECK(p == vx - uy);

  CHECK(parse_polynomial("-(x + y)^2", kXY) ==
        parse_polynomial("-x^2 - 2*x*y - y^2", kXY));
  CHECK(parse_polynomial("2*x^2*y - -3", kXY).constant_term().str() == "3");
  CHECK(parse_polynomial("  x *  y ", kXY) == parse_polynomial("x*y", kXY));
  CHECK(parse_polynomial("y2 - a_b", {"y2", "a_b"}).size() == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_polynomial("x +", kXY), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("x ^ y", kXY), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("(x", kXY), SyntaxError);
  CHECK_THROWS_AS(parse_polynomial("z", kXY), UnknownVariable);
  try {
    parse_polynomial("x\n  + )", kXY);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
  }
}

TEST_CASE("printing round-trips") {
  Polynomial p = parse_polynomial("3*x^2*y - 7*y + 1", kXY);
  CHECK(p.str(kXY) == "3*x^2*y - 7*y + 1");
  CHECK(parse_polynomial(p.str(kXY), kXY) == p);
  Polynomial q = parse_polynomial("x - u*t", {"u", "x", "t"});
  CHECK(q.str({"u", "x", "t"}, MonomialOrder::degrevlex()) == "-u*t + x");
}

TEST_CASE("compare_monomials") {
  Monomial x = Monomial::variable(0, 2), y = Monomial::variable(1, 2);
  CHECK(compare_monomials(x, x, MonomialOrder::lex()) == Cmp::EQ);
  CHECK(compare_monomials(x, y, MonomialOrder::lex()) == Cmp::GT);
  auto w = MonomialOrder::weighted({{1, 2}}, MonomialOrder::Base::Lex);
  CHECK(compare_monomials(x * y, x * x, w) == Cmp::GT);
  CHECK_THROWS_AS(compare_monomials(x, Monomial::variable(0, 3), MonomialOrder::lex()),
                  DimensionMismatch);
  CHECK_THROWS_AS(compare_monomials(x, y, MonomialOrder::weighted({{1, 2, 3}})),
                  DimensionMismatch);
}

TEST_CASE("exponent overflow is an error") {
  Monomial big = Monomial::variable(0, 1, Monomial::kMaxExponent);
  CHECK_THROWS_AS(big * Monomial::variable(0, 1), ExponentOverflow);
  Polynomial x = Polynomial::variable(0, 1);
  CHECK_THROWS_AS(x.pow(70000), ExponentOverflow);
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = random_poly(rng, 3), g = random_poly(rng, 3), h = random_poly(rng, 3);
    CHECK((f + g) + h == f + (g + h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK(f * g == g * f);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("orders are total, antisymmetric, transitive and multiplicative") {
  const auto monos = all_monomials(4, 6);
  std::vector<MonomialOrder> orders{
      MonomialOrder::lex(), MonomialOrder::degrevlex(),
      MonomialOrder::weighted({{0, 1, 2, 0}, {1, 1, 1, 1}}),
      MonomialOrder::elimination({false, true, false, true}),
      MonomialOrder::block({true, true, false, false})};
  for (const auto& ord : orders) {
    for (const auto& a : monos)
      for (const auto& b : monos) {
        Cmp ab = ord.compare(a, b), ba = ord.compare(b, a);
        CHECK((ab == Cmp::EQ) == (a == b));
        CHECK((ab == Cmp::GT) == (ba == Cmp::LT));
      }
    // a sort whose every pair agrees with ord certifies transitivity
    auto sorted = monos;
    std::sort(sorted.begin(), sorted.end(),
              [&](const Monomial& a, const Monomial& b) { return ord.compare(a, b) == Cmp::LT; });
    for (std::size_t i = 0; i + 1 < sorted.size(); ++i)
      for (std::size_t j = i + 1; j < sorted.size(); ++j)
        CHECK(ord.compare(sorted[i], sorted[j]) == Cmp::LT);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    for (int k = 0; k < 300; ++k) {
      const auto &u = monos[pick(rng)], &v = monos[pick(rng)], &w = monos[pick(rng)];
      CHECK(ord.compare(u, v) == ord.compare(u * w, v * w));
    }
  }
}

TEST_CASE("polynomial helpers") {
  Polynomial f = parse_polynomial("4*x^2*y + 2*x*y^2", kXY);
  CHECK(f.monomial_content() == Monomial(std::vector<std::uint32_t>{1, 1}));
  CHECK(f.derivative(0) == parse_polynomial("8*x*y + 2*y^2", kXY));
  Polynomial g = f.scaled(Scalar::from_rational(mpq_class(1, 6)));
  CHECK(g.primitive(MonomialOrder::lex()) == parse_polynomial("2*x^2*y + x*y^2", kXY));
  CHECK(f.substitute(1, Polynomial::constant(1, 2)) == parse_polynomial("4*x^2 + 2*x", kXY));
}
