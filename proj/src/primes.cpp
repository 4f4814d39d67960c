// Primality, minimal primes, radicals and primary decomposition.

#include <algorithm>

#include "factor.hpp"
#include "lu/errors.hpp"
#include "lu/ideal.hpp"

namespace lu {

namespace {

PrimeVerdict not_prime(Polynomial f, Polynomial g, std::string reason) {
  PrimeVerdict v;
  v.kind = PrimeVerdict::Kind::NotPrime;
  v.f = std::move(f);
  v.g = std::move(g);
  v.reason = std::move(reason);
  return v;
}

PrimeVerdict verdict(PrimeVerdict::Kind kind, std::string reason) {
  PrimeVerdict v;
  v.kind = kind;
  v.reason = std::move(reason);
  return v;
}

// Index of a variable occurring as a bare linear term c*x_i in g, with x_i
// absent from the rest of g.
std::optional<std::size_t> linear_variable(const Polynomial& g) {
  for (std::size_t i = 0; i < g.nvars(); ++i) {
    if (g.degree_in(i) != 1) continue;
    bool ok = true;
    for (const auto& t : g.terms())
      if (t.mono[i] == 1 && t.mono != Monomial::variable(i, g.nvars())) ok = false;
    if (ok) return i;
  }
  return std::nullopt;
}

// f = a*x_i + b with a, b free of x_i.
std::pair<Polynomial, Polynomial> split_linear(const Polynomial& f, std::size_t i) {
  std::vector<Term> a, b;
  for (const auto& t : f.terms()) {
    if (t.mono[i] == 0) {
      b.push_back(t);
    } else {
      std::vector<std::uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
      e[i] = 0;
      a.push_back({Monomial(e), t.coeff});
    }
  }
  return {Polynomial::from_terms(a, f.nvars(), f.field()),
          Polynomial::from_terms(b, f.nvars(), f.field())};
}

bool is_binomial_ideal(const std::vector<Polynomial>& basis) {
  return std::all_of(basis.begin(), basis.end(),
                     [](const Polynomial& g) { return g.size() <= 2; });
}

PrimeVerdict test_prime(const Ideal& ideal) {
  using Kind = PrimeVerdict::Kind;
  const auto& basis = ideal.basis();
  if (basis.empty()) return verdict(Kind::Prime, "zero ideal");
  const std::size_t n = ideal.nvars();
  const Field field = ideal.field();

  // Eliminate a variable that occurs linearly; the quotient rings agree and
  // witnesses free of that variable carry over.
  for (const auto& g : basis) {
    auto i = linear_variable(g);
    if (!i) continue;
    auto [a, b] = split_linear(g, *i);
    if (!a.is_constant()) continue;
    Polynomial image = (-b).scaled(a.terms()[0].coeff.inverse());
    std::vector<Polynomial> rest;
    for (const auto& h : basis)
      if (!(h == g)) rest.push_back(h.substitute(*i, image));
    return test_prime(Ideal(n, rest, field));
  }

  // A variable that is a zero-divisor.
  for (std::size_t j = 0; j < n; ++j) {
    bool occurs = std::any_of(basis.begin(), basis.end(),
                              [&](const Polynomial& g) { return g.uses_variable(j); });
    if (!occurs) continue;
    Ideal c = colon_ideal(ideal, Polynomial::variable(j, n, field));
    for (const auto& q : c.basis())
      if (!ideal.contains(q))
        return not_prime(Polynomial::variable(j, n, field), q, "variable is a zero-divisor");
  }

  // Factor basis elements.
  bool all_decided = true;
  for (const auto& g : basis) {
    bool decided = false;
    auto fac = detail::small_factor(g, decided);
    if (!decided) all_decided = false;
    if (fac && !ideal.contains(fac->first) && !ideal.contains(fac->second))
      return not_prime(fac->first, fac->second, "basis element factors");
  }

  if (basis.size() == 1) {
    const Polynomial& f = basis[0];
    if (all_decided) return verdict(Kind::Prime, "irreducible principal ideal");
    // a*x + b with a, b coprime is irreducible
    for (std::size_t i = 0; i < n; ++i) {
      if (f.degree_in(i) != 1) continue;
      auto [a, b] = split_linear(f, i);
      if (b.is_zero()) continue;
      Ideal pa(n, {a}, field), pb(n, {b}, field);
      if (intersect(pa, pb) == Ideal(n, {a * b}, field))
        return verdict(Kind::Prime, "principal ideal linear in a variable");
    }
  }

  // No variable is a zero-divisor, so a binomial ideal is a lattice ideal.
  if (is_binomial_ideal(basis)) {
    std::vector<std::vector<mpz_class>> rows;
    for (const auto& g : basis) {
      if (g.size() != 2) return verdict(Kind::Unknown, "monomial in a lattice ideal");
      std::vector<mpz_class> row(n);
      for (std::size_t k = 0; k < n; ++k)
        row[k] = mpz_class(g.terms()[0].mono[k]) - mpz_class(g.terms()[1].mono[k]);
      rows.push_back(std::move(row));
    }
    if (detail::lattice_saturated(rows)) return verdict(Kind::Prime, "saturated lattice ideal");
    return verdict(Kind::Unknown, "lattice not saturated");
  }
  return verdict(Kind::Unknown, "outside the decided classes");
}

// Drop primes containing another one; sort and dedupe.
std::vector<Ideal> minimize(std::vector<Ideal> primes) {
  std::sort(primes.begin(), primes.end(), ideal_less);
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  std::vector<Ideal> out;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < primes.size() && !redundant; ++j)
      if (i != j && primes[i].contains(primes[j])) redundant = true;
    if (!redundant) out.push_back(primes[i]);
  }
  return out;
}

void split_primes(const Ideal& ideal, std::size_t depth, std::vector<Ideal>& out) {
  if (ideal.is_unit()) return;
  if (depth > limits().max_split_depth)
    throw UnsupportedInstance("prime splitting exceeded the depth limit");
  PrimeVerdict v = test_prime(ideal);
  switch (v.kind) {
    case PrimeVerdict::Kind::Prime:
      out.push_back(Ideal(ideal.nvars(), ideal.basis(), ideal.field()));
      return;
    case PrimeVerdict::Kind::NotPrime:
      split_primes(ideal.with(*v.f), depth + 1, out);
      split_primes(ideal.with(*v.g), depth + 1, out);
      return;
    case PrimeVerdict::Kind::Unknown:
      throw UnsupportedInstance("cannot decide primality: " + v.reason);
  }
}

// Coefficient of the leading monomial's X-part, as a polynomial in the
// variables flagged in `u`.
Polynomial leading_coefficient_in(const Polynomial& g, const std::vector<bool>& u,
                                  const MonomialOrder& ord) {
  const Monomial& lead = g.leading_term(ord).mono;
  std::vector<Term> coeff;
  for (const auto& t : g.terms()) {
    bool same = true;
    for (std::size_t i = 0; i < g.nvars() && same; ++i)
      if (!u[i] && t.mono[i] != lead[i]) same = false;
    if (!same) continue;
    std::vector<std::uint32_t> e(t.mono.exponents().begin(), t.mono.exponents().end());
    for (std::size_t i = 0; i < g.nvars(); ++i)
      if (!u[i]) e[i] = 0;
    coeff.push_back({Monomial(e), t.coeff});
  }
  return Polynomial::from_terms(coeff, g.nvars(), g.field());
}

void decompose(const Ideal& ideal, std::size_t depth, std::vector<PrimaryComponent>& out) {
  if (ideal.is_unit()) return;
  if (depth > limits().max_split_depth)
    throw UnsupportedInstance("primary decomposition exceeded the depth limit");
  const auto mins = minimal_primes(ideal);
  const std::size_t n = ideal.nvars();

  if (mins.size() > 1) {
    std::vector<Ideal> others(mins.begin() + 1, mins.end());
    Ideal rest = intersect(others);
    const Polynomial* s = nullptr;
    for (const auto& g : rest.basis())
      if (!mins[0].contains(g)) {
        s = &g;
        break;
      }
    if (!s) throw Error("minimal primes are not incomparable");
    Saturation sat = saturation(ideal, *s);
    decompose(sat.ideal, depth + 1, out);
    if (sat.exponent > 0) decompose(ideal.with(s->pow(sat.exponent)), depth + 1, out);
    return;
  }

  const Ideal& prime = mins[0];
  std::vector<bool> u = max_independent_set(prime);
  std::vector<bool> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = !u[i];
  const auto ord = MonomialOrder::block(x);
  Polynomial h = Polynomial::constant(1, n, ideal.field());
  for (const auto& g : ideal.basis(ord)) {
    Polynomial c = leading_coefficient_in(g, u, ord);
    if (!c.is_constant()) h *= c;
  }
  if (h.is_constant()) {
    out.push_back({ideal, prime});
    return;
  }
  Saturation sat = saturation(ideal, h);
  out.push_back({sat.ideal, prime});
  if (sat.exponent == 0) return;
  decompose(ideal.with(h.pow(sat.exponent)), depth + 1, out);
}

}  // namespace

PrimeVerdict is_prime(const Ideal& ideal) {
  if (ideal.is_unit()) throw NotAProperIdeal("primality of the unit ideal");
  return test_prime(ideal);
}

std::vector<Ideal> minimal_primes(const Ideal& ideal) {
  if (ideal.is_unit()) return {};
  std::vector<Ideal> found;
  split_primes(ideal, 0, found);
  return minimize(std::move(found));
}

Ideal radical(const Ideal& ideal) {
  if (ideal.is_unit()) return Ideal::unit(ideal.nvars(), ideal.field());
  return intersect(minimal_primes(ideal));
}

std::vector<PrimaryComponent> primary_decomposition(const Ideal& ideal) {
  if (ideal.is_unit()) return {};
  std::vector<PrimaryComponent> raw;
  decompose(ideal, 0, raw);

  // merge components sharing a prime
  std::vector<PrimaryComponent> merged;
  for (auto& c : raw) {
    auto it = std::find_if(merged.begin(), merged.end(),
                           [&](const PrimaryComponent& m) { return m.prime == c.prime; });
    if (it == merged.end())
      merged.push_back(c);
    else
      it->primary = intersect(it->primary, c.primary);
  }
  std::sort(merged.begin(), merged.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
    return ideal_less(a.prime, b.prime);
  });

  // greedy removal of redundant components, largest primes first
  for (std::size_t k = merged.size(); k-- > 0;) {
    if (merged.size() == 1) break;
    std::vector<Ideal> rest;
    for (std::size_t j = 0; j < merged.size(); ++j)
      if (j != k) rest.push_back(merged[j].primary);
    if (ideal.contains(intersect(rest))) merged.erase(merged.begin() + static_cast<long>(k));
  }
  return merged;
}

std::vector<Ideal> associated_primes(const Ideal& ideal) {
  std::vector<Ideal> out;
  for (const auto& c : primary_decomposition(ideal)) out.push_back(c.prime);
  std::sort(out.begin(), out.end(), ideal_less);
  return out;
}

}  // namespace lu
