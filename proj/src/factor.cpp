#include "factor.hpp"

#include <algorithm>
#include <numeric>

#include "lu/errors.hpp"

namespace lu::detail {

namespace {

using UPoly = std::vector<mpq_class>;  // coefficients, lowest degree first

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

mpq_class eval(const UPoly& p, const mpq_class& x) {
  mpq_class acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

// Divisors of |n|, n != 0; empty when n is too large to factor by trial
// division.
std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  n = abs(n);
  if (n > mpz_class("1000000000000")) return std::nullopt;
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Integer coefficients with gcd one.
std::vector<mpz_class> integral(const UPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p) {
    mpz_class v = c.get_num() * (l / c.get_den());
    out.push_back(v);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  if (g != 0)
    for (auto& v : out) v /= g;
  return out;
}

std::optional<std::vector<mpq_class>> rational_roots(const UPoly& p) {
  UPoly q = p;
  trim(q);
  std::vector<mpq_class> roots;
  if (q.size() <= 1) return roots;
  if (q[0] == 0) {
    roots.push_back(0);
    std::size_t k = 0;
    while (q[k] == 0) ++k;
    q.erase(q.begin(), q.begin() + static_cast<long>(k));
    if (q.size() <= 1) return roots;
  }
  auto z = integral(q);
  auto num = divisors(z.front());
  auto den = divisors(z.back());
  if (!num || !den) return std::nullopt;
  for (const auto& a : *num)
    for (const auto& b : *den)
      for (int sign : {1, -1}) {
        mpq_class r(a * sign, b);
        r.canonicalize();
        if (eval(q, r) == 0 && std::find(roots.begin(), roots.end(), r) == roots.end())
          roots.push_back(r);
      }
  return roots;
}

std::optional<std::vector<std::uint32_t>> residue_roots(const std::vector<Scalar>& p,
                                                        std::uint32_t prime) {
  if (prime >= 65536) return std::nullopt;
  std::vector<std::uint32_t> roots;
  for (std::uint32_t x = 0; x < prime; ++x) {
    Scalar acc(0, {prime});
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * Scalar(x, {prime}) + *it;
    if (acc.is_zero()) roots.push_back(x);
  }
  return roots;
}

// Lagrange interpolation through (xs[i], ys[i]).
UPoly interpolate(const std::vector<mpz_class>& xs, const std::vector<mpz_class>& ys) {
  const std::size_t n = xs.size();
  UPoly result(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    UPoly basis{1};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      UPoly next(basis.size() + 1, 0);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * mpq_class(xs[j]);
      }
      basis = std::move(next);
      denom *= mpq_class(xs[i] - xs[j]);
    }
    for (std::size_t k = 0; k < basis.size(); ++k)
      result[k] += basis[k] * mpq_class(ys[i]) / denom;
  }
  trim(result);
  return result;
}

// Polynomial remainder of a by b over Q.
UPoly remainder(UPoly a, const UPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    mpq_class c = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= c * b[k];
    trim(a);
  }
  return a;
}

// Kronecker's method: a factor of degree k, 2 <= k <= deg/2.
std::optional<UPoly> kronecker_factor(const UPoly& f, std::size_t k, bool& decided) {
  std::vector<mpz_class> xs, vals;
  for (long x = 0; xs.size() < k + 1 && x < 64; ++x) {
    for (long cand : {x, -x}) {
      if (xs.size() == k + 1) break;
      if (cand == 0 && x != 0) continue;
      mpz_class cz = cand;
      if (std::find(xs.begin(), xs.end(), cz) != xs.end()) continue;
      mpq_class v = eval(f, mpq_class(cand));
      if (v == 0) continue;  // roots are handled separately
      xs.push_back(cz);
      vals.push_back(v.get_num());
    }
  }
  std::vector<std::vector<mpz_class>> choices;
  std::size_t combos = 1;
  for (const auto& v : vals) {
    auto d = divisors(v);
    if (!d) {
      decided = false;
      return std::nullopt;
    }
    std::vector<mpz_class> signed_divs;
    for (const auto& x : *d) {
      signed_divs.push_back(x);
      signed_divs.push_back(-x);
    }
    combos *= signed_divs.size();
    if (combos > 4000000) {
      decided = false;
      return std::nullopt;
    }
    choices.push_back(std::move(signed_divs));
  }
  std::vector<std::size_t> idx(choices.size(), 0);
  for (;;) {
    std::vector<mpz_class> ys;
    for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
    if (ys[0] > 0) {  // fix the sign of the candidate
      UPoly g = interpolate(xs, ys);
      if (g.size() == k + 1) {
        bool integer = std::all_of(g.begin(), g.end(),
                                   [](const mpq_class& c) { return c.get_den() == 1; });
        if (integer && remainder(f, g).empty()) return g;
      }
    }
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == choices[pos].size()) idx[pos++] = 0;
    if (pos == idx.size()) break;
  }
  return std::nullopt;
}

Polynomial from_univariate(const UPoly& p, std::size_t var, std::size_t nvars, Field field) {
  std::vector<Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k)
    if (p[k] != 0)
      terms.push_back({Monomial::variable(var, nvars, static_cast<std::uint32_t>(k)),
                       Scalar::from_rational(p[k], field)});
  return Polynomial::from_terms(std::move(terms), nvars, field);
}

std::vector<std::size_t> effective_variables(const Polynomial& f) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.nvars(); ++i)
    if (f.uses_variable(i)) out.push_back(i);
  return out;
}

std::optional<std::pair<Polynomial, Polynomial>> univariate_factor(const Polynomial& f,
                                                                   std::size_t var,
                                                                   bool& decided) {
  const std::size_t n = f.nvars();
  const Field field = f.field();
  const std::uint32_t d = f.degree_in(var);
  auto linear = [&](const Scalar& root) {
    Polynomial l = Polynomial::variable(var, n, field) -
                   Polynomial::constant(root, n, field);
    return std::make_pair(l, divide_exact(f, l));
  };
  if (field.p != 0) {
    if (d > 3) {
      decided = false;
      return std::nullopt;
    }
    std::vector<Scalar> coeffs(d + 1, Scalar(0, field));
    for (const auto& t : f.terms()) coeffs[t.mono[var]] = t.coeff;
    auto roots = residue_roots(coeffs, field.p);
    if (!roots) {
      decided = false;
      return std::nullopt;
    }
    if (d >= 2 && !roots->empty()) return linear(Scalar(static_cast<long>((*roots)[0]), field));
    return std::nullopt;
  }
  if (d > 8) {
    decided = false;
    return std::nullopt;
  }
  UPoly p(d + 1, 0);
  for (const auto& t : f.terms()) p[t.mono[var]] = t.coeff.value();
  auto roots = rational_roots(p);
  if (!roots) {
    decided = false;
    return std::nullopt;
  }
  if (d >= 2 && !roots->empty()) return linear(Scalar::from_rational((*roots)[0]));
  for (std::size_t k = 2; 2 * k <= d; ++k) {
    auto g = kronecker_factor(p, k, decided);
    if (!decided) return std::nullopt;
    if (g) {
      Polynomial gp = from_univariate(*g, var, n, field);
      return std::make_pair(gp, divide_exact(f, gp));
    }
  }
  return std::nullopt;
}

// Coefficients of f viewed as a polynomial in `var`, each a polynomial in the
// remaining variable `other`, returned univariately.
std::vector<UPoly> coefficient_slices(const Polynomial& f, std::size_t var,
                                      std::size_t other) {
  std::vector<UPoly> slices(f.degree_in(var) + 1);
  for (const auto& t : f.terms()) {
    auto& s = slices[t.mono[var]];
    if (s.size() <= t.mono[other]) s.resize(t.mono[other] + 1, 0);
    s[t.mono[other]] += t.coeff.value();
  }
  for (auto& s : slices) trim(s);
  return slices;
}

std::optional<mpq_class> common_root(const std::vector<UPoly>& slices, bool& decided) {
  const UPoly* first = nullptr;
  for (const auto& s : slices)
    if (!s.empty()) {
      first = &s;
      break;
    }
  if (!first) return std::nullopt;
  auto roots = rational_roots(*first);
  if (!roots) {
    decided = false;
    return std::nullopt;
  }
  for (const auto& r : *roots) {
    bool all = std::all_of(slices.begin(), slices.end(),
                           [&](const UPoly& s) { return s.empty() || eval(s, r) == 0; });
    if (all) return r;
  }
  return std::nullopt;
}

std::optional<std::pair<Polynomial, Polynomial>> bivariate_factor(const Polynomial& f,
                                                                  std::size_t a,
                                                                  std::size_t b,
                                                                  bool& decided) {
  const std::size_t n = f.nvars();
  const Field field = f.field();
  if (field.p != 0 || f.total_degree() > 3) {
    decided = false;
    return std::nullopt;
  }
  auto var = [&](std::size_t i) { return Polynomial::variable(i, n, field); };
  auto cst = [&](const mpq_class& q) {
    return Polynomial::constant(Scalar::from_rational(q), n, field);
  };
  auto try_factor = [&](const Polynomial& l) -> std::optional<std::pair<Polynomial, Polynomial>> {
    try {
      return std::make_pair(l, divide_exact(f, l));
    } catch (const Error&) {
      return std::nullopt;
    }
  };

  // factor a - gamma
  if (auto g = common_root(coefficient_slices(f, b, a), decided)) {
    if (f.degree_in(a) > 0 || f.total_degree() > 1) {
      auto r = try_factor(var(a) - cst(*g));
      if (r && !r->second.is_constant()) return r;
    }
  }
  if (!decided) return std::nullopt;

  // factor b - alpha*a - beta; the top form vanishes at (1, alpha)
  const std::uint64_t d = f.total_degree();
  UPoly top;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() != d) continue;
    std::uint32_t e = t.mono[b];
    if (top.size() <= e) top.resize(e + 1, 0);
    top[e] += t.coeff.value();
  }
  trim(top);
  auto alphas = rational_roots(top);
  if (!alphas) {
    decided = false;
    return std::nullopt;
  }
  if (top.size() >= 2 && top.back() == 0) alphas->push_back(0);
  for (const auto& alpha : *alphas) {
    // substitute b = alpha*a + beta, with beta carried in variable b itself
    Polynomial image = cst(alpha) * var(a) + var(b);
    Polynomial g = f.substitute(b, image);
    auto beta = common_root(coefficient_slices(g, a, b), decided);
    if (!decided) return std::nullopt;
    if (!beta) continue;
    auto r = try_factor(var(b) - cst(alpha) * var(a) - cst(*beta));
    if (r && !r->second.is_constant()) return r;
  }
  return std::nullopt;
}

}  // namespace

Polynomial divide_exact(const Polynomial& g_in, const Polynomial& f) {
  const auto ord = MonomialOrder::degrevlex();
  Polynomial g = g_in;
  Polynomial q(g.nvars(), g.field());
  const Term lf = f.leading_term(ord);
  while (!g.is_zero()) {
    const Term lg = g.leading_term(ord);
    if (!lf.mono.divides(lg.mono)) throw Error("inexact polynomial division");
    Monomial m = lg.mono.quotient(lf.mono);
    Scalar c = lg.coeff / lf.coeff;
    q += Polynomial::monomial(m, c, g.field());
    g -= f.times_monomial(m, c);
  }
  return q;
}

std::optional<std::pair<Polynomial, Polynomial>> small_factor(const Polynomial& f,
                                                              bool& decided) {
  decided = true;
  auto vars = effective_variables(f);
  if (vars.empty() || f.total_degree() <= 1) return std::nullopt;
  if (vars.size() == 1) return univariate_factor(f, vars[0], decided);
  if (vars.size() == 2) return bivariate_factor(f, vars[0], vars[1], decided);
  decided = false;
  return std::nullopt;
}

bool lattice_saturated(const std::vector<std::vector<mpz_class>>& rows_in) {
  if (rows_in.empty()) return true;
  auto m = rows_in;
  const std::size_t R = m.size(), C = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < C && rank < R; ++col) {
    // Euclid down the column until a single nonzero entry remains
    for (;;) {
      std::size_t piv = R;
      for (std::size_t r = rank; r < R; ++r)
        if (m[r][col] != 0 && (piv == R || abs(m[r][col]) < abs(m[piv][col]))) piv = r;
      if (piv == R) break;
      std::swap(m[rank], m[piv]);
      bool done = true;
      for (std::size_t r = rank + 1; r < R; ++r) {
        if (m[r][col] == 0) continue;
        mpz_class q = m[r][col] / m[rank][col];
        for (std::size_t c = 0; c < C; ++c) m[r][c] -= q * m[rank][c];
        if (m[r][col] != 0) done = false;
      }
      if (done) {
        ++rank;
        break;
      }
    }
  }
  m.resize(rank);
  if (rank == 0) return true;
  // saturated iff gcd of the maximal minors is one; for the small lattices
  // met here enumerate column subsets
  std::vector<std::size_t> cols(rank);
  std::iota(cols.begin(), cols.end(), 0);
  mpz_class g = 0;
  auto det = [&](const std::vector<std::size_t>& cs) {
    std::vector<std::vector<mpq_class>> a(rank, std::vector<mpq_class>(rank));
    for (std::size_t i = 0; i < rank; ++i)
      for (std::size_t j = 0; j < rank; ++j) a[i][j] = m[i][cs[j]];
    mpq_class d = 1;
    for (std::size_t c = 0; c < rank; ++c) {
      std::size_t p = c;
      while (p < rank && a[p][c] == 0) ++p;
      if (p == rank) return mpz_class(0);
      if (p != c) {
        std::swap(a[p], a[c]);
        d = -d;
      }
      d *= a[c][c];
      for (std::size_t r = c + 1; r < rank; ++r) {
        mpq_class f = a[r][c] / a[c][c];
        for (std::size_t k = c; k < rank; ++k) a[r][k] -= f * a[c][k];
      }
    }
    return mpz_class(d.get_num());
  };
  for (;;) {
    mpz_class d = det(cols);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) return true;
    std::size_t i = rank;
    while (i > 0 && cols[i - 1] == C - rank + i - 1) --i;
    if (i == 0) break;
    ++cols[i - 1];
    for (std::size_t j = i; j < rank; ++j) cols[j] = cols[j - 1] + 1;
  }
  return g == 1;
}

}  // namespace lu::detail
