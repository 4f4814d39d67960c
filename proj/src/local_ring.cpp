#include "lu/local_ring.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "factor.hpp"
#include "lu/errors.hpp"

namespace lu {

LocalRing::LocalRing(VarNames vars, Ideal ideal, Ideal center)
    : ring_{std::move(vars), std::move(ideal)}, center_(std::move(center)) {
  if (ring_.vars.size() != ring_.ideal.nvars() || center_.nvars() != ring_.ideal.nvars())
    throw DimensionMismatch("ring, ideal and center disagree on the variable count");
  if (ring_.ideal.is_unit()) throw NotAProperIdeal("defining ideal is the unit ideal");
  if (!center_.contains(ring_.ideal))
    throw PreconditionError("center does not contain the defining ideal");
  if (center_.is_unit()) throw NotAProperIdeal("center is the unit ideal");
  if (!is_prime(center_).prime()) throw PreconditionError("center is not a prime ideal");
}

LocalRing LocalRing::trusted(VarNames vars, Ideal ideal, Ideal center) {
  LocalRing r;
  r.ring_ = {std::move(vars), std::move(ideal)};
  r.center_ = std::move(center);
  return r;
}

Polynomial LocalRing::parse(const std::string& text) const {
  return parse_polynomial(text, ring_.vars, field());
}

std::string LocalRing::str() const {
  const std::size_t n = nvars();
  std::vector<Polynomial> gens = ideal().basis();
  std::vector<bool> gone(n, false);
  // substitute away variables that occur as c*x_i + h
  for (bool progress = true; progress;) {
    progress = false;
    for (std::size_t k = 0; k < gens.size() && !progress; ++k) {
      const Polynomial& g = gens[k];
      for (std::size_t i = 0; i < n; ++i) {
        if (g.degree_in(i) != 1) continue;
        std::vector<Term> rest;
        Scalar c;
        bool bare = true;
        for (const auto& t : g.terms()) {
          if (t.mono[i] == 0) {
            rest.push_back(t);
          } else if (t.mono == Monomial::variable(i, n)) {
            c = t.coeff;
          } else {
            bare = false;
          }
        }
        if (!bare) continue;
        Polynomial image =
            -Polynomial::from_terms(rest, n, field()).scaled(c.inverse());
        std::vector<Polynomial> next;
        for (std::size_t j = 0; j < gens.size(); ++j)
          if (j != k) next.push_back(gens[j].substitute(i, image));
        gens = Ideal(n, next, field()).basis();
        gone[i] = true;
        progress = true;
        break;
      }
    }
  }
  std::string out = field().is_rational() ? "Q" : "F" + std::to_string(field().p);
  out += "[";
  bool first = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (gone[i]) continue;
    if (!first) out += ",";
    out += ring_.vars[i];
    first = false;
  }
  out += "]";
  if (!gens.empty()) {
    out += "/(";
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (k) out += ", ";
      out += gens[k].primitive(MonomialOrder::degrevlex()).str(ring_.vars, MonomialOrder::degrevlex());
    }
    out += ")";
  }
  return out;
}

Ideal nilradical(const LocalRing& ring) { return radical(ring.ideal()); }

LocalRing reduced_ring(const LocalRing& ring) {
  return LocalRing::trusted(ring.vars(), nilradical(ring), ring.center());
}

std::vector<std::vector<Polynomial>> jacobian(const std::vector<Polynomial>& gens) {
  std::vector<std::vector<Polynomial>> m;
  for (const auto& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t i = 0; i < g.nvars(); ++i) row.push_back(g.derivative(i));
    m.push_back(std::move(row));
  }
  return m;
}

std::size_t rank_mod_prime(std::vector<std::vector<Polynomial>> m, const Ideal& prime) {
  for (auto& row : m)
    for (auto& e : row) e = normal_form(e, prime);
  std::size_t rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t piv = m.size();
    for (std::size_t r = rank; r < m.size(); ++r)
      if (!m[r][c].is_zero()) {
        piv = r;
        break;
      }
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    const Polynomial p = m[rank][c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c].is_zero()) continue;
      const Polynomial e = m[r][c];
      // fraction-free: row_r <- p*row_r - e*row_rank, reduced mod the prime
      for (std::size_t k = c; k < cols; ++k)
        m[r][k] = normal_form(p * m[r][k] - e * m[rank][k], prime);
    }
    ++rank;
  }
  return rank;
}

int embedding_dimension(const LocalRing& ring) {
  const int height = static_cast<int>(ring.nvars()) - krull_dimension(ring.center());
  const auto& gens = ring.ideal().basis();
  if (gens.empty()) return height;
  return height - static_cast<int>(rank_mod_prime(jacobian(gens), ring.center()));
}

int local_dimension(const LocalRing& ring) {
  const int dc = krull_dimension(ring.center());
  int best = -1;
  for (const auto& p : minimal_primes(ring.ideal()))
    if (ring.center().contains(p)) best = std::max(best, krull_dimension(p) - dc);
  return best;
}

Regularity is_regular_local(const LocalRing& ring) {
  Regularity r;
  r.embdim = embedding_dimension(ring);
  r.krulldim = local_dimension(ring);
  r.regular = r.embdim == r.krulldim;
  return r;
}

std::vector<Polynomial> minimal_nilradical_generators(const LocalRing& ring) {
  const Ideal rad = nilradical(ring);
  const Ideal base = ring.ideal() + ring.center() * rad;
  std::vector<Polynomial> kept = rad.basis();
  for (std::size_t k = 0; k < kept.size();) {
    std::vector<Polynomial> others;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (j != k) others.push_back(kept[j]);
    if (base.with(others).contains(kept[k]))
      kept.erase(kept.begin() + static_cast<long>(k));
    else
      ++k;
  }
  for (auto& g : kept) g = g.primitive(MonomialOrder::degrevlex());
  return kept;
}

unsigned nilpotency_index(const LocalRing& ring) {
  const Ideal rad = nilradical(ring);
  Ideal power = rad;
  for (unsigned n = 1; n <= 8; ++n) {
    if (ring.ideal().contains(power)) return n;
    power = ring.ideal() + power * rad;
  }
  throw UnsupportedInstance("nilpotency index exceeds 8");
}

GradedPiecePresentation graded_piece(const LocalRing& ring, unsigned n) {
  if (n == 0) throw PreconditionError("graded piece index must be at least 1");
  GradedPiecePresentation out;
  out.n = n;
  const auto gens = minimal_nilradical_generators(ring);
  if (gens.empty()) return out;
  const Ideal rad = nilradical(ring);
  const Ideal next = ring.ideal() + rad.power(n + 1);

  // degree-n products, as nondecreasing index sequences
  std::vector<std::size_t> idx(n, 0);
  std::set<Polynomial> seen;
  for (;;) {
    Polynomial p = Polynomial::constant(1, ring.nvars(), ring.field());
    for (auto i : idx) p *= gens[i];
    Polynomial nf = normal_form(p, next);
    if (!nf.is_zero() && seen.insert(nf.monic(MonomialOrder::degrevlex())).second)
      out.generators.push_back(p);
    std::size_t k = n;
    while (k > 0 && idx[k - 1] == gens.size() - 1) --k;
    if (k == 0) break;
    ++idx[k - 1];
    for (std::size_t j = k; j < n; ++j) idx[j] = idx[k - 1];
  }
  if (out.generators.empty()) return out;

  std::set<std::vector<Polynomial>> columns;
  for (auto& col : syzygies(out.generators, next)) {
    bool zero = true;
    for (auto& e : col) {
      e = normal_form(e, rad);
      if (!e.is_zero()) zero = false;
    }
    if (zero) continue;
    // normalize the sign/scale by the first nonzero entry
    for (const auto& e : col)
      if (!e.is_zero()) {
        Scalar c = e.leading_term(MonomialOrder::degrevlex()).coeff.inverse();
        for (auto& f : col) f = f.scaled(c);
        break;
      }
    if (columns.insert(col).second) out.relations.push_back(col);
  }
  return out;
}

bool vanishes_locally(const Polynomial& e, const Ideal& radical_ideal, const Ideal& center) {
  if (radical_ideal.contains(e)) return true;
  return !center.contains(colon_ideal(radical_ideal, e));
}

namespace {

// Determinant by fraction-free (Bareiss) elimination over k[x].
Polynomial determinant(std::vector<std::vector<Polynomial>> a) {
  const std::size_t n = a.size();
  if (n == 0) return Polynomial::constant(1, 0);
  const std::size_t nv = a[0][0].nvars();
  const Field field = a[0][0].field();
  Polynomial prev = Polynomial::constant(1, nv, field);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Polynomial(nv, field);
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Polynomial num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        // Sylvester's identity makes this division exact
        a[i][j] = detail::divide_exact(num, prev);
      }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

bool next_subset(std::vector<std::size_t>& s, std::size_t n) {
  const std::size_t k = s.size();
  std::size_t i = k;
  while (i > 0 && s[i - 1] == n - k + i - 1) --i;
  if (i == 0) return false;
  ++s[i - 1];
  for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  return true;
}

}  // namespace

Freeness is_free_at_center(const GradedPiecePresentation& module, const LocalRing& ring) {
  Freeness out;
  const std::size_t g = module.generators.size();
  if (g == 0) {
    out.free = true;
    return out;
  }
  const std::size_t m = module.relations.size();
  // rows = generators, columns = relations
  std::vector<std::vector<Polynomial>> a(g, std::vector<Polynomial>(m));
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < g; ++i) a[i][j] = module.relations[j][i];

  const std::size_t rho = m == 0 ? 0 : rank_mod_prime(a, ring.center());
  out.rank = g - rho;
  const std::size_t k = rho + 1;
  if (k > g || k > m) {
    out.free = true;
    return out;
  }
  const Ideal rad = nilradical(ring);
  std::vector<std::size_t> rows(k), cols(k);
  std::iota(cols.begin(), cols.end(), 0);
  do {
    std::iota(rows.begin(), rows.end(), 0);
    do {
      std::vector<std::vector<Polynomial>> sub(k, std::vector<Polynomial>(k));
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sub[i][j] = a[rows[i]][cols[j]];
      Polynomial d = determinant(sub);
      if (!vanishes_locally(d, rad, ring.center())) {
        out.free = false;
        out.witness = module.relations[cols.back()];
        return out;
      }
    } while (next_subset(rows, g));
  } while (next_subset(cols, m));
  out.free = true;
  return out;
}

NormalFlatness is_normally_flat(const LocalRing& ring) {
  NormalFlatness out;
  out.N = nilpotency_index(ring);
  for (unsigned n = 1; n < out.N; ++n) {
    if (!is_free_at_center(graded_piece(ring, n), ring).free) {
      out.first_bad_n = n;
      return out;
    }
  }
  out.yes = true;
  return out;
}

}  // namespace lu
