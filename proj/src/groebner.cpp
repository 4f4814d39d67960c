// Buchberger's algorithm with the sugar strategy, the product criterion and
// the chain criterion, followed by full inter-reduction.

#include <algorithm>
#include <set>
#include <utility>

#include "lu/errors.hpp"
#include "lu/ideal.hpp"

namespace lu {

Limits& limits() {
  static Limits l;
  return l;
}

namespace {

// Terms kept ascending under the active order, so the leading term is back().
struct OPoly {
  std::vector<Term> terms;
  std::uint64_t sugar = 0;

  bool zero() const { return terms.empty(); }
  const Term& lead() const { return terms.back(); }
};

class Engine {
 public:
  Engine(const MonomialOrder& ord, std::size_t nvars, Field field)
      : ord_(ord), nvars_(nvars), field_(field) {}

  OPoly from(const Polynomial& p) const {
    OPoly o;
    o.terms = p.terms();
    std::sort(o.terms.begin(), o.terms.end(), [&](const Term& a, const Term& b) {
      return ord_.compare(a.mono, b.mono) == Cmp::LT;
    });
    o.sugar = p.total_degree();
    return o;
  }

  Polynomial to(const OPoly& o) const {
    return Polynomial::from_terms(o.terms, nvars_, field_);
  }

  // f - c * m * g, both ascending.
  std::vector<Term> sub_mul(const std::vector<Term>& f, const Scalar& c,
                            const Monomial& m, const std::vector<Term>& g) {
    ops_ += f.size() + g.size();
    if (ops_ > limits().max_term_operations)
      throw ResourceLimit("Groebner computation exceeded the term-operation budget");
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    std::size_t i = 0, j = 0;
    std::vector<Term> scaled;
    scaled.reserve(g.size());
    for (const auto& t : g) scaled.push_back({t.mono * m, -(t.coeff * c)});
    while (i < f.size() || j < scaled.size()) {
      if (j == scaled.size()) {
        out.push_back(f[i++]);
        continue;
      }
      if (i == f.size()) {
        out.push_back(std::move(scaled[j++]));
        continue;
      }
      Cmp r = ord_.compare(f[i].mono, scaled[j].mono);
      if (r == Cmp::LT) {
        out.push_back(f[i++]);
      } else if (r == Cmp::GT) {
        out.push_back(std::move(scaled[j++]));
      } else {
        Scalar s = f[i].coeff + scaled[j].coeff;
        if (!s.is_zero()) out.push_back({f[i].mono, s});
        ++i;
        ++j;
      }
    }
    return out;
  }

  const OPoly* find_reducer(const Monomial& m, const std::vector<OPoly>& basis,
                            const std::vector<bool>* alive) const {
    const OPoly* best = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (alive && !(*alive)[k]) continue;
      const auto& g = basis[k];
      if (g.zero() || !g.lead().mono.divides(m)) continue;
      if (!best || g.terms.size() < best->terms.size()) best = &g;
    }
    return best;
  }

  // Full reduction: leading and tail terms.
  OPoly reduce(OPoly p, const std::vector<OPoly>& basis,
               const std::vector<bool>* alive = nullptr) {
    std::vector<Term> remainder;  // collected descending
    while (!p.zero()) {
      const Term lt = p.lead();
      const OPoly* g = find_reducer(lt.mono, basis, alive);
      if (!g) {
        remainder.push_back(lt);
        p.terms.pop_back();
        continue;
      }
      Monomial q = lt.mono.quotient(g->lead().mono);
      Scalar c = lt.coeff / g->lead().coeff;
      p.sugar = std::max(p.sugar, g->sugar + q.degree());
      p.terms = sub_mul(p.terms, c, q, g->terms);
    }
    std::reverse(remainder.begin(), remainder.end());
    p.terms = std::move(remainder);
    return p;
  }

  OPoly monic(OPoly p) const {
    if (p.zero()) return p;
    Scalar inv = p.lead().coeff.inverse();
    for (auto& t : p.terms) t.coeff = t.coeff * inv;
    return p;
  }

  OPoly spoly(const OPoly& f, const OPoly& g) {
    Monomial l = f.lead().mono.lcm(g.lead().mono);
    Monomial mf = l.quotient(f.lead().mono);
    Monomial mg = l.quotient(g.lead().mono);
    std::vector<Term> a;
    a.reserve(f.terms.size());
    Scalar cf = f.lead().coeff.inverse();
    for (const auto& t : f.terms) a.push_back({t.mono * mf, t.coeff * cf});
    OPoly s;
    s.terms = sub_mul(a, g.lead().coeff.inverse(), mg, g.terms);
    s.sugar = std::max(f.sugar + mf.degree(), g.sugar + mg.degree());
    return s;
  }

  std::vector<Polynomial> run(const std::vector<Polynomial>& gens);

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint64_t sugar;
  };

  const MonomialOrder& ord_;
  std::size_t nvars_;
  Field field_;
  std::size_t ops_ = 0;
};

std::vector<Polynomial> Engine::run(const std::vector<Polynomial>& gens) {
  std::vector<OPoly> basis;
  std::vector<Pair> pairs;
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add = [&](OPoly h) {
    h = monic(std::move(h));
    std::size_t k = basis.size();
    basis.push_back(std::move(h));
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].zero()) continue;
      Monomial l = basis[i].lead().mono.lcm(basis[k].lead().mono);
      std::uint64_t s = std::max(
          basis[i].sugar + l.degree() - basis[i].lead().mono.degree(),
          basis[k].sugar + l.degree() - basis[k].lead().mono.degree());
      pairs.push_back({i, k, l, s});
      pending.insert({i, k});
    }
  };

  {
    std::vector<OPoly> inputs;
    for (const auto& g : gens)
      if (!g.is_zero()) inputs.push_back(from(g));
    // reduce inputs against each other as they arrive, smallest first
    std::sort(inputs.begin(), inputs.end(), [&](const OPoly& a, const OPoly& b) {
      return ord_.compare(a.lead().mono, b.lead().mono) == Cmp::LT;
    });
    for (auto& in : inputs) {
      OPoly r = reduce(std::move(in), basis);
      if (!r.zero()) add(std::move(r));
    }
  }

  std::size_t reductions = 0;
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair& a, const Pair& b) {
                                   if (a.sugar != b.sugar) return a.sugar < b.sugar;
                                   return ord_.compare(a.lcm, b.lcm) == Cmp::LT;
                                 });
    Pair p = *best;
    pairs.erase(best);
    pending.erase({p.i, p.j});

    const OPoly& f = basis[p.i];
    const OPoly& g = basis[p.j];
    if (f.lead().mono.coprime(g.lead().mono)) continue;
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == p.i || k == p.j || basis[k].zero()) continue;
      if (!basis[k].lead().mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (!pending.contains(key(p.i, k)) && !pending.contains(key(p.j, k)))
        chain = true;
    }
    if (chain) continue;

    if (++reductions > limits().max_spair_reductions)
      throw ResourceLimit("Groebner computation exceeded the S-pair budget");
    OPoly s = reduce(spoly(f, g), basis);
    if (s.zero()) continue;
    if (s.terms.size() == 1 && s.lead().mono.is_one()) {
      OPoly one;
      one.terms.push_back({Monomial(nvars_), Scalar(1, field_)});
      return {to(one)};
    }
    add(std::move(s));
  }

  // minimalize: drop elements whose leading monomial is divisible by another
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].zero()) {
      keep[i] = false;
      continue;
    }
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j] || basis[j].zero()) continue;
      const auto& li = basis[i].lead().mono;
      const auto& lj = basis[j].lead().mono;
      if (lj.divides(li) && (lj != li || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<OPoly> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<bool> others(minimal.size(), true);
    others[i] = false;
    OPoly lead_part;
    lead_part.terms = {minimal[i].lead()};
    OPoly tail = minimal[i];
    tail.terms.pop_back();
    OPoly r = reduce(std::move(tail), minimal, &others);
    r.terms.push_back(minimal[i].lead());
    out.push_back(to(monic(std::move(r))));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return ord_.greater(a.leading_term(ord_).mono, b.leading_term(ord_).mono);
  });
  return out;
}

}  // namespace

std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord) {
  if (gens.empty()) return {};
  const std::size_t n = gens[0].nvars();
  Field field;
  for (const auto& g : gens) {
    if (g.nvars() != n) throw DimensionMismatch("generators in different ambients");
    if (g.field().p != 0) field = g.field();
  }
  for (const auto& row : ord.weights())
    if (row.size() != n) throw DimensionMismatch("order does not match ambient");
  Engine e(ord, n, field);
  return e.run(gens);
}

Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord) {
  if (f.is_zero() || basis.empty()) return f;
  Field field = f.field();
  for (const auto& g : basis)
    if (g.field().p != 0) field = g.field();
  Engine e(ord, f.nvars(), field);
  std::vector<OPoly> b;
  b.reserve(basis.size());
  for (const auto& g : basis) b.push_back(e.from(g));
  return e.to(e.reduce(e.from(f), b));
}

}  // namespace lu
