#include <algorithm>
#include <numeric>

#include "lu/errors.hpp"
#include "lu/ideal.hpp"

namespace lu {

Ideal::Ideal(std::size_t nvars, std::vector<Polynomial> gens, Field field)
    : nvars_(nvars), field_(field), gens_(std::move(gens)),
      cache_(std::make_shared<Cache>()) {
  for (const auto& g : gens_) {
    if (g.nvars() != nvars_) throw DimensionMismatch("generator outside ambient");
    if (g.field().p != 0) field_ = g.field();
  }
}

Ideal Ideal::unit(std::size_t nvars, Field field) {
  return Ideal(nvars, {Polynomial::constant(Scalar(1, field), nvars, field)}, field);
}

const std::vector<Polynomial>& Ideal::basis(const MonomialOrder& ord) const {
  std::lock_guard lock(cache_->mutex);
  auto key = ord.key();
  auto it = cache_->bases.find(key);
  if (it != cache_->bases.end()) return it->second;
  auto gb = buchberger(gens_, ord);
  return cache_->bases.emplace(key, std::move(gb)).first->second;
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  const auto ord = MonomialOrder::degrevlex();
  return reduce(f, basis(ord), ord).is_zero();
}

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::is_unit() const {
  const auto& gb = basis();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool Ideal::is_zero() const { return basis().empty(); }

Ideal Ideal::simplified() const {
  std::vector<Polynomial> out;
  for (const auto& g : gens_) {
    if (g.is_zero()) continue;
    if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
  }
  return Ideal(nvars_, std::move(out), field_);
}

Ideal Ideal::operator+(const Ideal& other) const {
  if (other.nvars_ != nvars_) throw DimensionMismatch("ideals in different ambients");
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), other.gens_.begin(), other.gens_.end());
  return Ideal(nvars_, std::move(g), field_).simplified();
}

Ideal Ideal::operator*(const Ideal& other) const {
  if (other.nvars_ != nvars_) throw DimensionMismatch("ideals in different ambients");
  std::vector<Polynomial> g;
  for (const auto& a : gens_)
    for (const auto& b : other.gens_) g.push_back(a * b);
  return Ideal(nvars_, std::move(g), field_).simplified();
}

Ideal Ideal::with(const Polynomial& f) const { return with(std::vector{f}); }

Ideal Ideal::with(const std::vector<Polynomial>& fs) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), fs.begin(), fs.end());
  return Ideal(nvars_, std::move(g), field_).simplified();
}

Ideal Ideal::power(unsigned n) const {
  if (n == 0) return unit(nvars_, field_);
  // work with the reduced basis to keep products small
  Ideal base(nvars_, basis(), field_);
  Ideal acc = base;
  for (unsigned k = 1; k < n; ++k) {
    acc = acc * base;
    acc = Ideal(nvars_, acc.basis(), field_);
  }
  return acc;
}

Ideal Ideal::extended(std::size_t nvars) const {
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.extended(nvars));
  return Ideal(nvars, std::move(g), field_);
}

Ideal Ideal::remapped(const std::vector<std::size_t>& map, std::size_t nvars) const {
  std::vector<Polynomial> g;
  for (const auto& p : gens_) g.push_back(p.remapped(map, nvars));
  return Ideal(nvars, std::move(g), field_);
}

bool operator==(const Ideal& a, const Ideal& b) {
  if (a.nvars_ != b.nvars_) return false;
  return a.basis() == b.basis();
}

std::vector<std::string> Ideal::basis_strings(const VarNames& names,
                                              const MonomialOrder& ord) const {
  std::vector<std::string> out;
  for (const auto& g : basis(ord)) out.push_back(g.primitive(ord).str(names, ord));
  return out;
}

std::string Ideal::str(const VarNames& names, const MonomialOrder& ord) const {
  std::string s = "(";
  bool first = true;
  for (const auto& g : basis_strings(names, ord)) {
    if (!first) s += ", ";
    s += g;
    first = false;
  }
  return s + ")";
}

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& ord) {
  return ideal.basis(ord);
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal,
                       const MonomialOrder& ord) {
  return reduce(f, ideal.basis(ord), ord);
}

namespace {

std::vector<bool> last_var_mask(std::size_t n) {
  std::vector<bool> m(n + 1, false);
  m[n] = true;
  return m;
}

std::vector<Polynomial> drop_last(const std::vector<Polynomial>& gens, std::size_t n) {
  std::vector<std::size_t> map(n + 1);
  std::iota(map.begin(), map.end(), 0);
  map[n] = n + 1;  // never used: generators are free of the last variable
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.remapped(map, n));
  return out;
}

// Exact division g / f; throws when f does not divide g.
Polynomial exact_divide(Polynomial g, const Polynomial& f) {
  const auto ord = MonomialOrder::degrevlex();
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

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  if (a.nvars() != b.nvars()) throw DimensionMismatch("ideals in different ambients");
  const std::size_t n = a.nvars();
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_zero() || b.is_zero()) return Ideal::zero(n, a.field());
  Polynomial t = Polynomial::variable(n, n + 1, a.field());
  Polynomial one_minus_t = Polynomial::constant(Scalar(1, a.field()), n + 1, a.field()) - t;
  std::vector<Polynomial> gens;
  for (const auto& g : a.basis()) gens.push_back(t * g.extended(n + 1));
  for (const auto& g : b.basis()) gens.push_back(one_minus_t * g.extended(n + 1));
  Ideal big(n + 1, std::move(gens), a.field());
  Ideal elim = eliminate(big, last_var_mask(n));
  return Ideal(n, drop_last(elim.generators(), n), a.field());
}

Ideal intersect(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of no ideals");
  Ideal acc = ideals[0];
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal colon_ideal(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw ZeroDivisorQueryOnZero("colon by the zero polynomial");
  const std::size_t n = ideal.nvars();
  if (f.is_constant()) return Ideal(n, ideal.basis(), ideal.field());
  if (ideal.contains(f)) return Ideal::unit(n, ideal.field());
  Ideal both = intersect(ideal, Ideal(n, {f}, ideal.field()));
  std::vector<Polynomial> out;
  for (const auto& g : both.basis()) out.push_back(exact_divide(g, f));
  return Ideal(n, std::move(out), ideal.field());
}

Ideal colon_ideal(const Ideal& ideal, const Ideal& other) {
  std::vector<Ideal> parts;
  for (const auto& g : other.basis()) parts.push_back(colon_ideal(ideal, g));
  if (parts.empty()) return Ideal::unit(ideal.nvars(), ideal.field());
  return intersect(parts);
}

Saturation saturation(const Ideal& ideal, const Polynomial& f) {
  if (f.is_zero()) throw ZeroDivisorQueryOnZero("saturation by the zero polynomial");
  Ideal current(ideal.nvars(), ideal.basis(), ideal.field());
  unsigned n = 0;
  for (;;) {
    Ideal next = colon_ideal(current, f);
    if (next == current) return {current, n};
    current = Ideal(next.nvars(), next.basis(), next.field());
    ++n;
  }
}

Ideal eliminate(const Ideal& ideal, const std::vector<bool>& drop) {
  if (drop.size() != ideal.nvars()) throw DimensionMismatch("mask does not match ambient");
  const auto ord = MonomialOrder::elimination(drop);
  std::vector<Polynomial> out;
  for (const auto& g : ideal.basis(ord)) {
    bool uses = false;
    for (std::size_t i = 0; i < drop.size(); ++i)
      if (drop[i] && g.uses_variable(i)) uses = true;
    if (!uses) out.push_back(g);
  }
  return Ideal(ideal.nvars(), std::move(out), ideal.field());
}

Ideal eliminate(const Ideal& ideal, const VarNames& names, const VarNames& drop_vars) {
  if (names.size() != ideal.nvars()) throw DimensionMismatch("name list does not match ambient");
  std::vector<bool> mask(names.size(), false);
  for (const auto& d : drop_vars) {
    auto it = std::find(names.begin(), names.end(), d);
    if (it == names.end()) throw UnknownVariable(d);
    mask[static_cast<std::size_t>(it - names.begin())] = true;
  }
  return eliminate(ideal, mask);
}

std::vector<bool> max_independent_set(const Ideal& ideal) {
  const std::size_t n = ideal.nvars();
  const auto ord = MonomialOrder::degrevlex();
  const auto& gb = ideal.basis(ord);
  if (n > 20) throw ResourceLimit("too many variables for independent-set search");
  std::vector<std::uint32_t> supports;
  for (const auto& g : gb) {
    const auto& m = g.leading_term(ord).mono;
    std::uint32_t s = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (m[i] > 0) s |= 1u << i;
    supports.push_back(s);
  }
  std::vector<std::uint32_t> subsets(std::size_t{1} << n);
  std::iota(subsets.begin(), subsets.end(), 0u);
  // largest first; among equal sizes prefer lexicographically later variables
  std::stable_sort(subsets.begin(), subsets.end(), [](std::uint32_t a, std::uint32_t b) {
    int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
    if (pa != pb) return pa > pb;
    return a > b;
  });
  for (auto u : subsets) {
    bool ok = std::all_of(supports.begin(), supports.end(),
                          [&](std::uint32_t s) { return (s & ~u) != 0; });
    if (ok) {
      std::vector<bool> out(n);
      for (std::size_t i = 0; i < n; ++i) out[i] = (u >> i) & 1u;
      return out;
    }
  }
  return {};  // unit ideal
}

int krull_dimension(const Ideal& ideal) {
  if (ideal.is_unit()) return -1;
  auto u = max_independent_set(ideal);
  return static_cast<int>(std::count(u.begin(), u.end(), true));
}

std::vector<std::vector<Polynomial>> syzygies(const std::vector<Polynomial>& gens,
                                              const Ideal& modulus) {
  const std::size_t n = modulus.nvars();
  const std::size_t s = gens.size();
  const Field field = modulus.field();
  if (s == 0) return {};
  const std::size_t total = n + 1 + s;
  auto tag = [&](std::size_t k) { return Polynomial::variable(n + k, total, field); };
  std::vector<Polynomial> enc;
  for (std::size_t i = 0; i < s; ++i)
    enc.push_back(gens[i].extended(total) * tag(0) + tag(i + 1));
  for (const auto& k : modulus.basis()) enc.push_back(k.extended(total) * tag(0));
  for (std::size_t a = 0; a <= s; ++a)
    for (std::size_t b = a; b <= s; ++b) enc.push_back(tag(a) * tag(b));
  std::vector<bool> drop(total, false);
  drop[n] = true;
  const auto ord = MonomialOrder::elimination(drop);
  auto gb = buchberger(enc, ord);

  std::vector<std::vector<Polynomial>> out;
  for (const auto& g : gb) {
    if (g.uses_variable(n)) continue;
    std::vector<Term> parts;
    bool linear = true;
    std::vector<std::vector<Term>> coeffs(s);
    for (const auto& t : g.terms()) {
      std::uint32_t edeg = 0;
      std::size_t which = 0;
      for (std::size_t k = 1; k <= s; ++k)
        if (t.mono[n + k] > 0) {
          edeg += t.mono[n + k];
          which = k;
        }
      if (edeg != 1) {
        linear = false;
        break;
      }
      std::vector<std::uint32_t> e(t.mono.exponents().begin(),
                                   t.mono.exponents().begin() + static_cast<long>(n));
      coeffs[which - 1].push_back({Monomial(std::move(e)), t.coeff});
    }
    if (!linear) continue;
    std::vector<Polynomial> vec;
    for (auto& c : coeffs) vec.push_back(Polynomial::from_terms(std::move(c), n, field));
    out.push_back(std::move(vec));
  }
  return out;
}

bool ideal_less(const Ideal& a, const Ideal& b) {
  const auto& ga = a.basis();
  const auto& gb = b.basis();
  const std::size_t m = std::min(ga.size(), gb.size());
  for (std::size_t i = 0; i < m; ++i) {
    if (ga[i] < gb[i]) return true;
    if (gb[i] < ga[i]) return false;
  }
  return ga.size() < gb.size();
}

}  // namespace lu
