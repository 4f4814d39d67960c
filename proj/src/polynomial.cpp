#include "lu/polynomial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "lu/errors.hpp"

namespace lu {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_)
    if (e > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^16 - 1");
}

Monomial Monomial::variable(std::size_t index, std::size_t nvars,
                            std::uint32_t power) {
  Monomial m(nvars);
  if (index >= nvars) throw DimensionMismatch("variable index out of range");
  if (power > kMaxExponent) throw ExponentOverflow("exponent exceeds 2^16 - 1");
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& d) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - d.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i)
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::extended(std::size_t nvars) const {
  Monomial r(nvars);
  std::copy(exps_.begin(), exps_.end(), r.exps_.begin());
  return r;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw DimensionMismatch("monomial lengths differ");
  Monomial r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint32_t e = a.exps_[i] + b.exps_[i];
    if (e > Monomial::kMaxExponent)
      throw ExponentOverflow("exponent exceeds 2^16 - 1");
    r.exps_[i] = e;
  }
  return r;
}

// ----------------------------------------------------------- MonomialOrder

MonomialOrder MonomialOrder::weighted(
    std::vector<std::vector<std::int64_t>> weights, Base tie_break) {
  return MonomialOrder(tie_break, std::move(weights));
}

MonomialOrder MonomialOrder::elimination(const std::vector<bool>& drop) {
  std::vector<std::int64_t> row(drop.size());
  for (std::size_t i = 0; i < drop.size(); ++i) row[i] = drop[i] ? 1 : 0;
  return MonomialOrder(Base::DegRevLex, {row});
}

MonomialOrder MonomialOrder::block(const std::vector<bool>& first_block) {
  const std::size_t n = first_block.size();
  std::vector<std::vector<std::int64_t>> rows;
  for (bool which : {true, false}) {
    std::vector<std::int64_t> deg(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      if (first_block[i] == which) deg[i] = 1;
    rows.push_back(deg);
    for (std::size_t i = n; i-- > 0;) {
      if (first_block[i] != which) continue;
      std::vector<std::int64_t> r(n, 0);
      r[i] = -1;
      rows.push_back(r);
    }
  }
  return MonomialOrder(Base::Lex, std::move(rows));
}

Cmp MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.size();
  for (const auto& row : weights_) {
    std::int64_t wa = 0, wb = 0;
    for (std::size_t i = 0; i < n; ++i) {
      wa += row[i] * static_cast<std::int64_t>(a[i]);
      wb += row[i] * static_cast<std::int64_t>(b[i]);
    }
    if (wa != wb) return wa > wb ? Cmp::GT : Cmp::LT;
  }
  if (base_ == Base::Lex) {
    for (std::size_t i = 0; i < n; ++i)
      if (a[i] != b[i]) return a[i] > b[i] ? Cmp::GT : Cmp::LT;
    return Cmp::EQ;
  }
  std::uint64_t da = a.degree(), db = b.degree();
  if (da != db) return da > db ? Cmp::GT : Cmp::LT;
  for (std::size_t i = n; i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i] ? Cmp::GT : Cmp::LT;
  return Cmp::EQ;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  os << (base_ == Base::Lex ? "lex" : "drl");
  for (const auto& row : weights_) {
    os << '|';
    for (auto w : row) os << w << ',';
  }
  return os.str();
}

Cmp compare_monomials(const Monomial& a, const Monomial& b,
                      const MonomialOrder& ord) {
  if (a.size() != b.size()) throw DimensionMismatch("monomial lengths differ");
  for (const auto& row : ord.weights())
    if (row.size() != a.size())
      throw DimensionMismatch("weight row length differs from monomial length");
  return ord.compare(a, b);
}

// -------------------------------------------------------------- Polynomial

namespace {

Field join(Field a, Field b) {
  if (a == b || b.p == 0) return a;
  if (a.p == 0) return b;
  throw Error("mixing polynomials of different characteristic");
}

void check_same_ambient(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    throw DimensionMismatch("polynomials live in different ambients");
}

}  // namespace

Polynomial Polynomial::constant(const Scalar& c, std::size_t nvars,
                                Field field) {
  Polynomial p(nvars, field);
  Scalar cc = Scalar::from_rational(c.value(), join(field, c.field()));
  if (!cc.is_zero()) p.terms_.push_back({Monomial(nvars), cc});
  return p;
}

Polynomial Polynomial::variable(std::size_t index, std::size_t nvars,
                                Field field) {
  Polynomial p(nvars, field);
  p.terms_.push_back({Monomial::variable(index, nvars), Scalar(1, field)});
  return p;
}

Polynomial Polynomial::monomial(const Monomial& m, const Scalar& c,
                                Field field) {
  Polynomial p(m.size(), field);
  Scalar cc = Scalar::from_rational(c.value(), join(field, c.field()));
  if (!cc.is_zero()) p.terms_.push_back({m, cc});
  return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms, std::size_t nvars,
                                  Field field) {
  Polynomial p(nvars, field);
  for (const auto& t : terms)
    if (t.mono.size() != nvars)
      throw DimensionMismatch("term length differs from ambient");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono > b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (field_.p != 0) t.coeff = Scalar::from_rational(t.coeff.value(), field_);
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
  terms_ = std::move(out);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono[var]);
  return d;
}

bool Polynomial::uses_variable(std::size_t var) const {
  return degree_in(var) > 0;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
  return Scalar(0, field_);
}

const Term& Polynomial::leading_term(const MonomialOrder& ord) const {
  if (terms_.empty()) throw Error("leading term of zero polynomial");
  const Term* best = &terms_[0];
  for (const auto& t : terms_)
    if (ord.greater(t.mono, best->mono)) best = &t;
  return *best;
}

std::vector<Term> Polynomial::sorted_terms(const MonomialOrder& ord) const {
  std::vector<Term> out = terms_;
  std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) {
    return ord.greater(a.mono, b.mono);
  });
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  check_same_ambient(a, b);
  Polynomial r(a.nvars_, join(a.field_, b.field_));
  r.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() ||
        (i < a.terms_.size() && a.terms_[i].mono > b.terms_[j].mono)) {
      r.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].mono > a.terms_[i].mono) {
      r.terms_.push_back(b.terms_[j++]);
    } else {
      Scalar c = a.terms_[i].coeff + b.terms_[j].coeff;
      if (!c.is_zero()) r.terms_.push_back({a.terms_[i].mono, c});
      ++i;
      ++j;
    }
  }
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + (-b);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  check_same_ambient(a, b);
  Field f = join(a.field_, b.field_);
  std::map<Monomial, Scalar, std::greater<>> acc;
  for (const auto& s : a.terms_)
    for (const auto& t : b.terms_) {
      Monomial m = s.mono * t.mono;
      auto [it, inserted] = acc.try_emplace(std::move(m), Scalar(0, f));
      it->second += s.coeff * t.coeff;
    }
  Polynomial r(a.nvars_, f);
  r.terms_.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (!c.is_zero()) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial r(nvars_, join(field_, c.field()));
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial r(nvars_, join(field_, c.field()));
  if (c.is_zero()) return r;
  r.terms_.reserve(terms_.size());
  // multiplying by a monomial preserves lex order
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(Scalar(1, field_), nvars_, field_);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& value) const {
  std::vector<Polynomial> images;
  images.reserve(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    images.push_back(i == var ? value : variable(i, nvars_, field_));
  return compose(images);
}

Polynomial Polynomial::compose(const std::vector<Polynomial>& images) const {
  if (images.size() != nvars_)
    throw DimensionMismatch("substitution needs one image per variable");
  const std::size_t target = images.empty() ? 0 : images[0].nvars();
  Field f = field_;
  for (const auto& im : images) f = join(f, im.field());
  Polynomial r(target, f);
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(nvars_);
  auto power_of = [&](std::size_t v, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(constant(Scalar(1, f), target, f));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };
  for (const auto& t : terms_) {
    Polynomial prod = constant(t.coeff, target, f);
    for (std::size_t v = 0; v < nvars_; ++v)
      if (t.mono[v] != 0) prod = prod * power_of(v, t.mono[v]);
    r += prod;
  }
  return r;
}

Polynomial Polynomial::extended(std::size_t nvars) const {
  if (nvars < nvars_) throw DimensionMismatch("cannot shrink ambient");
  Polynomial r(nvars, field_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono.extended(nvars), t.coeff});
  return r;
}

Polynomial Polynomial::remapped(const std::vector<std::size_t>& map,
                                std::size_t nvars) const {
  Polynomial r(nvars, field_);
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> e(nvars, 0);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (map[i] >= nvars) throw DimensionMismatch("variable dropped by remap");
      e[map[i]] += t.mono[i];
    }
    r.terms_.push_back({Monomial(std::move(e)), t.coeff});
  }
  r.normalize();
  return r;
}

Polynomial Polynomial::monic(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  return scaled(leading_term(ord).coeff.inverse());
}

mpz_class Polynomial::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& t : terms_) {
    mpz_class d = t.coeff.value().get_den();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return l;
}

Polynomial Polynomial::primitive(const MonomialOrder& ord) const {
  if (is_zero()) return *this;
  if (field_.p != 0) return monic(ord);
  mpz_class l = denominator_lcm();
  mpz_class g = 0;
  for (const auto& t : terms_) {
    mpz_class num = t.coeff.value().get_num() * (l / t.coeff.value().get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
  }
  mpq_class factor(l, g);
  factor.canonicalize();
  if (leading_term(ord).coeff.sign() < 0) factor = -factor;
  return scaled(Scalar::from_rational(factor));
}

Monomial Polynomial::monomial_content() const {
  if (terms_.empty()) return Monomial(nvars_);
  Monomial g = terms_[0].mono;
  for (const auto& t : terms_) g = g.gcd(t.mono);
  return g;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  Polynomial r(nvars_, field_);
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    std::vector<std::uint32_t> e(t.mono.exponents().begin(),
                                 t.mono.exponents().end());
    Scalar c = t.coeff * Scalar(static_cast<long>(e[var]), field_);
    --e[var];
    r.terms_.push_back({Monomial(std::move(e)), c});
  }
  r.normalize();
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono ||
        !(a.terms_[i].coeff == b.terms_[i].coeff))
      return false;
  return true;
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = a.terms_[i];
    const auto& t = b.terms_[i];
    if (s.mono != t.mono) return s.mono < t.mono;
    if (!(s.coeff == t.coeff)) return s.coeff.value() < t.coeff.value();
  }
  return a.terms_.size() < b.terms_.size();
}

std::string Polynomial::str(const VarNames& names,
                            const MonomialOrder& ord) const {
  if (names.size() != nvars_)
    throw DimensionMismatch("name list does not match ambient");
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : sorted_terms(ord)) {
    Scalar c = t.coeff;
    bool negative = field_.p == 0 && c.sign() < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    if (!c.is_one() || t.mono.is_one()) {
      os << c.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (t.mono[i] == 0) continue;
      if (wrote) os << '*';
      os << names[i];
      if (t.mono[i] > 1) os << '^' << t.mono[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace lu
