#include "lu/valuation.hpp"

#include <algorithm>
#include <random>

#include "lu/errors.hpp"

namespace lu {

bool ValueVector::positive() const {
  if (inf_) return true;
  for (auto c : v_)
    if (c != 0) return c > 0;
  return false;
}

bool ValueVector::is_zero() const {
  return !inf_ && std::all_of(v_.begin(), v_.end(), [](std::int64_t c) { return c == 0; });
}

ValueVector ValueVector::truncated(std::size_t r) const {
  if (inf_) return infinity(r);
  return ValueVector(std::vector<std::int64_t>(v_.begin(), v_.begin() + static_cast<long>(r)));
}

ValueVector operator+(const ValueVector& a, const ValueVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("values of different rank");
  if (a.inf_ || b.inf_) return ValueVector::infinity(a.size());
  ValueVector r = a;
  for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] += b.v_[i];
  return r;
}

ValueVector operator-(const ValueVector& a, const ValueVector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("values of different rank");
  if (b.inf_) throw PreconditionError("subtracting an infinite value");
  if (a.inf_) return a;
  ValueVector r = a;
  for (std::size_t i = 0; i < r.v_.size(); ++i) r.v_[i] -= b.v_[i];
  return r;
}

std::strong_ordering operator<=>(const ValueVector& a, const ValueVector& b) {
  if (a.inf_ || b.inf_) return a.inf_ <=> b.inf_;
  return a.v_ <=> b.v_;
}

std::string ValueVector::str() const {
  if (inf_) return "inf";
  std::string s = "(";
  for (std::size_t i = 0; i < v_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v_[i]);
  }
  return s + ")";
}

ValueVector WeightValuation::value_of(const Polynomial& f) const {
  const std::size_t k = rank();
  Polynomial nf = normal_form(f, support_, order_);
  if (nf.is_zero()) return ValueVector::infinity(k);
  std::optional<ValueVector> best;
  for (const auto& t : nf.terms()) {
    std::vector<std::int64_t> v(k, 0);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        v[r] += weights_[r][i] * static_cast<std::int64_t>(t.mono[i]);
    ValueVector vv(std::move(v));
    if (!best || vv < *best) best = std::move(vv);
  }
  return *best;
}

std::size_t WeightValuation::argmin(const std::vector<Polynomial>& fs) const {
  std::size_t best = 0;
  ValueVector bv = value_of(fs.at(0));
  for (std::size_t i = 1; i < fs.size(); ++i) {
    ValueVector v = value_of(fs[i]);
    if (v < bv) {
      bv = v;
      best = i;
    }
  }
  return best;
}

namespace {

bool homogeneous(const Polynomial& g, const std::vector<std::vector<std::int64_t>>& w) {
  std::optional<std::vector<std::int64_t>> deg;
  for (const auto& t : g.terms()) {
    std::vector<std::int64_t> d(w.size(), 0);
    for (std::size_t r = 0; r < w.size(); ++r)
      for (std::size_t i = 0; i < t.mono.size(); ++i)
        d[r] += w[r][i] * static_cast<std::int64_t>(t.mono[i]);
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

Polynomial sample(std::mt19937_64& rng, std::size_t nvars, Field field) {
  std::uniform_int_distribution<int> nterms(1, 4), coef(-5, 5), deg(0, 4);
  std::vector<Term> terms;
  const int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<std::uint32_t> e(nvars, 0);
    const int d = deg(rng);
    for (int j = 0; j < d; ++j) ++e[rng() % nvars];
    int c = coef(rng);
    if (c == 0) c = 1;
    terms.push_back({Monomial(e), Scalar(c, field)});
  }
  return Polynomial::from_terms(terms, nvars, field);
}

}  // namespace

void check_centering(const WeightValuation& nu, const LocalRing& ring) {
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    const ValueVector& v = nu.variable_values()[i];
    if (!v.is_infinite() && !v.positive() && !v.is_zero())
      throw CertificationError("centering", "negative value on variable " + ring.vars()[i]);
  }
  for (const auto& g : ring.center().basis())
    if (!nu.value_of(g).positive())
      throw CertificationError("centering",
                               "center element " + g.str(ring.vars()) + " has value " +
                                   nu.value_of(g).str());
}

WeightValuation certify_weight_valuation(const LocalRing& ring, const Ideal& support_in,
                                         std::vector<std::vector<std::int64_t>> weights,
                                         unsigned sample_pairs, bool centering) {
  const std::size_t n = ring.nvars();
  if (weights.empty()) throw DimensionMismatch("valuation of rank zero");
  for (const auto& row : weights)
    if (row.size() != n) throw DimensionMismatch("weight row length differs from variable count");
  if (support_in.nvars() != n) throw DimensionMismatch("support in a different ambient");

  WeightValuation nu;
  nu.support_ = Ideal(n, (support_in + ring.ideal()).basis(), ring.field());
  if (nu.support_.is_unit()) throw CertificationError("V4", "support is the unit ideal");

  // V4: a prime, minimal over the defining ideal
  PrimeVerdict pv = is_prime(nu.support_);
  if (!pv.prime())
    throw CertificationError("V4", "support is not prime" +
                                       (pv.f ? ": " + pv.f->str(ring.vars()) + " * " +
                                                   pv.g->str(ring.vars())
                                             : std::string(" (undecided)")));
  bool minimal = false;
  for (const auto& p : minimal_primes(ring.ideal()))
    if (p == nu.support_) minimal = true;
  if (!minimal) throw CertificationError("V4", "support is not a minimal prime");

  // support variables get weight zero; their value is infinity anyway
  const std::size_t k = weights.size();
  nu.var_values_.clear();
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial x = Polynomial::variable(i, n, ring.field());
    if (nu.support_.contains(x)) {
      for (auto& row : weights) row[i] = 0;
      nu.var_values_.push_back(ValueVector::infinity(k));
    } else {
      std::vector<std::int64_t> v(k);
      for (std::size_t r = 0; r < k; ++r) v[r] = weights[r][i];
      nu.var_values_.emplace_back(std::move(v));
    }
  }
  nu.weights_ = std::move(weights);
  // columns must be lex-nonnegative (charts produce entries like (1,-2))
  for (const auto& v : nu.var_values_)
    if (!v.is_infinite() && !v.is_zero() && !v.positive())
      throw CertificationError("centering", "negative weight on a variable");
  nu.order_ = MonomialOrder::weighted(nu.weights_);

  // the support must equal its W-initial ideal
  for (const auto& g : nu.support_.basis(nu.order_))
    if (!homogeneous(g, nu.weights_))
      throw CertificationError("initial-ideal",
                               "support element " + g.str(ring.vars()) + " is not W-homogeneous");

  const Polynomial one = Polynomial::constant(1, n, ring.field());
  if (!nu.value_of(one).is_zero() || !nu.value_of(Polynomial(n, ring.field())).is_infinite())
    throw CertificationError("V3", "nu(1) != 0 or nu(0) != inf");

  if (centering) check_centering(nu, ring);

  if (sample_pairs > 0) {
    AxiomReport rep = check_axioms(nu, ring, sample_pairs);
    if (rep.v1_failures) throw CertificationError("V1", rep.first_failure);
    if (rep.v2_failures) throw CertificationError("V2", rep.first_failure);
  }
  return nu;
}

AxiomReport check_axioms(const WeightValuation& nu, const LocalRing& ring, unsigned pairs,
                         std::uint64_t seed) {
  AxiomReport rep;
  std::mt19937_64 rng(seed);
  const std::size_t n = ring.nvars();
  unsigned attempts = 0;
  while (rep.pairs < pairs && attempts < 20 * pairs) {
    ++attempts;
    Polynomial f = sample(rng, n, ring.field()), g = sample(rng, n, ring.field());
    ValueVector vf = nu.value_of(f), vg = nu.value_of(g);
    if (vf.is_infinite() || vg.is_infinite()) continue;
    ++rep.pairs;
    if (nu.value_of(f * g) != vf + vg) {
      ++rep.v1_failures;
      if (rep.first_failure.empty())
        rep.first_failure = "nu(f*g) != nu(f) + nu(g) for f = " + f.str(ring.vars()) +
                            ", g = " + g.str(ring.vars());
    }
    ValueVector vs = nu.value_of(f + g);
    ValueVector lo = std::min(vf, vg);
    if (vs < lo || (vf != vg && vs != lo)) {
      ++rep.v2_failures;
      if (rep.first_failure.empty())
        rep.first_failure = "value of f + g violates the ultrametric inequality for f = " +
                            f.str(ring.vars()) + ", g = " + g.str(ring.vars());
    }
  }
  return rep;
}

Ideal center_ideal(const WeightValuation& nu, const LocalRing& ring) {
  const std::size_t n = ring.nvars();
  std::vector<Polynomial> gens = nu.support().generators();
  for (std::size_t i = 0; i < n; ++i)
    if (nu.variable_values()[i].positive() && !nu.variable_values()[i].is_infinite())
      gens.push_back(Polynomial::variable(i, n, ring.field()));
  Ideal c(n, gens, ring.field());
  c = Ideal(n, c.basis(), ring.field());
  if (c.is_unit() || !is_prime(c).prime())
    throw UnsupportedInstance("center candidate is not prime");
  for (const auto& g : c.basis())
    if (!nu.value_of(g).positive())
      throw UnsupportedInstance("center generator without positive value");
  // elements outside the candidate must have value zero
  std::mt19937_64 rng(kSampleSeed);
  for (int k = 0; k < 50; ++k) {
    Polynomial f = sample(rng, n, ring.field());
    if (!c.contains(f) && !nu.value_of(f).is_zero())
      throw UnsupportedInstance("element outside the center candidate has positive value");
  }
  return c;
}

WeightValuation truncate(const WeightValuation& nu, const LocalRing& ring, std::size_t r) {
  if (r == 0 || r > nu.rank()) throw PreconditionError("truncation rank out of range");
  std::vector<std::vector<std::int64_t>> rows(nu.weights().begin(),
                                              nu.weights().begin() + static_cast<long>(r));
  return certify_weight_valuation(ring, nu.support(), rows, 0, false);
}

Decomposition decompose(const WeightValuation& nu, const LocalRing& ring, std::size_t r) {
  if (r == 0 || r >= nu.rank()) throw PreconditionError("decomposition needs 1 <= r < rank");
  Decomposition d;
  d.nu1 = truncate(nu, ring, r);
  d.center1 = center_ideal(d.nu1, ring);
  d.quotient = LocalRing::trusted(ring.vars(), d.center1, ring.center());
  std::vector<std::vector<std::int64_t>> rest(nu.weights().begin() + static_cast<long>(r),
                                              nu.weights().end());
  d.nu2 = certify_weight_valuation(d.quotient, d.center1, rest, 0, true);
  return d;
}

WeightValuation transport(const WeightValuation& nu, const LocalRing& chart,
                          const Polynomial& b, const std::vector<Polynomial>& a_list) {
  const std::size_t n = nu.nvars();
  const std::size_t m = chart.nvars();
  if (m != n + a_list.size()) throw DimensionMismatch("chart variable count");
  const ValueVector vb = nu.value_of(b);
  if (vb.is_infinite()) throw SupportDivision("b lies in the support");

  std::vector<std::vector<std::int64_t>> w(nu.rank(), std::vector<std::int64_t>(m, 0));
  for (std::size_t r = 0; r < nu.rank(); ++r)
    for (std::size_t i = 0; i < n; ++i) w[r][i] = nu.weights()[r][i];

  std::vector<Polynomial> support;
  for (const auto& g : nu.support().generators()) support.push_back(g.extended(m));
  const Polynomial bx = b.extended(m);
  for (std::size_t j = 0; j < a_list.size(); ++j) {
    const ValueVector va = nu.value_of(a_list[j]);
    if (va < vb) throw ValueInequalityViolated("nu(a_" + std::to_string(j + 1) + ") < nu(b)");
    Polynomial t = Polynomial::variable(n + j, m, chart.field());
    support.push_back(bx * t - a_list[j].extended(m));
    if (!va.is_infinite()) {
      ValueVector d = va - vb;
      for (std::size_t r = 0; r < nu.rank(); ++r) w[r][n + j] = d.components()[r];
    }
  }
  Ideal p = saturation(Ideal(m, support, chart.field()), bx).ideal;
  return certify_weight_valuation(chart, p, w, 0, false);
}

}  // namespace lu
