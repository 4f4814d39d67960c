#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lu/polynomial.hpp"

namespace lu {

/// Budgets for a single Groebner computation. Exceeding either raises
/// ResourceLimit.
struct Limits {
  std::size_t max_spair_reductions = 10000;
  std::size_t max_term_operations = 1000000;
  /// Recursion depth for prime splitting and primary decomposition.
  std::size_t max_split_depth = 16;
};

/// Process-wide limits; mutate at start-up, before concurrent use.
Limits& limits();

/// Reduced Groebner basis of the ideal generated by `gens`, monic, sorted by
/// descending leading monomial.
std::vector<Polynomial> buchberger(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord);

/// Remainder of f modulo a reduced Groebner basis (full reduction).
Polynomial reduce(const Polynomial& f, const std::vector<Polynomial>& basis,
                  const MonomialOrder& ord);

/// Ideal of a polynomial ring k[x_1..x_n]. Immutable; Groebner bases are
/// computed lazily, at most once per order, and shared between copies.
class Ideal {
 public:
  Ideal() : Ideal(0, {}) {}
  Ideal(std::size_t nvars, std::vector<Polynomial> gens, Field field = {});
  static Ideal zero(std::size_t nvars, Field field = {}) {
    return Ideal(nvars, {}, field);
  }
  static Ideal unit(std::size_t nvars, Field field = {});

  std::size_t nvars() const { return nvars_; }
  Field field() const { return field_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  /// Cached reduced Groebner basis under `ord`.
  const std::vector<Polynomial>& basis(
      const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  bool is_unit() const;
  bool is_zero() const;
  /// Zero generators dropped, duplicates removed.
  Ideal simplified() const;

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;
  Ideal with(const Polynomial& f) const;
  Ideal with(const std::vector<Polynomial>& fs) const;
  Ideal power(unsigned n) const;
  Ideal extended(std::size_t nvars) const;
  Ideal remapped(const std::vector<std::size_t>& map, std::size_t nvars) const;

  friend bool operator==(const Ideal& a, const Ideal& b);

  /// Reduced basis under `ord`, primitive, one string per element.
  std::vector<std::string> basis_strings(
      const VarNames& names,
      const MonomialOrder& ord = MonomialOrder::degrevlex()) const;
  std::string str(const VarNames& names,
                  const MonomialOrder& ord = MonomialOrder::degrevlex()) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::vector<Polynomial>> bases;
  };

  std::size_t nvars_;
  Field field_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

std::vector<Polynomial> groebner_basis(const Ideal& ideal,
                                       const MonomialOrder& ord);
Polynomial normal_form(const Polynomial& f, const Ideal& ideal,
                       const MonomialOrder& ord = MonomialOrder::degrevlex());

Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals);

/// (I : f). Throws ZeroDivisorQueryOnZero for f = 0.
Ideal colon_ideal(const Ideal& ideal, const Polynomial& f);
Ideal colon_ideal(const Ideal& ideal, const Ideal& other);

struct Saturation {
  Ideal ideal;
  /// Least N with (I : f^N) = (I : f^(N+1)).
  unsigned exponent = 0;
};
Saturation saturation(const Ideal& ideal, const Polynomial& f);

/// I intersected with the subring on the variables not flagged in `drop`.
Ideal eliminate(const Ideal& ideal, const std::vector<bool>& drop);
Ideal eliminate(const Ideal& ideal, const VarNames& names,
                const VarNames& drop_vars);

/// Krull dimension of k[x]/I via a maximal independent set of the initial
/// ideal. Returns -1 for the unit ideal.
int krull_dimension(const Ideal& ideal);
/// A maximal independent set (flags over variables) of largest size.
std::vector<bool> max_independent_set(const Ideal& ideal);

/// Outcome of a primality test. NotPrime carries f, g with f*g in I and
/// neither f nor g in I.
struct PrimeVerdict {
  enum class Kind { Prime, NotPrime, Unknown };
  Kind kind = Kind::Unknown;
  std::optional<Polynomial> f;
  std::optional<Polynomial> g;
  std::string reason;

  bool prime() const { return kind == Kind::Prime; }
};

/// Decides primality on the supported classes: ideals that reduce, after
/// eliminating variables that occur linearly, to the zero ideal, to a
/// principal ideal of degree <= 3 in <= 2 variables, to a binomial ideal
/// with saturated lattice, or to a univariate ideal of degree <= 8.
/// Anything else yields Unknown. Requires I proper.
PrimeVerdict is_prime(const Ideal& ideal);

/// Minimal primes of I, sorted by reduced basis. Throws UnsupportedInstance
/// when a component escapes the classes is_prime decides.
std::vector<Ideal> minimal_primes(const Ideal& ideal);

Ideal radical(const Ideal& ideal);

struct PrimaryComponent {
  Ideal primary;
  Ideal prime;
};
/// Irredundant primary decomposition with distinct primes.
std::vector<PrimaryComponent> primary_decomposition(const Ideal& ideal);

/// Ass(k[x]/I), sorted by reduced basis, no duplicates.
std::vector<Ideal> associated_primes(const Ideal& ideal);

/// Module syzygies of `gens` modulo `modulus`: every returned vector c
/// satisfies sum c_i gens_i in modulus, and they generate all such vectors.
std::vector<std::vector<Polynomial>> syzygies(
    const std::vector<Polynomial>& gens, const Ideal& modulus);

/// Deterministic sort key for ideals (reduced degrevlex basis, lex-compared).
bool ideal_less(const Ideal& a, const Ideal& b);

}  // namespace lu
