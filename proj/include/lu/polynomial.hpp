#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lu/scalar.hpp"

namespace lu {

using VarNames = std::vector<std::string>;

/// Exponent vector. Every exponent is capped at kMaxExponent; products that
/// would exceed it throw ExponentOverflow.
class Monomial {
 public:
  static constexpr std::uint32_t kMaxExponent = 65535;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);
  static Monomial variable(std::size_t index, std::size_t nvars,
                           std::uint32_t power = 1);

  std::size_t size() const { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  std::uint64_t degree() const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  /// `this / d`; requires d | this.
  Monomial quotient(const Monomial& d) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial extended(std::size_t nvars) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent vectors; used as the
  /// canonical storage order.
  friend auto operator<=>(const Monomial& a, const Monomial& b) {
    return a.exps_ <=> b.exps_;
  }

 private:
  std::vector<std::uint32_t> exps_;
};

enum class Cmp { LT, EQ, GT };

/// Monomial order: optional integer weight rows compared lexicographically,
/// then a base order (lex with x_1 > x_2 > ..., or degrevlex).
class MonomialOrder {
 public:
  enum class Base { Lex, DegRevLex };

  static MonomialOrder lex() { return MonomialOrder(Base::Lex, {}); }
  static MonomialOrder degrevlex() { return MonomialOrder(Base::DegRevLex, {}); }
  /// Rows of `weights` first, then `tie_break`.
  static MonomialOrder weighted(std::vector<std::vector<std::int64_t>> weights,
                                Base tie_break = Base::DegRevLex);
  /// Elimination order for the variables flagged in `drop`.
  static MonomialOrder elimination(const std::vector<bool>& drop);
  /// Product order: flagged block compared by degrevlex first, then the
  /// unflagged block by degrevlex.
  static MonomialOrder block(const std::vector<bool>& first_block);

  Cmp compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Cmp::GT;
  }

  Base base() const { return base_; }
  const std::vector<std::vector<std::int64_t>>& weights() const {
    return weights_;
  }
  /// Stable textual key, used for caching bases per order.
  std::string key() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

 private:
  MonomialOrder(Base base, std::vector<std::vector<std::int64_t>> weights)
      : base_(base), weights_(std::move(weights)) {}

  Base base_;
  std::vector<std::vector<std::int64_t>> weights_;
};

/// Throws DimensionMismatch when the lengths disagree with each other or
/// with the order's weight rows.
Cmp compare_monomials(const Monomial& a, const Monomial& b,
                      const MonomialOrder& ord);

struct Term {
  Monomial mono;
  Scalar coeff;
};

/// Sparse multivariate polynomial. Terms are stored with nonzero
/// coefficients in descending canonical (lex) order, so equal polynomials
/// have identical representations.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars, Field field = {})
      : nvars_(nvars), field_(field) {}
  static Polynomial constant(const Scalar& c, std::size_t nvars,
                             Field field = {});
  static Polynomial variable(std::size_t index, std::size_t nvars,
                             Field field = {});
  static Polynomial monomial(const Monomial& m, const Scalar& c,
                             Field field = {});
  /// Collects like terms and drops zeros.
  static Polynomial from_terms(std::vector<Term> terms, std::size_t nvars,
                               Field field = {});

  std::size_t nvars() const { return nvars_; }
  Field field() const { return field_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t total_degree() const;
  std::uint32_t degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  /// Constant term (zero when absent).
  Scalar constant_term() const;

  const Term& leading_term(const MonomialOrder& ord) const;
  std::vector<Term> sorted_terms(const MonomialOrder& ord) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;

  /// Replace variable `var` by `value` (same ambient).
  Polynomial substitute(std::size_t var, const Polynomial& value) const;
  /// Image under x_i -> images[i]; images share a target ambient.
  Polynomial compose(const std::vector<Polynomial>& images) const;
  /// Same polynomial in a larger ambient (new variables appended).
  Polynomial extended(std::size_t nvars) const;
  /// Variables renumbered by `map[i]` into an ambient of size `nvars`.
  Polynomial remapped(const std::vector<std::size_t>& map,
                      std::size_t nvars) const;

  /// Scale to make the leading coefficient (under ord) one.
  Polynomial monic(const MonomialOrder& ord) const;
  /// Over Q: integer coefficients with gcd 1 and positive leading
  /// coefficient under ord. Over F_p: monic.
  Polynomial primitive(const MonomialOrder& ord) const;
  /// Over Q: least positive integer making all coefficients integral.
  mpz_class denominator_lcm() const;
  /// Largest monomial dividing every term.
  Monomial monomial_content() const;
  /// Partial derivative in `var`.
  Polynomial derivative(std::size_t var) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);
  /// Canonical total order: by terms lexicographically.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

  /// Human-readable form in the parser grammar, terms descending under ord.
  /// Rational coefficients are written as "n/d"; call primitive() first when
  /// the text must round-trip through the parser.
  std::string str(const VarNames& names,
                  const MonomialOrder& ord = MonomialOrder::lex()) const;

 private:
  void normalize();

  std::size_t nvars_ = 0;
  Field field_;
  std::vector<Term> terms_;
};

/// Parse text in the polynomial grammar: integer literals, identifiers
/// [a-zA-Z][a-zA-Z0-9_]*, + - * ^ and parentheses; ^ binds tightest and
/// takes a non-negative integer exponent.
Polynomial parse_polynomial(const std::string& text, const VarNames& vars,
                            Field field = {});

}  // namespace lu
