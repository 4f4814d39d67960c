#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lu/local_ring.hpp"

namespace lu {

/// Element of Z^k (lex order) or the value infinity.
class ValueVector {
 public:
  ValueVector() = default;
  explicit ValueVector(std::vector<std::int64_t> v) : v_(std::move(v)) {}
  static ValueVector zero(std::size_t k) { return ValueVector(std::vector<std::int64_t>(k, 0)); }
  static ValueVector infinity(std::size_t k) {
    ValueVector r(std::vector<std::int64_t>(k, 0));
    r.inf_ = true;
    return r;
  }

  bool is_infinite() const { return inf_; }
  std::size_t size() const { return v_.size(); }
  const std::vector<std::int64_t>& components() const { return v_; }
  /// Lexicographically positive (infinity counts as positive).
  bool positive() const;
  bool is_zero() const;
  /// First r components; infinity stays infinity.
  ValueVector truncated(std::size_t r) const;

  friend ValueVector operator+(const ValueVector& a, const ValueVector& b);
  /// Requires b finite.
  friend ValueVector operator-(const ValueVector& a, const ValueVector& b);
  friend std::strong_ordering operator<=>(const ValueVector& a, const ValueVector& b);
  friend bool operator==(const ValueVector& a, const ValueVector& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

  /// "(1,0)" or "inf".
  std::string str() const;

 private:
  std::vector<std::int64_t> v_;
  bool inf_ = false;
};

/// Weight valuation of rank k: nu(f) is the lex-minimum of W * e over the
/// monomials x^e of the normal form of f modulo the support. Certified when
/// the support is a W-homogeneous prime (so it is its own W-initial ideal)
/// and a minimal prime of the host ring.
class WeightValuation {
 public:
  WeightValuation() = default;

  std::size_t rank() const { return weights_.size(); }
  std::size_t nvars() const { return support_.nvars(); }
  const Ideal& support() const { return support_; }
  /// Weight matrix, one row per rank component; support variables carry 0.
  const std::vector<std::vector<std::int64_t>>& weights() const { return weights_; }
  /// Value of each variable (infinity for variables in the support).
  const std::vector<ValueVector>& variable_values() const { return var_values_; }
  const MonomialOrder& order() const { return order_; }

  ValueVector value_of(const Polynomial& f) const;
  /// Index minimizing the value, ties broken by smallest index.
  std::size_t argmin(const std::vector<Polynomial>& fs) const;

 private:
  friend WeightValuation certify_weight_valuation(const LocalRing&, const Ideal&,
                                                  std::vector<std::vector<std::int64_t>>,
                                                  unsigned, bool);
  Ideal support_;
  std::vector<std::vector<std::int64_t>> weights_;
  std::vector<ValueVector> var_values_;
  MonomialOrder order_ = MonomialOrder::degrevlex();
};

/// Seed for every sampled axiom check.
inline constexpr std::uint64_t kSampleSeed = 0xC0FFEE;

/// Certifies V4 (support is a minimal prime of the defining ideal), the
/// initial-ideal condition, V3, centering, and V1/V2 on `sample_pairs`
/// pseudo-random pairs of degree <= 4. Throws CertificationError naming the
/// failed axiom. The support is taken together with the defining ideal.
/// Centering is skipped when `check_centering` is false (the center of a
/// chart is only known once the valuation is).
WeightValuation certify_weight_valuation(const LocalRing& ring, const Ideal& support,
                                         std::vector<std::vector<std::int64_t>> weights,
                                         unsigned sample_pairs = 200,
                                         bool check_centering = true);

/// nu >= 0 on the ring and nu > 0 on the center generators.
void check_centering(const WeightValuation& nu, const LocalRing& ring);

struct AxiomReport {
  unsigned pairs = 0;
  unsigned v1_failures = 0;
  unsigned v2_failures = 0;
  std::string first_failure;
};

/// V1 exactly and V2 with equality whenever the two values differ, on
/// pseudo-random pairs outside the support.
AxiomReport check_axioms(const WeightValuation& nu, const LocalRing& ring, unsigned pairs,
                         std::uint64_t seed = kSampleSeed);

/// {f : nu(f) > 0}: support plus the variables of positive value, verified
/// prime.
Ideal center_ideal(const WeightValuation& nu, const LocalRing& ring);

struct Decomposition {
  WeightValuation nu1;
  /// Center of nu1 on the ring.
  Ideal center1;
  /// R / center1 at the original center.
  LocalRing quotient;
  /// Remaining rows, on the quotient.
  WeightValuation nu2;
};

/// nu = nu1 o nu2 with nu1 the first r rows.
Decomposition decompose(const WeightValuation& nu, const LocalRing& ring, std::size_t r);

/// Restricts nu to the first r rows on the same ring.
WeightValuation truncate(const WeightValuation& nu, const LocalRing& ring, std::size_t r);

/// The valuation on a chart with variables x, t_1..t_r (t_i = a_i / b):
/// old weights kept, weight of t_i = nu(a_i) - nu(b), support saturated at b.
/// `chart` has the source variables first; its center is ignored.
WeightValuation transport(const WeightValuation& nu, const LocalRing& chart,
                          const Polynomial& b, const std::vector<Polynomial>& a_list);

}  // namespace lu
