#pragma once

#include <functional>
#include <string>
#include <vector>

#include "lu/blowup.hpp"
#include "lu/errors.hpp"

namespace lu {

inline constexpr unsigned kDefaultBudget = 32;

/// Thrown inside the pipeline when the blowup budget runs out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

struct TraceStep {
  /// ass-prime, trim, regularize, normal-flat or oracle.
  std::string label;
  LocalBlowup blowup;
  /// Center isomorphism checks against nu1 (skipped when not compatible).
  IsoReport report;
  /// Which hypothesis admitted the blowup.
  std::string clause;
  /// Associated primes of the chart inside its center.
  std::size_t ass_count = 0;
  /// The unique associated prime is the nilradical.
  bool ass_is_nilradical = false;
};

enum class Verdict { Uniformized, Unsupported, BudgetExceeded };
std::string verdict_name(Verdict v);

struct ReductionTrace {
  std::vector<TraceStep> steps;
  LocalRing final;
  WeightValuation final_nu;
  Verdict verdict = Verdict::Unsupported;
  std::string reason;
  /// |Ass| before and after each step-1 blowup.
  std::vector<std::size_t> ass_sequence;
  bool final_regular = false;
  NormalFlatness final_flatness;
};

/// A stretch of the trace together with where it ends.
struct Segment {
  std::vector<TraceStep> steps;
  LocalRing ring;
  WeightValuation nu;
  std::vector<std::size_t> ass_counts;
  /// Step-2 output: local parameters generating the center of nu1.
  std::vector<Polynomial> parameters;
  std::vector<CheckEntry> checks;
};

struct OracleResult {
  bool supported = true;
  std::string reason;
  /// Consecutive blowups, the first starting at the given ring.
  std::vector<LocalBlowup> blowups;
};

/// Local uniformization for rank-one valuations; `budget` bounds the
/// number of blowups it may return (exceeding it throws BudgetExceeded).
using RankOneUniformizer =
    std::function<OracleResult(const LocalRing&, const WeightValuation&, unsigned budget)>;

/// Blow up along an associated prime outside the support until the local
/// ring has one associated prime.
Segment step1_unique_associated_prime(const LocalRing& ring, const WeightValuation& nu,
                                      unsigned budget = kDefaultBudget);

/// Blowups along (b, y_1..y_r) until local parameters y of the reduced ring
/// at p = center(nu1) generate p at the center. `parameters` holds y.
Segment trim_center_generators(const LocalRing& ring, const WeightValuation& nu,
                               const WeightValuation& nu1, unsigned budget = kDefaultBudget);

/// Trim, then check that the reduced ring is regular with r + t = dim.
Segment step2_make_red_regular(const LocalRing& ring, const WeightValuation& nu,
                               const WeightValuation& nu1, unsigned budget = kDefaultBudget);

/// Blowups along (b, basis of I^n / I^(n+1)) until normally flat.
Segment step3_make_normally_flat(const LocalRing& ring, const WeightValuation& nu,
                                 const WeightValuation& nu1, unsigned budget = kDefaultBudget);

/// Euclidean descent on the values of variable pairs; for rank one and a
/// defining ideal generated by monomials and binomials.
OracleResult toric_uniformizer(const LocalRing& ring, const WeightValuation& nu,
                               unsigned budget = kDefaultBudget);

ReductionTrace run_reduction(const LocalRing& ring, const WeightValuation& nu,
                             const RankOneUniformizer& oracle = toric_uniformizer,
                             unsigned budget = kDefaultBudget);

/// Lex order with variables sorted by decreasing value (infinity first,
/// ties by index); used for every polynomial the trace emits.
MonomialOrder emission_order(const WeightValuation& nu);

}  // namespace lu
