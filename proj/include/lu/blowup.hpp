#pragma once

#include <string>
#include <vector>

#include "lu/valuation.hpp"

namespace lu {

/// One named check of a verification report.
struct CheckEntry {
  std::string name;
  bool passed = false;
  std::string witness;
};

struct IsoReport {
  /// False when the precondition failed and the checks were skipped.
  bool precondition = true;
  std::string precondition_note;
  std::vector<CheckEntry> checks;

  bool passed() const;
  std::string str() const;
};

/// The chart of the blowup of `source` along (b, a_1..a_r) selected by nu:
/// new variables t_i = a_i / b appended after the source variables, the
/// defining ideal saturated at b, localized at the center of the transported
/// valuation.
struct LocalBlowup {
  LocalRing source;
  WeightValuation nu;
  Polynomial b;
  std::vector<Polynomial> a_list;
  LocalRing chart;
  WeightValuation chart_nu;
  /// Least N with (J : b^N) = (J : b^(N+1)) for the lifted ideal J.
  unsigned stabilization_N = 0;

  std::size_t source_nvars() const { return source.nvars(); }
  /// Images of the source variables in the chart (themselves).
  std::vector<Polynomial> map() const;
};

/// Fresh variable names for r chart variables: "t" for a single one, else
/// "t1".."tr", skipping names already in use.
VarNames chart_variable_names(const VarNames& taken, std::size_t r);

LocalBlowup local_blowup(const LocalRing& source, const WeightValuation& nu,
                         const Polynomial& b, const std::vector<Polynomial>& a_list,
                         VarNames new_names = {});

/// The single blowup of B1.source whose chart equals B2.chart, along
/// (b*beta, a_i*beta, alpha_j*b) where beta / b^e and alpha_j / b^e are the
/// pullbacks of B2's data. Verified by mutual containment of the chart
/// ideals under the variable identification.
LocalBlowup compose(const LocalBlowup& first, const LocalBlowup& second);

/// mu(b) = 0 and mu(a_i) > 0 for all i.
bool is_compatible(const LocalBlowup& blowup, const WeightValuation& mu);

/// Instance checks that R/p -> R1/p1 and R_p -> (R1)_p1 are isomorphisms,
/// p and p1 the centers of nu1 on source and chart.
IsoReport verify_center_isos(const LocalBlowup& blowup, const WeightValuation& nu1);

/// True when every generator of `a` lies in `b` after localizing at `center`,
/// and conversely.
bool locally_equal(const Ideal& a, const Ideal& b, const Ideal& center);

struct Fraction {
  Polynomial num;
  Polynomial den;
};

struct LiftedBlowup {
  LocalBlowup blowup;
  /// True when the lift exchanged b with the a_i of least value.
  bool swapped = false;
  IsoReport report;
};

/// Lift a blowup of R_p given by fractions with denominators outside p.
/// Denominators are cleared; if nu(a_i) < nu(b) for some i the a_i of least
/// value (smallest index on ties) is exchanged with b.
LiftedBlowup lift_from_localization(const LocalRing& ring, const WeightValuation& nu,
                                    const WeightValuation& nu1, const Ideal& p,
                                    const Fraction& b, const std::vector<Fraction>& a_list);

/// Lift a blowup of R/p given by representatives outside p; verifies
/// R1/p1 = the quotient chart and R_p = (R1)_p1.
LiftedBlowup lift_from_quotient(const LocalRing& ring, const WeightValuation& nu,
                                const WeightValuation& nu1, const Ideal& p,
                                const Polynomial& b, const std::vector<Polynomial>& a_list);

}  // namespace lu
