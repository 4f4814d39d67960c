#pragma once

#include <string>
#include <vector>

#include "lu/pipeline.hpp"

namespace lu {

/// A certified ring and valuation read from a scene file.
struct Scene {
  LocalRing ring;
  WeightValuation nu;
};

/// Scene JSON: {"field": "Q" | {"Fp": p}, "vars": [...], "ideal": [...],
/// "localize_at": [...], "valuation": {"support": [...], "weights": [[...]],
/// "rank": k}}. Polynomials are strings. Throws IoError, SyntaxError with the
/// position in the text, or CertificationError.
Scene load_scene(const std::string& path);
Scene parse_scene(const std::string& text);

/// Polynomials in the emission order of nu.
std::string emit(const Polynomial& f, const VarNames& vars, const WeightValuation& nu);
std::vector<std::string> emit_basis(const Ideal& ideal, const VarNames& vars,
                                    const WeightValuation& nu);

/// Trace JSON, two-space indented, keys in schema order, newline-terminated.
std::string trace_json(const ReductionTrace& trace);

/// One blowup as a trace step object (used by the blowup command).
std::string blowup_json(const LocalBlowup& blowup);

struct Replay {
  LocalRing final;
  WeightValuation final_nu;
  std::vector<std::string> final_gb;
};

/// Re-runs the blowups of a trace from the scene and returns the final
/// presentation.
Replay replay_trace(const Scene& scene, const std::string& trace_text);

}  // namespace lu
