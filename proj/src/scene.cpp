#include "lu/scene.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace lu {

using json = nlohmann::ordered_json;

namespace {

struct Position {
  std::size_t line = 1, col = 1;
};

Position position_of(const std::string& text, std::size_t offset) {
  Position p;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.col = 1;
    } else {
      ++p.col;
    }
  }
  return p;
}

[[noreturn]] void fail_at(const std::string& text, std::size_t offset, const std::string& msg) {
  Position p = position_of(text, offset);
  throw SyntaxError(msg, p.line, p.col);
}

// offset of the quoted key, or 0
std::size_t key_offset(const std::string& text, const std::string& key) {
  auto at = text.find("\"" + key + "\"");
  return at == std::string::npos ? 0 : at;
}

const json& require(const std::string& text, const json& obj, const std::string& key) {
  if (!obj.contains(key)) fail_at(text, 0, "missing key \"" + key + "\"");
  return obj.at(key);
}

std::vector<Polynomial> polys(const std::string& text, const json& list, const std::string& key,
                              const VarNames& vars, Field field) {
  const std::size_t base = key_offset(text, key);
  if (!list.is_array()) fail_at(text, base, "\"" + key + "\" must be a list of strings");
  std::vector<Polynomial> out;
  std::size_t cursor = base;
  for (const auto& item : list) {
    if (!item.is_string()) fail_at(text, base, "\"" + key + "\" must be a list of strings");
    const std::string s = item.get<std::string>();
    auto at = text.find(json(s).dump(), cursor);
    if (at != std::string::npos) cursor = at;
    try {
      out.push_back(parse_polynomial(s, vars, field));
    } catch (const SyntaxError& e) {
      fail_at(text, at == std::string::npos ? base : at + e.col(),
              "bad polynomial \"" + s + "\" in \"" + key + "\"");
    } catch (const UnknownVariable& e) {
      fail_at(text, at == std::string::npos ? base : at + 1,
              std::string(e.what()) + " in \"" + key + "\"");
    }
  }
  return out;
}

json report_json(const IsoReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"witness", c.witness}});
  return {{"precondition", r.precondition},
          {"note", r.precondition_note},
          {"passed", r.passed()},
          {"checks", checks}};
}

json step_json(const LocalBlowup& B) {
  json a = json::array();
  for (const auto& x : B.a_list) a.push_back(emit(x, B.source.vars(), B.nu));
  return {{"b", emit(B.b, B.source.vars(), B.nu)},
          {"a_list", a},
          {"chart_vars", B.chart.vars()},
          {"chart_ideal_gb", emit_basis(B.chart.ideal(), B.chart.vars(), B.chart_nu)},
          {"center_gb", emit_basis(B.chart.center(), B.chart.vars(), B.chart_nu)},
          {"stabilization_N", B.stabilization_N},
          {"presentation", B.chart.str()}};
}

}  // namespace

Scene parse_scene(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    fail_at(text, e.byte == 0 ? 0 : e.byte - 1, "malformed JSON");
  }
  if (!doc.is_object()) fail_at(text, 0, "scene must be a JSON object");

  Field field;
  if (doc.contains("field")) {
    const json& f = doc["field"];
    if (f.is_string() && f.get<std::string>() == "Q") {
      field = Field{0};
    } else if (f.is_object() && f.contains("Fp") && f["Fp"].is_number_unsigned()) {
      field = Field{f["Fp"].get<std::uint32_t>()};
    } else {
      fail_at(text, key_offset(text, "field"), "field must be \"Q\" or {\"Fp\": p}");
    }
  }

  const json& jv = require(text, doc, "vars");
  if (!jv.is_array() || jv.empty()) fail_at(text, key_offset(text, "vars"), "vars must be a non-empty list");
  VarNames vars;
  for (const auto& v : jv) {
    if (!v.is_string()) fail_at(text, key_offset(text, "vars"), "vars must be strings");
    vars.push_back(v.get<std::string>());
  }
  const std::size_t n = vars.size();

  std::vector<Polynomial> gens;
  if (doc.contains("ideal")) gens = polys(text, doc["ideal"], "ideal", vars, field);
  std::vector<Polynomial> center;
  if (doc.contains("localize_at")) {
    center = polys(text, doc["localize_at"], "localize_at", vars, field);
  } else {
    for (std::size_t i = 0; i < n; ++i) center.push_back(Polynomial::variable(i, n, field));
  }

  const json& jval = require(text, doc, "valuation");
  const std::size_t vpos = key_offset(text, "valuation");
  if (!jval.is_object()) fail_at(text, vpos, "valuation must be an object");
  std::vector<Polynomial> support;
  if (jval.contains("support")) support = polys(text, jval["support"], "support", vars, field);
  const json& jw = require(text, jval, "weights");
  const std::size_t wpos = key_offset(text, "weights");
  if (!jw.is_array() || jw.empty()) fail_at(text, wpos, "weights must be a non-empty matrix");
  std::vector<std::vector<std::int64_t>> weights;
  for (const auto& row : jw) {
    if (!row.is_array() || row.size() != n)
      fail_at(text, wpos, "weight rows must have " + std::to_string(n) + " entries");
    std::vector<std::int64_t> r;
    for (const auto& c : row) {
      if (!c.is_number_integer()) fail_at(text, wpos, "weights must be integers");
      r.push_back(c.get<std::int64_t>());
    }
    weights.push_back(std::move(r));
  }
  if (jval.contains("rank")) {
    const json& k = jval["rank"];
    if (!k.is_number_unsigned() || k.get<std::size_t>() != weights.size())
      fail_at(text, key_offset(text, "rank"), "rank must equal the number of weight rows");
  }

  Scene s;
  s.ring = LocalRing(vars, Ideal(n, gens, field), Ideal(n, center, field));
  s.nu = certify_weight_valuation(s.ring, Ideal(n, support, field), std::move(weights));
  return s;
}

Scene load_scene(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scene(ss.str());
}

std::string emit(const Polynomial& f, const VarNames& vars, const WeightValuation& nu) {
  return f.str(vars, emission_order(nu));
}

std::vector<std::string> emit_basis(const Ideal& ideal, const VarNames& vars,
                                    const WeightValuation& nu) {
  return ideal.basis_strings(vars, emission_order(nu));
}

std::string blowup_json(const LocalBlowup& blowup) { return step_json(blowup).dump(2) + "\n"; }

std::string trace_json(const ReductionTrace& t) {
  json steps = json::array();
  for (const auto& s : t.steps) {
    json j = {{"label", s.label}, {"clause", s.clause}};
    const json data = step_json(s.blowup);
    for (const auto& [k, v] : data.items()) j[k] = v;
    j["ass_count"] = s.ass_count;
    j["ass_is_nilradical"] = s.ass_is_nilradical;
    j["report"] = report_json(s.report);
    steps.push_back(std::move(j));
  }
  json fin = {{"vars", t.final.vars()},
              {"ideal_gb", emit_basis(t.final.ideal(), t.final.vars(), t.final_nu)},
              {"center_gb", emit_basis(t.final.center(), t.final.vars(), t.final_nu)},
              {"presentation", t.final.str()},
              {"regular", t.final_regular},
              {"normally_flat", t.final_flatness.yes},
              {"N", t.final_flatness.N}};
  json doc = {{"steps", steps},
              {"final", fin},
              {"verdict", verdict_name(t.verdict)},
              {"reason", t.reason},
              {"ass_sequence", t.ass_sequence}};
  return doc.dump(2) + "\n";
}

Replay replay_trace(const Scene& scene, const std::string& trace_text) {
  json doc;
  try {
    doc = json::parse(trace_text);
  } catch (const json::parse_error& e) {
    fail_at(trace_text, e.byte == 0 ? 0 : e.byte - 1, "malformed trace");
  }
  Replay r;
  r.final = scene.ring;
  r.final_nu = scene.nu;
  for (const auto& step : doc.at("steps")) {
    const VarNames& vars = r.final.vars();
    const Field field = r.final.field();
    Polynomial b = parse_polynomial(step.at("b").get<std::string>(), vars, field);
    std::vector<Polynomial> a;
    for (const auto& x : step.at("a_list")) a.push_back(parse_polynomial(x.get<std::string>(), vars, field));
    auto chart_vars = step.at("chart_vars").get<VarNames>();
    if (chart_vars.size() != vars.size() + a.size())
      throw DimensionMismatch("trace step has inconsistent chart variables");
    VarNames names(chart_vars.begin() + static_cast<long>(vars.size()), chart_vars.end());
    LocalBlowup B = local_blowup(r.final, r.final_nu, b, a, names);
    r.final = B.chart;
    r.final_nu = B.chart_nu;
  }
  r.final_gb = emit_basis(r.final.ideal(), r.final.vars(), r.final_nu);
  return r;
}

}  // namespace lu
