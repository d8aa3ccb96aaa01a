#include "paramax/serialize.hpp"

namespace paramax {

namespace {

Json endpoint(Value v) {
  if (v == kNegInf) return "-inf";
  if (v == kPosInf) return "+inf";
  return v;
}

Json sets_json(const std::vector<AssumptionSet>& sets, const std::vector<std::string>& labels) {
  Json out = Json::array();
  for (auto s : sets) out.push_back(to_json(s, labels));
  return out;
}

}  // namespace

Json to_json(const Interval& i) { return Json::array({endpoint(i.lo), endpoint(i.hi)}); }

Json to_json(const IntervalEnv& s, VarNames names) {
  if (s.is_bottom()) return "bottom";
  Json out = Json::object();
  for (std::size_t v = 0; v < s.size(); ++v) {
    out[v < names.size() ? names[v] : "v" + std::to_string(v)] =
        to_json(s[static_cast<VarId>(v)]);
  }
  return out;
}

Json to_json(AssumptionSet s, const std::vector<std::string>& labels) {
  Json names = Json::array();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (s.contains(i)) names.push_back(labels[i]);
  }
  return {{"bits", s.bits()}, {"labels", std::move(names)}};
}

Json to_json(const ParamState& x, const Cfg& cfg) {
  const auto labels = cfg.assumption_labels();
  Json rules = Json::array();
  for (const auto& r : x.rules) {
    Json sets = Json::array();
    for (auto s : satisfying_sets(r.condition, cfg.assumption_count())) sets.push_back(s.bits());
    rules.push_back({{"condition", render(r.condition, labels)},
                     {"condition_sets", std::move(sets)},
                     {"state", to_json(r.state, cfg.variables())}});
  }
  return rules;
}

Json to_json(const AnalysisConfig& c) {
  Json out;
  out["max_iterations"] = c.max_iterations;
  out["widening"] = c.widening_delay ? Json(*c.widening_delay) : Json("off");
  out["merge_budget"] = c.merge_budget ? Json(*c.merge_budget) : Json(nullptr);
  out["condition_width_cap"] = c.condition_width_cap;
  return out;
}

Json analysis_document(const std::string& program, const Cfg& cfg,
                       const ParamAnalysisResult& r, const AnalysisConfig& config) {
  Json doc;
  doc["program"] = program;
  doc["variables"] = cfg.variables();
  doc["assumptions"] = cfg.assumption_labels();
  Json nodes = Json::array();
  for (const auto& n : cfg.nodes()) {
    Json node;
    node["id"] = n.id;
    node["kind"] = kind_name(n.kind);
    node["stmt"] = describe(cfg, n);
    node["line"] = n.line;
    node["rules"] = to_json(r.states.at(n.id), cfg);
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  doc["meta"] = {{"iterations", r.iterations},
                 {"converged", r.converged},
                 {"config", to_json(config)}};
  return doc;
}

Json to_json(const SynthesisOutcome& o, const Cfg& cfg) {
  const auto labels = cfg.assumption_labels();
  Json out;
  out["syn_condition"] = render(o.syn_condition, labels);
  out["verdict"] = to_string(o.verdict);
  out["solutions"] = sets_json(o.solutions, labels);
  out["truncated"] = o.truncated;
  out["minimal_solutions"] = sets_json(o.minimal_solutions, labels);
  out["inclusion_minimal"] = sets_json(o.inclusion_minimal, labels);
  Json asserts = Json::array();
  for (const auto& a : o.assertions) {
    Json rules = Json::array();
    for (const auto& r : a.rules) {
      rules.push_back({{"condition", render(r.condition, labels)}, {"proof", to_string(r.proof)}});
    }
    asserts.push_back({{"node", a.node}, {"rules", std::move(rules)}});
  }
  out["assertions"] = std::move(asserts);
  return out;
}

Json to_json(const SynthesisCheck& c, const Cfg& cfg) {
  const auto labels = cfg.assumption_labels();
  Json violations = Json::array();
  for (const auto& v : c.violations) {
    violations.push_back(
        {{"subset", to_json(v.subset, labels)}, {"node", v.node}, {"proof", to_string(v.proof)}});
  }
  return {{"checked", c.checked},
          {"violations", std::move(violations)},
          {"skipped", sets_json(c.skipped, labels)},
          {"passed", c.passed()}};
}

Json to_json(const ConsistencyReport& r, const Cfg& cfg) {
  const auto labels = cfg.assumption_labels();
  Json out;
  out["mu"] = to_json(r.mu, labels);
  out["nu"] = to_json(r.nu, labels);
  out["bounds_agree"] = r.bounds_agree;
  out["approximate"] = r.approximate;
  Json per = Json::array();
  for (std::size_t a = 0; a < r.classification.size(); ++a) {
    per.push_back({{"label", labels[a]},
                   {"classification", to_string(r.classification[a])},
                   {"refuting_condition", render(r.refuting[a], labels)}});
  }
  out["classification"] = std::move(per);
  if (r.phi_table) {
    Json table = Json::array();
    for (std::size_t bits = 0; bits < r.phi_table->size(); ++bits) {
      table.push_back(
          {{"set", to_json(AssumptionSet(static_cast<AssumptionSet::Bits>(bits)), labels)},
           {"phi", to_json((*r.phi_table)[bits], labels)}});
    }
    out["phi_table"] = std::move(table);
  }
  if (r.fixpoints) out["fixpoints"] = sets_json(*r.fixpoints, labels);
  return out;
}

Json to_json(const VerificationReport& r, const Cfg& cfg) {
  const auto labels = cfg.assumption_labels();
  Json mismatches = Json::array();
  for (const auto& m : r.mismatches) {
    mismatches.push_back({{"subset", to_json(m.subset, labels)},
                          {"node", m.node},
                          {"expected", m.expected},
                          {"actual", m.actual}});
  }
  return {{"theorem", r.theorem},
          {"program", r.program},
          {"mode", r.mode},
          {"subsets_checked", r.subsets_checked},
          {"mismatches", std::move(mismatches)},
          {"skipped", sets_json(r.skipped, labels)},
          {"partial", sets_json(r.partial, labels)},
          {"passed", r.passed()}};
}

}  // namespace paramax
