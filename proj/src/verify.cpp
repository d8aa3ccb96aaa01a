#include "paramax/verify.hpp"

namespace paramax {

namespace {

std::string render_concrete(const ConcreteState& s, VarNames names) {
  std::string out;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (v) out += ", ";
    out += (v < names.size() ? names[v] : "v" + std::to_string(v)) + "=" + std::to_string(s[v]);
  }
  return out;
}

}  // namespace

VerificationReport verify_theorem1(const Cfg& cfg, const AnalysisConfig& config,
                                   const std::string& program) {
  return verify_theorem1(cfg, config, analyze_param(cfg, config), program);
}

VerificationReport verify_theorem1(const Cfg& cfg, const AnalysisConfig& config,
                                   const ParamAnalysisResult& param,
                                   const std::string& program) {
  VerificationReport rep;
  rep.theorem = "theorem1";
  rep.program = program;
  const bool exact = !config.widening_delay && !config.merge_budget;
  rep.mode = exact ? "equality" : "containment";
  const std::size_t width = cfg.assumption_count();
  const std::uint64_t subsets = std::uint64_t{1} << width;
  const auto& names = cfg.variables();

  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const AssumptionSet a(static_cast<AssumptionSet::Bits>(bits));
    ++rep.subsets_checked;
    if (!param.converged) {
      rep.skipped.push_back(a);
      continue;
    }
    const AnalysisResult base = analyze_baseline(restrict(cfg, a), config);
    if (!base.converged) {
      rep.skipped.push_back(a);
      continue;
    }
    for (NodeId v = 0; v < cfg.size(); ++v) {
      const IntervalEnv got = rho(param.states[v], a);
      const bool ok = exact ? got == base.states[v] : leq(base.states[v], got);
      if (!ok) rep.mismatches.push_back({a, v, render(base.states[v], names), render(got, names)});
    }
  }
  return rep;
}

VerificationReport verify_soundness(const Cfg& cfg, const AnalysisConfig& config,
                                    const CollectingConfig& collecting,
                                    const std::string& program) {
  return verify_soundness(cfg, analyze_param(cfg, config), collecting, program);
}

VerificationReport verify_soundness(const Cfg& cfg, const ParamAnalysisResult& param,
                                    const CollectingConfig& collecting,
                                    const std::string& program) {
  VerificationReport rep;
  rep.theorem = "soundness";
  rep.program = program;
  rep.mode = "membership";
  const std::uint64_t subsets = std::uint64_t{1} << cfg.assumption_count();
  const auto& names = cfg.variables();

  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    const AssumptionSet a(static_cast<AssumptionSet::Bits>(bits));
    ++rep.subsets_checked;
    if (!param.converged) {
      rep.skipped.push_back(a);
      continue;
    }
    const CollectingResult cs = run_collecting(restrict(cfg, a), collecting);
    if (cs.truncated) rep.partial.push_back(a);
    for (NodeId v = 0; v < cfg.size(); ++v) {
      const IntervalEnv abs = rho(param.states[v], a);
      for (const auto& s : cs.states[v]) {
        if (gamma_contains(abs, s)) continue;
        rep.mismatches.push_back({a, v, render_concrete(s, names), render(abs, names)});
      }
    }
  }
  return rep;
}

}  // namespace paramax
