#include "paramax/synthesis.hpp"

#include <limits>
#include <stdexcept>
#include <variant>

namespace paramax {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Solutions:
      return "solutions";
    case Verdict::Unknown:
      return "unknown";
    case Verdict::Impossible:
      return "impossible";
  }
  return "?";
}

SynthesisOutcome synthesize(const ParamAnalysisResult& param, const Cfg& cfg,
                            std::size_t solution_cap) {
  SynthesisOutcome out;
  const std::size_t width = cfg.assumption_count();
  out.assumption_count = width;

  TruthTable syn = TruthTable::constant(true);
  TruthTable refuted = TruthTable::constant(false);
  for (NodeId v : cfg.assert_nodes()) {
    const auto& expr = std::get<node::Assert>(cfg.node(v).kind).expr;
    AssertionDetail detail{v, {}};
    TruthTable proved_here = TruthTable::constant(false);
    for (const auto& r : param.states.at(v).rules) {
      const Proof p = proves(r.state, expr);
      detail.rules.push_back({r.condition, p});
      if (p == Proof::Proved) proved_here = proved_here | r.condition.table();
      if (p == Proof::Refuted) refuted = refuted | r.condition.table();
    }
    syn = syn & proved_here;
    out.assertions.push_back(std::move(detail));
  }
  out.syn_condition = Condition::from_table(syn);

  if (!syn.any()) {
    out.verdict = refuted.all() ? Verdict::Impossible : Verdict::Unknown;
    return out;
  }
  out.verdict = Verdict::Solutions;

  const std::uint64_t subsets = std::uint64_t{1} << width;
  std::size_t min_card = std::numeric_limits<std::size_t>::max();
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    if (!syn.get(bits)) continue;
    const AssumptionSet a(static_cast<AssumptionSet::Bits>(bits));
    if (out.solutions.size() < solution_cap) {
      out.solutions.push_back(a);
    } else {
      out.truncated = true;
    }
    min_card = std::min(min_card, a.size());
  }
  for (std::uint64_t bits = 0; bits < subsets; ++bits) {
    if (!syn.get(bits)) continue;
    const AssumptionSet a(static_cast<AssumptionSet::Bits>(bits));
    if (a.size() == min_card && out.minimal_solutions.size() < solution_cap) {
      out.minimal_solutions.push_back(a);
    }
    bool minimal = true;
    for (std::uint64_t sub = (bits - 1) & bits; bits != 0; sub = (sub - 1) & bits) {
      if (syn.get(sub)) {
        minimal = false;
        break;
      }
      if (sub == 0) break;
    }
    if (minimal && out.inclusion_minimal.size() < solution_cap) {
      out.inclusion_minimal.push_back(a);
    }
  }
  return out;
}

std::vector<AssumptionSet> minimal_solutions(const SynthesisOutcome& outcome) {
  if (outcome.verdict != Verdict::Solutions) {
    throw std::logic_error("minimal solutions requested for a synthesis without solutions");
  }
  return outcome.minimal_solutions;
}

SynthesisCheck verify_synthesis(const Cfg& cfg, const SynthesisOutcome& outcome,
                                const AnalysisConfig& config, std::size_t limit) {
  SynthesisCheck check;
  const auto asserts = cfg.assert_nodes();
  for (std::size_t i = 0; i < outcome.solutions.size() && i < limit; ++i) {
    const AssumptionSet a = outcome.solutions[i];
    ++check.checked;
    const AnalysisResult base = analyze_baseline(restrict(cfg, a), config);
    if (!base.converged) {
      check.skipped.push_back(a);
      continue;
    }
    for (NodeId v : asserts) {
      const auto& expr = std::get<node::Assert>(cfg.node(v).kind).expr;
      const Proof p = proves(base.states[v], expr);
      if (p != Proof::Proved) check.violations.push_back({a, v, p});
    }
  }
  return check;
}

}  // namespace paramax
