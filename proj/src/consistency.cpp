#include "paramax/consistency.hpp"

#include <stdexcept>
#include <variant>

namespace paramax {

const char* to_string(Classification c) {
  switch (c) {
    case Classification::InEveryConsistentSet:
      return "in-every-consistent-set";
    case Classification::InSomeConsistentSet:
      return "in-some-consistent-set";
    case Classification::NeverConsistent:
      return "never-consistent";
  }
  return "?";
}

Condition refuting_condition(const ParamAnalysisResult& param, const Cfg& cfg, std::size_t a) {
  if (a >= cfg.assumption_count()) {
    throw std::out_of_range("unknown assumption index " + std::to_string(a));
  }
  const NodeId v = cfg.assumptions()[a].node;
  const auto& constraint = std::get<node::Assume>(cfg.node(v).kind).constraint;
  const AssumeState p = AssumeState::from(constraint);
  TruthTable t = TruthTable::constant(false);
  for (const auto& r : param.states.at(v).rules) {
    if (!feasible(r.state, p)) t = t | r.condition.table();
  }
  return Condition::from_table(t);
}

PhiOperator::PhiOperator(const ParamAnalysisResult& param, const Cfg& cfg) {
  for (std::size_t a = 0; a < cfg.assumption_count(); ++a) {
    refuting_.push_back(refuting_condition(param, cfg, a));
  }
}

AssumptionSet PhiOperator::operator()(AssumptionSet a) const {
  AssumptionSet out;
  for (std::size_t i = 0; i < refuting_.size(); ++i) {
    if (!eval(refuting_[i], a)) out = out.with(i);
  }
  return out;
}

AssumptionSet phi(const ParamAnalysisResult& param, const Cfg& cfg, AssumptionSet a) {
  return PhiOperator(param, cfg)(a);
}

Bounds bounds(const PhiOperator& phi) {
  AssumptionSet mu;
  for (;;) {
    const AssumptionSet next = phi(phi(mu));
    if (next == mu) break;
    mu = next;
  }
  AssumptionSet down = AssumptionSet::full(phi.width());
  for (;;) {
    const AssumptionSet next = phi(phi(down));
    if (next == down) break;
    down = next;
  }
  const AssumptionSet nu = phi(mu);
  return {mu, nu, nu == down};
}

Bounds bounds(const ParamAnalysisResult& param, const Cfg& cfg) {
  return bounds(PhiOperator(param, cfg));
}

std::vector<AssumptionSet> brute_force_fixpoints(const PhiOperator& phi) {
  if (phi.width() > kBruteForceLimit) {
    throw std::length_error("fixpoint enumeration is limited to " +
                            std::to_string(kBruteForceLimit) + " assumptions");
  }
  std::vector<AssumptionSet> out;
  for (AssumptionSet::Bits bits = 0; bits < (AssumptionSet::Bits{1} << phi.width()); ++bits) {
    const AssumptionSet a(bits);
    if (phi(a) == a) out.push_back(a);
  }
  return out;
}

std::vector<AssumptionSet> brute_force_fixpoints(const ParamAnalysisResult& param,
                                                 const Cfg& cfg) {
  return brute_force_fixpoints(PhiOperator(param, cfg));
}

ConsistencyReport report(const ParamAnalysisResult& param, const Cfg& cfg,
                         const ConsistencyOptions& options) {
  const PhiOperator op(param, cfg);
  const Bounds b = bounds(op);
  ConsistencyReport r;
  r.mu = b.mu;
  r.nu = b.nu;
  r.bounds_agree = b.agree;
  r.refuting = op.refuting_conditions();
  for (std::size_t a = 0; a < op.width(); ++a) {
    if (b.mu.contains(a)) {
      r.classification.push_back(Classification::InEveryConsistentSet);
    } else if (b.nu.contains(a)) {
      r.classification.push_back(Classification::InSomeConsistentSet);
    } else {
      r.classification.push_back(Classification::NeverConsistent);
    }
  }
  if (op.width() <= options.phi_table_limit) {
    std::vector<AssumptionSet> table;
    for (AssumptionSet::Bits bits = 0; bits < (AssumptionSet::Bits{1} << op.width()); ++bits) {
      table.push_back(op(AssumptionSet(bits)));
    }
    r.phi_table = std::move(table);
  }
  if (op.width() <= options.fixpoint_limit && op.width() <= kBruteForceLimit) {
    r.fixpoints = brute_force_fixpoints(op);
  }
  return r;
}

}  // namespace paramax
