#pragma once

/// @file synthesis.hpp
/// @brief Assumption synthesis: the subsets of assumptions under which the
///        analysis proves every assertion.

#include <cstddef>
#include <vector>

#include "paramax/condition.hpp"
#include "paramax/engine.hpp"

namespace paramax {

enum class Verdict { Solutions, Unknown, Impossible };
const char* to_string(Verdict v);

struct RuleVerdict {
  Condition condition;
  Proof proof = Proof::Unknown;
};

struct AssertionDetail {
  NodeId node = 0;
  std::vector<RuleVerdict> rules;
};

struct SynthesisOutcome {
  Condition syn_condition;
  Verdict verdict = Verdict::Unknown;
  /// Satisfying subsets, ascending, at most the enumeration cap.
  std::vector<AssumptionSet> solutions;
  bool truncated = false;
  /// Solutions of minimum cardinality.
  std::vector<AssumptionSet> minimal_solutions;
  /// Solutions with no proper subset among the solutions.
  std::vector<AssumptionSet> inclusion_minimal;
  std::vector<AssertionDetail> assertions;
  std::size_t assumption_count = 0;
};

inline constexpr std::size_t kDefaultSolutionCap = 256;

/// The assertions are checked on the node's state, which for an assert
/// node equals its pre-state.
SynthesisOutcome synthesize(const ParamAnalysisResult& param, const Cfg& cfg,
                            std::size_t solution_cap = kDefaultSolutionCap);

/// Minimum-cardinality solutions; throws std::logic_error unless the verdict
/// is Solutions.
std::vector<AssumptionSet> minimal_solutions(const SynthesisOutcome& outcome);

struct SynthesisViolation {
  AssumptionSet subset;
  NodeId node = 0;
  Proof proof = Proof::Unknown;
};

struct SynthesisCheck {
  std::size_t checked = 0;
  std::vector<SynthesisViolation> violations;
  /// Solutions whose baseline run did not converge.
  std::vector<AssumptionSet> skipped;

  [[nodiscard]] bool passed() const { return violations.empty() && skipped.empty(); }
};

/// Re-runs the baseline on each of the first `limit` solutions and checks
/// that every assertion is proved.
SynthesisCheck verify_synthesis(const Cfg& cfg, const SynthesisOutcome& outcome,
                                const AnalysisConfig& config, std::size_t limit = 8);

}  // namespace paramax
