#pragma once

/// @file engine.hpp
/// @brief Worklist fixpoint solvers for the baseline and the parameterized
///        analysis.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "paramax/cfg.hpp"
#include "paramax/interval.hpp"
#include "paramax/param_state.hpp"

namespace paramax {

struct AnalysisConfig {
  /// Cap on evaluations of any single node.
  std::size_t max_iterations = 1000;
  /// Widen at loop heads from this visit onward; unset means no widening.
  std::optional<std::size_t> widening_delay;
  /// Maximum rule count per node in the parameterized analysis.
  std::optional<std::size_t> merge_budget;
  std::size_t condition_width_cap = 16;
  /// Bring states to normal form before reducing them to the budget.
  bool normalize_before_reduce = true;

  /// Throws std::invalid_argument on a zero iteration cap, delay or budget.
  void validate() const;
};

struct AnalysisResult {
  /// C_v per node id.
  std::vector<IntervalEnv> states;
  /// Total node evaluations.
  std::size_t iterations = 0;
  bool converged = false;
};

struct ParamAnalysisResult {
  std::vector<ParamState> states;
  std::size_t iterations = 0;
  bool converged = false;
  std::size_t assumption_count = 0;
};

/// Called after each evaluation with the node, its old and its new state.
using BaselineObserver =
    std::function<void(NodeId, const IntervalEnv&, const IntervalEnv&)>;
using ParamObserver = std::function<void(NodeId, const ParamState&, const ParamState&)>;

AnalysisResult analyze_baseline(const Cfg& cfg, const AnalysisConfig& config = {},
                                const BaselineObserver& observe = {});

/// Throws WidthExceeded when the program has more assumptions than the cap.
ParamAnalysisResult analyze_param(const Cfg& cfg, const AnalysisConfig& config = {},
                                  const ParamObserver& observe = {});

/// Right-hand side of the equation for v: the entry gets top, every other
/// node the join over predecessors of t_v applied to their states.
IntervalEnv baseline_step(const Cfg& cfg, const std::vector<IntervalEnv>& states, NodeId v);
/// Parameterized right-hand side, in normal form.
ParamState param_step(const Cfg& cfg, const std::vector<ParamState>& states, NodeId v);

}  // namespace paramax
