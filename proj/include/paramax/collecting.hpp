#pragma once

/// @file collecting.hpp
/// @brief Explicit-state collecting semantics over bounded inputs.

#include <cstddef>
#include <set>
#include <vector>

#include "paramax/ast.hpp"
#include "paramax/cfg.hpp"
#include "paramax/interval.hpp"

namespace paramax {

struct CollectingConfig {
  /// Values drawn by every input() site without its own `in [lo, hi]`.
  InputRange input_range{-8, 8};
  /// Maximum path length in nodes.
  std::size_t step_bound = 100000;
};

struct CollectingResult {
  /// Post-states per node id.
  std::vector<std::set<ConcreteState>> states;
  /// Some path was cut at the step bound or left the 64-bit range.
  bool truncated = false;
};

/// Variables start at 0. Assume nodes drop states violating their
/// constraint, guards drop states failing their comparison.
CollectingResult run_collecting(const Cfg& cfg, const CollectingConfig& config = {});

}  // namespace paramax
