#pragma once

/// @file transfer.hpp
/// @brief Node transformers t_v and their parameterized lifting.

#include "paramax/cfg.hpp"
#include "paramax/interval.hpp"
#include "paramax/param_state.hpp"

namespace paramax {

/// Baseline transformer of node v. Assume nodes enforce their constraint.
IntervalEnv transfer(const Cfg& cfg, NodeId v, const IntervalEnv& s);

/// Parameterized transformer: assume nodes split on their assumption, every
/// other node transforms each rule's state. The result is not normalized.
ParamState transfer(const Cfg& cfg, NodeId v, const ParamState& x);

}  // namespace paramax
