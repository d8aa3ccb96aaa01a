#pragma once

/// @file param_state.hpp
/// @brief Parameterized states: finite rule sets whose conditions partition
///        the subsets of the program's assumptions.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paramax/assumption_set.hpp"
#include "paramax/condition.hpp"
#include "paramax/interval.hpp"

namespace paramax {

struct Rule {
  Condition condition;
  IntervalEnv state;

  friend bool operator==(const Rule&, const Rule&) = default;
};

struct ParamState {
  std::vector<Rule> rules;

  /// The single rule (true, s).
  static ParamState uniform(IntervalEnv s);

  friend bool operator==(const ParamState&, const ParamState&) = default;
};

/// The state of the unique rule whose condition `a` satisfies. Throws
/// std::logic_error when zero or several rules apply.
IntervalEnv rho(const ParamState& x, AssumptionSet a);

/// Conditions pairwise disjoint and jointly covering all subsets of a
/// universe of `width` assumptions.
bool is_partition(const ParamState& x, std::size_t width);

/// Merges the first pair of rules with equal states into (phi_i | phi_j, s).
std::optional<ParamState> exact_merge_step(const ParamState& x);
/// Removes the first rule with an unsatisfiable condition.
std::optional<ParamState> redundancy_elim_step(const ParamState& x);

/// Injective normal form: distinct states, satisfiable conditions, each
/// condition in canonical form, rules ordered by their smallest satisfying
/// assumption set.
ParamState normalize_inf(const ParamState& x);

/// Rewrites every condition in canonical form and sorts the rules; does not
/// merge or drop rules.
ParamState canonicalize(const ParamState& x);

/// Assume-node transformer for assumption `a` with constraint `p`.
ParamState split(const ParamState& x, std::size_t a, const AssumeState& p);

/// Pointwise join, in normal form.
ParamState join_param(std::span<const ParamState> xs);
ParamState join_param(const ParamState& a, const ParamState& b);

bool leq_param(const ParamState& x, const ParamState& y);

/// Replaces rules i and j by (phi_i | phi_j, s_i join s_j); the merged rule
/// takes the position of the lower index. Throws std::out_of_range on bad
/// indices and std::invalid_argument when i == j.
ParamState approx_merge(const ParamState& x, std::size_t i, std::size_t j);

/// Precision lost by joining two states, compared lexicographically.
struct Loss {
  /// Endpoints that become infinite although finite in both inputs.
  std::uint64_t infinities = 0;
  /// Sum over variables of the finite width growth; saturates.
  std::uint64_t width = 0;

  friend bool operator==(const Loss&, const Loss&) = default;
  friend auto operator<=>(const Loss&, const Loss&) = default;
};

Loss loss(const IntervalEnv& a, const IntervalEnv& b);

/// Greedy approximate merging down to at most `budget` rules; the pair with
/// the least loss goes first, ties to the lowest index pair. Throws
/// std::invalid_argument when budget is 0.
ParamState reduce_to_budget(const ParamState& x, std::size_t budget);

/// Widening applied on every cell of the common refinement of the two
/// partitions, in normal form.
ParamState widen_param(const ParamState& prev, const ParamState& next);

/// Applies a state transformer to every rule.
template <class F>
ParamState lift(const ParamState& x, F&& f) {
  ParamState out;
  out.rules.reserve(x.rules.size());
  for (const auto& r : x.rules) out.rules.push_back({r.condition, f(r.state)});
  return out;
}

/// One line per rule, `condition -> state`.
std::string render(const ParamState& x, const std::vector<std::string>& labels,
                   VarNames names);

}  // namespace paramax
