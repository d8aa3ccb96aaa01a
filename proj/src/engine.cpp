#include "paramax/engine.hpp"

#include <set>
#include <stdexcept>

#include "paramax/transfer.hpp"

namespace paramax {

void AnalysisConfig::validate() const {
  if (max_iterations == 0) throw std::invalid_argument("max_iterations must be positive");
  if (widening_delay && *widening_delay == 0) {
    throw std::invalid_argument("widening delay must be at least 1");
  }
  if (merge_budget && *merge_budget == 0) {
    throw std::invalid_argument("merge budget must be at least 1");
  }
}

namespace {

/// Worklist ordered by reverse post-order position.
template <class State, class Step, class Update, class Observer>
std::pair<std::size_t, bool> solve(const Cfg& cfg, const AnalysisConfig& config,
                                   std::vector<State>& states, Step&& step,
                                   Update&& update, const Observer& observe) {
  const auto& rpo = cfg.reverse_post_order();
  std::vector<std::size_t> pos(cfg.size(), 0);
  for (std::size_t i = 0; i < rpo.size(); ++i) pos[rpo[i]] = i;

  std::set<std::size_t> work;
  for (std::size_t i = 0; i < rpo.size(); ++i) work.insert(i);
  std::vector<std::size_t> visits(cfg.size(), 0);
  std::size_t iterations = 0;

  while (!work.empty()) {
    const NodeId v = rpo[*work.begin()];
    work.erase(work.begin());
    if (visits[v] >= config.max_iterations) return {iterations, false};
    ++visits[v];
    ++iterations;

    State next = step(states, v);
    if (config.widening_delay && cfg.is_loop_head(v) && visits[v] >= *config.widening_delay) {
      next = update.widen(states[v], next);
    }
    next = update.finish(states[v], std::move(next));
    if (observe) observe(v, states[v], next);
    if (next == states[v]) continue;
    states[v] = std::move(next);
    for (NodeId w : cfg.successors(v)) work.insert(pos[w]);
  }
  return {iterations, true};
}

struct BaselineUpdate {
  static IntervalEnv widen(const IntervalEnv& a, const IntervalEnv& b) {
    return paramax::widen(a, b);
  }
  static IntervalEnv finish(const IntervalEnv&, IntervalEnv next) { return next; }
};

struct ParamUpdate {
  const AnalysisConfig& config;

  static ParamState widen(const ParamState& a, const ParamState& b) {
    return widen_param(a, b);
  }
  [[nodiscard]] ParamState finish(const ParamState& old, ParamState next) const {
    if (!config.merge_budget) return next;
    ParamState acc = join_param(old, next);
    if (!config.normalize_before_reduce) acc = reduce_to_budget(acc, *config.merge_budget);
    return reduce_to_budget(normalize_inf(acc), *config.merge_budget);
  }
};

}  // namespace

IntervalEnv baseline_step(const Cfg& cfg, const std::vector<IntervalEnv>& states, NodeId v) {
  const std::size_t n = cfg.variable_count();
  if (v == cfg.entry()) return IntervalEnv::top(n);
  IntervalEnv acc = IntervalEnv::bottom(n);
  for (NodeId p : cfg.predecessors(v)) acc = join(acc, transfer(cfg, v, states[p]));
  return acc;
}

ParamState param_step(const Cfg& cfg, const std::vector<ParamState>& states, NodeId v) {
  const std::size_t n = cfg.variable_count();
  if (v == cfg.entry()) return ParamState::uniform(IntervalEnv::top(n));
  std::vector<ParamState> parts;
  parts.reserve(cfg.predecessors(v).size() + 1);
  parts.push_back(ParamState::uniform(IntervalEnv::bottom(n)));
  for (NodeId p : cfg.predecessors(v)) parts.push_back(transfer(cfg, v, states[p]));
  return join_param(parts);
}

AnalysisResult analyze_baseline(const Cfg& cfg, const AnalysisConfig& config,
                                const BaselineObserver& observe) {
  config.validate();
  AnalysisResult r;
  r.states.assign(cfg.size(), IntervalEnv::bottom(cfg.variable_count()));
  const auto [iters, ok] = solve(
      cfg, config, r.states,
      [&](const std::vector<IntervalEnv>& s, NodeId v) { return baseline_step(cfg, s, v); },
      BaselineUpdate{}, observe);
  r.iterations = iters;
  r.converged = ok;
  return r;
}

ParamAnalysisResult analyze_param(const Cfg& cfg, const AnalysisConfig& config,
                                  const ParamObserver& observe) {
  config.validate();
  check_width(cfg.assumption_count(), config.condition_width_cap);
  ParamAnalysisResult r;
  r.assumption_count = cfg.assumption_count();
  r.states.assign(cfg.size(), ParamState::uniform(IntervalEnv::bottom(cfg.variable_count())));
  const auto [iters, ok] = solve(
      cfg, config, r.states,
      [&](const std::vector<ParamState>& s, NodeId v) { return param_step(cfg, s, v); },
      ParamUpdate{config}, observe);
  r.iterations = iters;
  r.converged = ok;
  return r;
}

}  // namespace paramax
