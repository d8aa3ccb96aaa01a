#include "paramax/collecting.hpp"

#include <deque>
#include <stdexcept>
#include <variant>

namespace paramax {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

/// Concrete successors of `s` through node v; throws std::overflow_error
/// when an assignment leaves the 64-bit range.
std::vector<ConcreteState> step(const Cfg& cfg, NodeId v, const ConcreteState& s,
                                const CollectingConfig& config) {
  return std::visit(
      overloaded{
          [&](const node::Assign& a) {
            ConcreteState t = s;
            t[a.var] = evaluate(a.expr, s);
            return std::vector<ConcreteState>{std::move(t)};
          },
          [&](const node::Input& a) {
            const InputRange r = a.range.value_or(config.input_range);
            std::vector<ConcreteState> out;
            for (Value x = r.lo;; ++x) {
              ConcreteState t = s;
              t[a.var] = x;
              out.push_back(std::move(t));
              if (x == r.hi) break;
            }
            return out;
          },
          [&](const node::Guard& a) {
            return holds(a.cond, s) ? std::vector<ConcreteState>{s}
                                    : std::vector<ConcreteState>{};
          },
          [&](const node::Assume& a) {
            return holds(a.constraint, s) ? std::vector<ConcreteState>{s}
                                          : std::vector<ConcreteState>{};
          },
          [&](const auto&) { return std::vector<ConcreteState>{s}; },
      },
      cfg.node(v).kind);
}

}  // namespace

CollectingResult run_collecting(const Cfg& cfg, const CollectingConfig& config) {
  if (config.input_range.lo > config.input_range.hi) {
    throw std::invalid_argument("input range is empty");
  }
  CollectingResult r;
  r.states.resize(cfg.size());
  struct Item {
    NodeId node;
    const ConcreteState* state;
    std::size_t depth;
  };
  std::deque<Item> queue;
  const auto it = r.states[cfg.entry()].insert(ConcreteState(cfg.variable_count(), 0)).first;
  queue.push_back({cfg.entry(), &*it, 1});

  while (!queue.empty()) {
    const Item cur = queue.front();
    queue.pop_front();
    for (NodeId w : cfg.successors(cur.node)) {
      std::vector<ConcreteState> next;
      try {
        next = step(cfg, w, *cur.state, config);
      } catch (const std::overflow_error&) {
        r.truncated = true;
        continue;
      }
      for (auto& t : next) {
        if (r.states[w].count(t)) continue;
        if (cur.depth >= config.step_bound) {
          r.truncated = true;
          continue;
        }
        const auto pos = r.states[w].insert(std::move(t)).first;
        queue.push_back({w, &*pos, cur.depth + 1});
      }
    }
  }
  return r;
}

}  // namespace paramax
