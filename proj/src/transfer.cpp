#include "paramax/transfer.hpp"

#include <variant>

namespace paramax {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

IntervalEnv transfer(const Cfg& cfg, NodeId v, const IntervalEnv& s) {
  if (s.is_bottom()) return s;
  return std::visit(
      overloaded{
          [&](const node::Assign& a) { return s.with(a.var, evaluate(a.expr, s)); },
          [&](const node::Input& a) {
            return s.with(a.var, a.range ? Interval{a.range->lo, a.range->hi} : Interval::top());
          },
          [&](const node::Guard& a) { return refine(s, a.cond); },
          [&](const node::Assume& a) {
            return enforce(s, AssumeState::from(a.constraint));
          },
          [&](const auto&) { return s; },
      },
      cfg.node(v).kind);
}

ParamState transfer(const Cfg& cfg, NodeId v, const ParamState& x) {
  if (const auto* a = std::get_if<node::Assume>(&cfg.node(v).kind)) {
    return split(x, a->assumption, AssumeState::from(a->constraint));
  }
  return lift(x, [&](const IntervalEnv& s) { return transfer(cfg, v, s); });
}

}  // namespace paramax
