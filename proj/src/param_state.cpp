#include "paramax/param_state.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>

namespace paramax {

namespace {

struct Cell {
  TruthTable table;
  IntervalEnv state;
};

/// Groups cells by state, drops empty ones and emits canonical rules.
ParamState from_cells(std::vector<Cell> cells) {
  std::map<IntervalEnv, TruthTable> groups;
  for (auto& c : cells) {
    if (!c.table.any()) continue;
    auto [it, fresh] = groups.try_emplace(std::move(c.state), c.table);
    if (!fresh) it->second = it->second | c.table;
  }
  std::vector<std::pair<std::uint64_t, Rule>> keyed;
  keyed.reserve(groups.size());
  for (auto& [state, table] : groups) {
    keyed.push_back({*table.first(), {Condition::from_table(table), state}});
  }
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  ParamState out;
  out.rules.reserve(keyed.size());
  for (auto& k : keyed) out.rules.push_back(std::move(k.second));
  return out;
}

std::vector<Cell> cells_of(const ParamState& x) {
  std::vector<Cell> out;
  out.reserve(x.rules.size());
  for (const auto& r : x.rules) out.push_back({r.condition.table(), r.state});
  return out;
}

/// Common refinement of two partitions, combining states with `f`. Walks the
/// assignments of each cell of `a` through an owner table for `b`.
template <class F>
std::vector<Cell> refine_cells(const std::vector<Cell>& a, const ParamState& b, F&& f) {
  std::size_t vars = 0;
  for (const auto& c : a) vars = std::max(vars, c.table.vars());
  for (const auto& r : b.rules) vars = std::max(vars, r.condition.table().vars());
  constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> owner(std::size_t{1} << vars, kNone);
  for (std::uint32_t j = 0; j < b.rules.size(); ++j) {
    b.rules[j].condition.table().for_each_set(vars, [&](std::uint64_t idx) { owner[idx] = j; });
  }
  const TruthTable empty = TruthTable::constant(false).extended(vars);
  std::vector<Cell> out;
  std::vector<std::uint32_t> slot(b.rules.size());
  for (const auto& c : a) {
    std::fill(slot.begin(), slot.end(), kNone);
    c.table.for_each_set(vars, [&](std::uint64_t idx) {
      const std::uint32_t j = owner[idx];
      if (j == kNone) return;
      if (slot[j] == kNone) {
        slot[j] = static_cast<std::uint32_t>(out.size());
        out.push_back({empty, f(c.state, b.rules[j].state)});
      }
      out[slot[j]].table.set(idx);
    });
  }
  return out;
}

std::uint64_t width_of(const Interval& i) {
  return static_cast<std::uint64_t>(i.hi) - static_cast<std::uint64_t>(i.lo);
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  return s < a ? std::numeric_limits<std::uint64_t>::max() : s;
}

}  // namespace

ParamState ParamState::uniform(IntervalEnv s) {
  return ParamState{{Rule{Condition::truth(), std::move(s)}}};
}

IntervalEnv rho(const ParamState& x, AssumptionSet a) {
  const Rule* hit = nullptr;
  for (const auto& r : x.rules) {
    if (!eval(r.condition, a)) continue;
    if (hit) throw std::logic_error("parameterized state: overlapping rule conditions");
    hit = &r;
  }
  if (!hit) throw std::logic_error("parameterized state: no rule covers the assumption set");
  return hit->state;
}

bool is_partition(const ParamState& x, std::size_t width) {
  TruthTable seen = TruthTable::constant(false);
  for (const auto& r : x.rules) {
    const auto& t = r.condition.table();
    if (t.vars() > width) return false;
    if (seen.intersects(t)) return false;
    seen = seen | t;
  }
  return seen.extended(width).all();
}

std::optional<ParamState> exact_merge_step(const ParamState& x) {
  for (std::size_t i = 0; i < x.rules.size(); ++i) {
    for (std::size_t j = i + 1; j < x.rules.size(); ++j) {
      if (x.rules[i].state != x.rules[j].state) continue;
      ParamState out = x;
      out.rules[i].condition = x.rules[i].condition | x.rules[j].condition;
      out.rules.erase(out.rules.begin() + static_cast<std::ptrdiff_t>(j));
      return out;
    }
  }
  return std::nullopt;
}

std::optional<ParamState> redundancy_elim_step(const ParamState& x) {
  for (std::size_t i = 0; i < x.rules.size(); ++i) {
    if (sat(x.rules[i].condition)) continue;
    ParamState out = x;
    out.rules.erase(out.rules.begin() + static_cast<std::ptrdiff_t>(i));
    return out;
  }
  return std::nullopt;
}

ParamState normalize_inf(const ParamState& x) { return from_cells(cells_of(x)); }

ParamState canonicalize(const ParamState& x) {
  std::vector<std::pair<std::uint64_t, Rule>> keyed;
  for (const auto& r : x.rules) {
    const auto first = r.condition.table().first();
    keyed.push_back({first ? *first : std::numeric_limits<std::uint64_t>::max(),
                     {Condition::from_table(r.condition.table()), r.state}});
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  ParamState out;
  for (auto& k : keyed) out.rules.push_back(std::move(k.second));
  return out;
}

ParamState split(const ParamState& x, std::size_t a, const AssumeState& p) {
  const TruthTable atom = TruthTable::variable(a);
  const TruthTable neg = ~atom;
  ParamState out;
  for (const auto& r : x.rules) {
    const TruthTable accepted = r.condition.table() & atom;
    if (accepted.any()) out.rules.push_back({Condition::from_table(accepted), enforce(r.state, p)});
    const TruthTable rejected = r.condition.table() & neg;
    if (rejected.any()) out.rules.push_back({Condition::from_table(rejected), r.state});
  }
  return out;
}

ParamState join_param(std::span<const ParamState> xs) {
  if (xs.empty()) throw std::invalid_argument("join of no parameterized states");
  std::vector<Cell> cells = cells_of(xs.front());
  for (std::size_t k = 1; k < xs.size(); ++k) {
    cells = refine_cells(cells, xs[k], [](const IntervalEnv& a, const IntervalEnv& b) {
      return join(a, b);
    });
  }
  return from_cells(std::move(cells));
}

ParamState join_param(const ParamState& a, const ParamState& b) {
  const ParamState xs[] = {a, b};
  return join_param(std::span<const ParamState>(xs));
}

bool leq_param(const ParamState& x, const ParamState& y) {
  for (const auto& rx : x.rules) {
    for (const auto& ry : y.rules) {
      if (!rx.condition.table().intersects(ry.condition.table())) continue;
      if (!leq(rx.state, ry.state)) return false;
    }
  }
  return true;
}

ParamState approx_merge(const ParamState& x, std::size_t i, std::size_t j) {
  if (i >= x.rules.size() || j >= x.rules.size()) {
    throw std::out_of_range("approximate merge: rule index out of range");
  }
  if (i == j) throw std::invalid_argument("approximate merge: a rule cannot merge with itself");
  if (i > j) std::swap(i, j);
  ParamState out = x;
  out.rules[i] = {x.rules[i].condition | x.rules[j].condition,
                  join(x.rules[i].state, x.rules[j].state)};
  out.rules.erase(out.rules.begin() + static_cast<std::ptrdiff_t>(j));
  return out;
}

Loss loss(const IntervalEnv& a, const IntervalEnv& b) {
  if (a.is_bottom() || b.is_bottom()) return {};
  const IntervalEnv j = join(a, b);
  Loss out;
  for (std::size_t v = 0; v < j.size(); ++v) {
    const auto id = static_cast<VarId>(v);
    const Interval& x = a[id];
    const Interval& y = b[id];
    const Interval& z = j[id];
    if (!z.bounded_below() && x.bounded_below() && y.bounded_below()) ++out.infinities;
    if (!z.bounded_above() && x.bounded_above() && y.bounded_above()) ++out.infinities;
    if (!z.bounded_below() || !z.bounded_above()) continue;
    const std::uint64_t grown = width_of(z) - std::max(width_of(x), width_of(y));
    out.width = saturating_add(out.width, grown);
  }
  return out;
}

ParamState reduce_to_budget(const ParamState& x, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("rule budget must be at least 1");
  ParamState cur = x;
  while (cur.rules.size() > budget) {
    std::size_t bi = 0;
    std::size_t bj = 1;
    std::optional<Loss> best;
    for (std::size_t i = 0; i < cur.rules.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.rules.size(); ++j) {
        const Loss l = loss(cur.rules[i].state, cur.rules[j].state);
        if (!best || l < *best) {
          best = l;
          bi = i;
          bj = j;
        }
      }
    }
    cur = normalize_inf(approx_merge(cur, bi, bj));
  }
  return cur;
}

ParamState widen_param(const ParamState& prev, const ParamState& next) {
  return from_cells(refine_cells(cells_of(prev), next,
                                 [](const IntervalEnv& a, const IntervalEnv& b) {
                                   return widen(a, b);
                                 }));
}

std::string render(const ParamState& x, const std::vector<std::string>& labels,
                   VarNames names) {
  std::string out;
  for (const auto& r : x.rules) {
    out += render(r.condition, labels);
    out += " -> ";
    out += render(r.state, names);
    out += '\n';
  }
  return out;
}

}  // namespace paramax
