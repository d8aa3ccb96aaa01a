#include "paramax/interval.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paramax {

namespace {

constexpr Value kMaxFinite = kPosInf - 1;
constexpr Value kMinFinite = kNegInf + 1;

// Lower bounds round toward -inf, upper bounds toward +inf.
Value add_lo(Value a, Value b) {
  if (a == kNegInf || b == kNegInf) return kNegInf;
  Value r;
  if (__builtin_add_overflow(a, b, &r)) return a > 0 ? kMaxFinite : kNegInf;
  return r == kPosInf ? kMaxFinite : r;
}

Value add_hi(Value a, Value b) {
  if (a == kPosInf || b == kPosInf) return kPosInf;
  Value r;
  if (__builtin_add_overflow(a, b, &r)) return a > 0 ? kPosInf : kMinFinite;
  return r == kNegInf ? kMinFinite : r;
}

bool is_inf(Value v) { return v == kNegInf || v == kPosInf; }

Value mul_lo(Value x, Value c) {
  if (is_inf(x)) return ((x > 0) == (c > 0)) ? kMaxFinite : kNegInf;
  Value r;
  if (__builtin_mul_overflow(x, c, &r)) {
    return ((x > 0) == (c > 0)) ? kMaxFinite : kNegInf;
  }
  return r == kPosInf ? kMaxFinite : r;
}

Value mul_hi(Value x, Value c) {
  if (is_inf(x)) return ((x > 0) == (c > 0)) ? kPosInf : kMinFinite;
  Value r;
  if (__builtin_mul_overflow(x, c, &r)) {
    return ((x > 0) == (c > 0)) ? kPosInf : kMinFinite;
  }
  return r == kNegInf ? kMinFinite : r;
}

void check_universe(const IntervalEnv& a, const IntervalEnv& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("mismatched variable universes");
  }
}

Interval operand_interval(const Operand& o, const IntervalEnv& s) {
  return o.is_var ? s[o.var] : Interval::point(o.value);
}

bool same_variable(const Comparison& c) {
  return c.lhs.is_var && c.rhs.is_var && c.lhs.var == c.rhs.var;
}

// x rel x + k
bool self_comparison_holds(Rel rel, Value k) {
  switch (rel) {
    case Rel::Le: return 0 <= k;
    case Rel::Ge: return 0 >= k;
    case Rel::Eq: return k == 0;
    case Rel::Ne: return k != 0;
  }
  return false;
}

bool disjoint(const Interval& a, const Interval& b) {
  return a.hi < b.lo || b.hi < a.lo;
}

// Removes `v` from `i` when it sits on an endpoint.
std::optional<Interval> remove_point(Interval i, Value v) {
  if (i.lo == v && i.hi == v) return std::nullopt;
  if (i.lo == v) i.lo = add_lo(i.lo, 1);
  else if (i.hi == v) i.hi = add_hi(i.hi, -1);
  return i;
}

}  // namespace

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  Interval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.lo > r.hi) return std::nullopt;
  return r;
}

Interval hull(const Interval& a, const Interval& b) {
  return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

Interval add(const Interval& a, const Interval& b) {
  return {add_lo(a.lo, b.lo), add_hi(a.hi, b.hi)};
}

Interval scale(const Interval& a, Value c) {
  if (c == 0) return Interval::point(0);
  if (c > 0) return {mul_lo(a.lo, c), mul_hi(a.hi, c)};
  return {mul_lo(a.hi, c), mul_hi(a.lo, c)};
}

std::string render(const Interval& i) {
  std::ostringstream os;
  os << '[';
  if (i.lo == kNegInf) os << "-inf"; else os << i.lo;
  os << ',';
  if (i.hi == kPosInf) os << "+inf"; else os << i.hi;
  os << ']';
  return os.str();
}

IntervalEnv IntervalEnv::top(std::size_t vars) {
  IntervalEnv e;
  e.bottom_ = false;
  e.size_ = vars;
  e.vals_.assign(vars, Interval::top());
  return e;
}

IntervalEnv IntervalEnv::bottom(std::size_t vars) {
  IntervalEnv e;
  e.size_ = vars;
  return e;
}

IntervalEnv IntervalEnv::of(std::vector<Interval> values) {
  IntervalEnv e;
  e.bottom_ = false;
  e.size_ = values.size();
  for (const auto& i : values) {
    if (i.lo > i.hi) return bottom(values.size());
  }
  e.vals_ = std::move(values);
  return e;
}

IntervalEnv IntervalEnv::with(VarId v, Interval i) const {
  if (bottom_) return *this;
  if (v >= size_) throw std::out_of_range("IntervalEnv::with: unknown variable");
  IntervalEnv out = *this;
  out.vals_[v] = i;
  return out;
}

AssumeState AssumeState::from(const AtomicConstraint& c) {
  AssumeState p;
  for (const auto& b : c.conjuncts) {
    Interval i;
    switch (b.rel) {
      case Rel::Le: i = {kNegInf, b.constant}; break;
      case Rel::Ge: i = {b.constant, kPosInf}; break;
      case Rel::Eq: i = Interval::point(b.constant); break;
      case Rel::Ne:
        throw std::invalid_argument("assumption conjuncts cannot use !=");
    }
    auto it = std::find_if(p.bounds.begin(), p.bounds.end(),
                           [&](const auto& e) { return e.first == b.var; });
    if (it == p.bounds.end()) {
      p.bounds.emplace_back(b.var, i);
    } else if (auto r = intersect(it->second, i)) {
      it->second = *r;
    } else {
      p.contradictory = true;
    }
  }
  std::sort(p.bounds.begin(), p.bounds.end());
  return p;
}

IntervalEnv AssumeState::as_env(std::size_t vars) const {
  return meet(IntervalEnv::top(vars), *this);
}

IntervalEnv join(const IntervalEnv& a, const IntervalEnv& b) {
  check_universe(a, b);
  if (a.is_bottom()) return b;
  if (b.is_bottom()) return a;
  std::vector<Interval> out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) {
    out[v] = hull(a[static_cast<VarId>(v)], b[static_cast<VarId>(v)]);
  }
  return IntervalEnv::of(std::move(out));
}

IntervalEnv meet(const IntervalEnv& a, const IntervalEnv& b) {
  check_universe(a, b);
  if (a.is_bottom() || b.is_bottom()) return IntervalEnv::bottom(a.size());
  std::vector<Interval> out(a.size());
  for (std::size_t v = 0; v < a.size(); ++v) {
    auto r = intersect(a[static_cast<VarId>(v)], b[static_cast<VarId>(v)]);
    if (!r) return IntervalEnv::bottom(a.size());
    out[v] = *r;
  }
  return IntervalEnv::of(std::move(out));
}

IntervalEnv meet(const IntervalEnv& a, const AssumeState& p) {
  if (a.is_bottom() || p.contradictory) return IntervalEnv::bottom(a.size());
  std::vector<Interval> out = a.values();
  for (const auto& [v, i] : p.bounds) {
    if (v >= out.size()) throw std::out_of_range("assumption on unknown variable");
    auto r = intersect(out[v], i);
    if (!r) return IntervalEnv::bottom(a.size());
    out[v] = *r;
  }
  return IntervalEnv::of(std::move(out));
}

bool leq(const IntervalEnv& a, const IntervalEnv& b) {
  check_universe(a, b);
  if (a.is_bottom()) return true;
  if (b.is_bottom()) return false;
  for (std::size_t v = 0; v < a.size(); ++v) {
    const auto& x = a[static_cast<VarId>(v)];
    const auto& y = b[static_cast<VarId>(v)];
    if (x.lo < y.lo || x.hi > y.hi) return false;
  }
  return true;
}

IntervalEnv widen(const IntervalEnv& prev, const IntervalEnv& next) {
  check_universe(prev, next);
  if (prev.is_bottom()) return next;
  if (next.is_bottom()) return prev;
  std::vector<Interval> out(prev.size());
  for (std::size_t v = 0; v < prev.size(); ++v) {
    const auto& p = prev[static_cast<VarId>(v)];
    const auto& n = next[static_cast<VarId>(v)];
    out[v] = {n.lo >= p.lo ? p.lo : kNegInf, n.hi <= p.hi ? p.hi : kPosInf};
  }
  return IntervalEnv::of(std::move(out));
}

IntervalEnv enforce(const IntervalEnv& s, const AssumeState& p) {
  return meet(s, p);
}

bool feasible(const IntervalEnv& s, const AssumeState& p) {
  return !meet(s, p).is_bottom();
}

Interval evaluate(const LinearExpr& e, const IntervalEnv& s) {
  Interval acc = Interval::point(e.constant);
  for (const auto& t : e.terms) acc = add(acc, scale(s[t.var], t.coef));
  return acc;
}

IntervalEnv refine(const IntervalEnv& s, const Comparison& c) {
  if (s.is_bottom()) return s;
  if (same_variable(c)) {
    return self_comparison_holds(c.rel, c.offset) ? s
                                                   : IntervalEnv::bottom(s.size());
  }
  const Interval lhs = operand_interval(c.lhs, s);
  const Interval rhs0 = operand_interval(c.rhs, s);
  const Interval rhs = add(rhs0, Interval::point(c.offset));

  std::optional<Interval> l = lhs;
  std::optional<Interval> r = rhs;
  switch (c.rel) {
    case Rel::Le:
      l = intersect(lhs, {kNegInf, rhs.hi});
      r = intersect(rhs, {lhs.lo, kPosInf});
      break;
    case Rel::Ge:
      l = intersect(lhs, {rhs.lo, kPosInf});
      r = intersect(rhs, {kNegInf, lhs.hi});
      break;
    case Rel::Eq:
      l = intersect(lhs, rhs);
      r = l;
      break;
    case Rel::Ne:
      if (rhs.is_singleton()) l = remove_point(lhs, rhs.lo);
      if (lhs.is_singleton() && l) r = remove_point(rhs, lhs.lo);
      break;
  }
  if (!l || !r) return IntervalEnv::bottom(s.size());

  IntervalEnv out = s;
  if (c.lhs.is_var) out = out.with(c.lhs.var, *l);
  if (c.rhs.is_var) {
    auto back = intersect(rhs0, add(*r, Interval::point(-c.offset)));
    if (!back) return IntervalEnv::bottom(s.size());
    out = out.with(c.rhs.var, *back);
  }
  return out;
}

const char* to_string(Proof p) {
  switch (p) {
    case Proof::Proved: return "proved";
    case Proof::Unknown: return "unknown";
    case Proof::Refuted: return "refuted";
  }
  return "?";
}

Proof proves(const IntervalEnv& s, const Comparison& c) {
  if (s.is_bottom()) return Proof::Proved;
  if (same_variable(c)) {
    return self_comparison_holds(c.rel, c.offset) ? Proof::Proved
                                                   : Proof::Refuted;
  }
  const Interval l = operand_interval(c.lhs, s);
  const Interval r = add(operand_interval(c.rhs, s), Interval::point(c.offset));
  switch (c.rel) {
    case Rel::Le:
      if (l.hi <= r.lo) return Proof::Proved;
      if (l.lo > r.hi) return Proof::Refuted;
      break;
    case Rel::Ge:
      if (l.lo >= r.hi) return Proof::Proved;
      if (l.hi < r.lo) return Proof::Refuted;
      break;
    case Rel::Eq:
      if (l.is_singleton() && l == r) return Proof::Proved;
      if (disjoint(l, r)) return Proof::Refuted;
      break;
    case Rel::Ne:
      if (disjoint(l, r)) return Proof::Proved;
      if (l.is_singleton() && l == r) return Proof::Refuted;
      break;
  }
  return Proof::Unknown;
}

Proof proves(const IntervalEnv& s, const AssertExpr& e) {
  if (s.is_bottom()) return Proof::Proved;
  switch (e.kind) {
    case AssertExpr::Kind::Compare:
      return proves(s, e.compare);
    case AssertExpr::Kind::And: {
      bool all_proved = true;
      for (const auto& ch : e.children) {
        Proof p = proves(s, ch);
        if (p == Proof::Refuted) return Proof::Refuted;
        all_proved &= p == Proof::Proved;
      }
      return all_proved ? Proof::Proved : Proof::Unknown;
    }
    case AssertExpr::Kind::Or: {
      bool all_refuted = true;
      for (const auto& ch : e.children) {
        Proof p = proves(s, ch);
        if (p == Proof::Proved) return Proof::Proved;
        all_refuted &= p == Proof::Refuted;
      }
      return all_refuted ? Proof::Refuted : Proof::Unknown;
    }
  }
  return Proof::Unknown;
}

bool gamma_contains(const IntervalEnv& s, const ConcreteState& c) {
  if (s.is_bottom() || s.size() != c.size()) return false;
  for (std::size_t v = 0; v < c.size(); ++v) {
    if (!s[static_cast<VarId>(v)].contains(c[v])) return false;
  }
  return true;
}

namespace {

__extension__ using Wide = __int128;

Wide operand_value(const Operand& o, const ConcreteState& s) {
  return o.is_var ? static_cast<Wide>(s.at(o.var)) : static_cast<Wide>(o.value);
}

}  // namespace

Value evaluate(const LinearExpr& e, const ConcreteState& c) {
  Wide acc = e.constant;
  for (const auto& t : e.terms) acc += static_cast<Wide>(t.coef) * c.at(t.var);
  if (acc < std::numeric_limits<Value>::min() ||
      acc > std::numeric_limits<Value>::max()) {
    throw std::overflow_error("integer overflow in concrete evaluation");
  }
  return static_cast<Value>(acc);
}

bool holds(const Comparison& c, const ConcreteState& s) {
  const Wide l = operand_value(c.lhs, s);
  const Wide r = operand_value(c.rhs, s) + c.offset;
  switch (c.rel) {
    case Rel::Le: return l <= r;
    case Rel::Ge: return l >= r;
    case Rel::Eq: return l == r;
    case Rel::Ne: return l != r;
  }
  return false;
}

bool holds(const AssertExpr& e, const ConcreteState& s) {
  switch (e.kind) {
    case AssertExpr::Kind::Compare:
      return holds(e.compare, s);
    case AssertExpr::Kind::And:
      return std::all_of(e.children.begin(), e.children.end(),
                         [&](const auto& ch) { return holds(ch, s); });
    case AssertExpr::Kind::Or:
      return std::any_of(e.children.begin(), e.children.end(),
                         [&](const auto& ch) { return holds(ch, s); });
  }
  return false;
}

bool holds(const AtomicConstraint& c, const ConcreteState& s) {
  for (const auto& b : c.conjuncts) {
    const Value v = s.at(b.var);
    switch (b.rel) {
      case Rel::Le: if (v > b.constant) return false; break;
      case Rel::Ge: if (v < b.constant) return false; break;
      case Rel::Eq: if (v != b.constant) return false; break;
      case Rel::Ne: if (v == b.constant) return false; break;
    }
  }
  return true;
}

std::string render(const IntervalEnv& s, VarNames names) {
  if (s.is_bottom()) return "bottom";
  if (s.size() == 0) return "top";
  std::string out;
  for (std::size_t v = 0; v < s.size(); ++v) {
    if (v) out += ", ";
    out += (v < names.size() ? names[v] : "v" + std::to_string(v));
    out += ":" + render(s[static_cast<VarId>(v)]);
  }
  return out;
}

}  // namespace paramax
