#pragma once

/// @file interval.hpp
/// @brief Non-relational integer interval environments.
///
/// Endpoints are 64-bit integers; the extreme values of `Value` are reserved
/// as the -inf / +inf sentinels. Arithmetic saturates outward, so results
/// only ever grow when a bound leaves the representable range.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "paramax/syntax.hpp"

namespace paramax {

inline constexpr Value kNegInf = std::numeric_limits<Value>::min();
inline constexpr Value kPosInf = std::numeric_limits<Value>::max();

/// Non-empty integer interval [lo, hi].
struct Interval {
  Value lo = kNegInf;
  Value hi = kPosInf;

  static constexpr Interval top() { return {kNegInf, kPosInf}; }
  static constexpr Interval point(Value v) { return {v, v}; }

  [[nodiscard]] bool contains(Value v) const { return lo <= v && v <= hi; }
  [[nodiscard]] bool bounded_below() const { return lo != kNegInf; }
  [[nodiscard]] bool bounded_above() const { return hi != kPosInf; }
  [[nodiscard]] bool is_singleton() const {
    return lo == hi && bounded_below() && bounded_above();
  }

  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

std::optional<Interval> intersect(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

/// Saturating interval arithmetic.
Interval add(const Interval& a, const Interval& b);
Interval scale(const Interval& a, Value c);

std::string render(const Interval& i);

/// Either Bottom or a total map from the program's variables to intervals.
class IntervalEnv {
 public:
  IntervalEnv() = default;

  static IntervalEnv top(std::size_t vars);
  static IntervalEnv bottom(std::size_t vars);
  static IntervalEnv of(std::vector<Interval> values);

  [[nodiscard]] bool is_bottom() const { return bottom_; }
  [[nodiscard]] std::size_t size() const { return size_; }

  /// Precondition: !is_bottom().
  [[nodiscard]] const Interval& operator[](VarId v) const { return vals_[v]; }
  [[nodiscard]] const std::vector<Interval>& values() const { return vals_; }

  /// Rebinds one variable; an empty result is not representable here, use
  /// meet() to refine.
  IntervalEnv with(VarId v, Interval i) const;

  friend bool operator==(const IntervalEnv&, const IntervalEnv&) = default;
  friend auto operator<=>(const IntervalEnv&, const IntervalEnv&) = default;

 private:
  bool bottom_ = true;
  std::size_t size_ = 0;
  std::vector<Interval> vals_;
};

/// The environment-level encoding of an assumption: mentioned variables are
/// bounded, the rest are implicitly top.
struct AssumeState {
  std::vector<std::pair<VarId, Interval>> bounds;
  /// Conjuncts on one variable had an empty intersection.
  bool contradictory = false;

  static AssumeState from(const AtomicConstraint& c);
  [[nodiscard]] IntervalEnv as_env(std::size_t vars) const;
};

/// A concrete program state: one integer per variable.
using ConcreteState = std::vector<Value>;

IntervalEnv join(const IntervalEnv& a, const IntervalEnv& b);
IntervalEnv meet(const IntervalEnv& a, const IntervalEnv& b);
IntervalEnv meet(const IntervalEnv& a, const AssumeState& p);
bool leq(const IntervalEnv& a, const IntervalEnv& b);
IntervalEnv widen(const IntervalEnv& prev, const IntervalEnv& next);

/// Baseline transformer of an assume node: meet with the assumption.
IntervalEnv enforce(const IntervalEnv& s, const AssumeState& p);
/// Whether s meet p is a feasible (non-bottom) state.
bool feasible(const IntervalEnv& s, const AssumeState& p);

Interval evaluate(const LinearExpr& e, const IntervalEnv& s);
/// Refines `s` by a guard comparison; Bottom when no state satisfies it.
IntervalEnv refine(const IntervalEnv& s, const Comparison& c);

enum class Proof { Proved, Unknown, Refuted };
const char* to_string(Proof p);

/// Three-valued assertion check: Proved when every state of gamma(s)
/// satisfies e, Refuted when none does. Bottom proves everything.
Proof proves(const IntervalEnv& s, const AssertExpr& e);
Proof proves(const IntervalEnv& s, const Comparison& c);

bool gamma_contains(const IntervalEnv& s, const ConcreteState& c);

/// Exact concrete evaluation. Throws std::overflow_error when a result leaves
/// the 64-bit range.
Value evaluate(const LinearExpr& e, const ConcreteState& c);
bool holds(const Comparison& c, const ConcreteState& s);
bool holds(const AssertExpr& e, const ConcreteState& s);
bool holds(const AtomicConstraint& c, const ConcreteState& s);

std::string render(const IntervalEnv& s, VarNames names);

}  // namespace paramax
