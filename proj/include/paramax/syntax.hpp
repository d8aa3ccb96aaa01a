#pragma once

/// @file syntax.hpp
/// @brief Expression and constraint forms shared by the parser, the CFG and
///        the interval domain.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

namespace paramax {

using VarId = std::uint32_t;
using Value = std::int64_t;
using NodeId = std::uint32_t;

/// Names of program variables, indexed by VarId.
using VarNames = std::span<const std::string>;

struct LinearTerm {
  VarId var = 0;
  Value coef = 0;

  friend bool operator==(const LinearTerm&, const LinearTerm&) = default;
};

/// constant + sum(coef * var); terms sorted by variable, coefficients nonzero.
struct LinearExpr {
  Value constant = 0;
  std::vector<LinearTerm> terms;

  static LinearExpr of_constant(Value c) { return {c, {}}; }
  static LinearExpr of_var(VarId v) { return {0, {{v, 1}}}; }

  [[nodiscard]] bool is_constant() const { return terms.empty(); }

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;
};

/// Relations after normalization: strict comparisons are rewritten into
/// non-strict ones with an integer offset.
enum class Rel { Le, Ge, Eq, Ne };

Rel flip(Rel r);
const char* to_string(Rel r);

struct Operand {
  bool is_var = false;
  VarId var = 0;
  Value value = 0;

  static Operand variable(VarId v) { return {true, v, 0}; }
  static Operand constant(Value c) { return {false, 0, c}; }

  friend bool operator==(const Operand&, const Operand&) = default;
};

/// lhs rel (rhs + offset)
struct Comparison {
  Operand lhs;
  Rel rel = Rel::Le;
  Operand rhs;
  Value offset = 0;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

/// The comparison that holds exactly when `c` does not.
Comparison negate(const Comparison& c);

/// Boolean combination of comparisons used by `assert`.
struct AssertExpr {
  enum class Kind { Compare, And, Or };

  Kind kind = Kind::Compare;
  Comparison compare;
  std::vector<AssertExpr> children;

  static AssertExpr leaf(Comparison c) { return {Kind::Compare, c, {}}; }
  static AssertExpr all_of(std::vector<AssertExpr> cs) {
    return {Kind::And, {}, std::move(cs)};
  }
  static AssertExpr any_of(std::vector<AssertExpr> cs) {
    return {Kind::Or, {}, std::move(cs)};
  }

  friend bool operator==(const AssertExpr&, const AssertExpr&) = default;
};

/// One conjunct of an assumption: var rel constant, rel in {Le, Ge, Eq}.
struct BoundConstraint {
  VarId var = 0;
  Rel rel = Rel::Ge;
  Value constant = 0;

  friend bool operator==(const BoundConstraint&,
                         const BoundConstraint&) = default;
};

/// Conjunction of single-variable bounds; always representable as an
/// interval environment.
struct AtomicConstraint {
  std::vector<BoundConstraint> conjuncts;

  friend bool operator==(const AtomicConstraint&,
                         const AtomicConstraint&) = default;
};

std::string render(const LinearExpr& e, VarNames names);
std::string render(const Comparison& c, VarNames names);
std::string render(const AssertExpr& e, VarNames names);
std::string render(const AtomicConstraint& c, VarNames names);

}  // namespace paramax
