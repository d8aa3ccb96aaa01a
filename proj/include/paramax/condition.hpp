#pragma once

/// @file condition.hpp
/// @brief Propositional conditions over assumption atoms.
///
/// A Condition is an immutable formula tree. Every node carries the truth
/// table of its subformula, so the semantic queries below are table
/// operations and never re-walk the tree.

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramax/assumption_set.hpp"
#include "paramax/truth_table.hpp"

namespace paramax {

/// Raised when a program has more assumptions than the configured cap.
class WidthExceeded : public std::length_error {
 public:
  WidthExceeded(std::size_t atoms, std::size_t cap);
};

/// Throws WidthExceeded unless atoms <= cap and cap fits the table backend.
void check_width(std::size_t atoms, std::size_t cap);

class Condition {
 public:
  enum class Kind { True, False, Atom, Not, And, Or };

  /// The constant true.
  Condition();

  static Condition truth();
  static Condition falsity();
  static Condition atom(std::size_t index);
  static Condition negation(Condition c);
  /// N-ary forms are kept as given; an empty conjunction is true and an
  /// empty disjunction false.
  static Condition conjunction(std::vector<Condition> cs);
  static Condition disjunction(std::vector<Condition> cs);

  /// A compact formula with exactly the satisfying assignments of `t`.
  /// Equal functions give structurally equal formulas.
  static Condition from_table(const TruthTable& t);

  [[nodiscard]] Kind kind() const;
  /// Precondition: kind() == Kind::Atom.
  [[nodiscard]] std::size_t atom_index() const;
  [[nodiscard]] const std::vector<Condition>& children() const;
  [[nodiscard]] const TruthTable& table() const;

  /// Structural equality of the trees.
  friend bool operator==(const Condition& a, const Condition& b);

 private:
  struct Node;
  explicit Condition(std::shared_ptr<const Node> n) : n_(std::move(n)) {}
  std::shared_ptr<const Node> n_;
};

Condition operator&(const Condition& a, const Condition& b);
Condition operator|(const Condition& a, const Condition& b);
Condition operator!(const Condition& a);

bool eval(const Condition& c, AssumptionSet a);
bool sat(const Condition& c);
bool implies(const Condition& a, const Condition& b);
bool equivalent(const Condition& a, const Condition& b);
/// No assignment satisfies both.
bool disjoint(const Condition& a, const Condition& b);

/// Equivalent formula with constants folded, double negations removed,
/// duplicate and implied operands dropped.
Condition simplify(const Condition& c);

/// Satisfying subsets of a universe of `width` assumptions, ascending by
/// bit field. Throws std::invalid_argument if c mentions an atom >= width.
std::vector<AssumptionSet> satisfying_sets(const Condition& c, std::size_t width);

/// Infix text with assumption labels as atoms, e.g. `(a1 & !a2) | a3`.
std::string render(const Condition& c, const std::vector<std::string>& labels);

}  // namespace paramax
