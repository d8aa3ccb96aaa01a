#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "paramax/syntax.hpp"

namespace paramax {

struct SourceLoc {
  int line = 0;
  int column = 0;
};

/// Inclusive range an `input()` site draws from in the concrete oracle.
struct InputRange {
  Value lo = 0;
  Value hi = 0;

  friend bool operator==(const InputRange&, const InputRange&) = default;
};

struct Stmt;
using Block = std::vector<Stmt>;

namespace stmt {

struct Assign {
  VarId var = 0;
  LinearExpr expr;
};

struct Input {
  VarId var = 0;
  std::optional<InputRange> range;
};

struct If {
  Comparison cond;
  Block then_block;
  Block else_block;
};

struct While {
  Comparison cond;
  Block body;
};

struct Assume {
  std::string label;
  AtomicConstraint constraint;
};

struct Assert {
  AssertExpr expr;
};

struct Skip {};

}  // namespace stmt

struct Stmt {
  std::variant<stmt::Assign, stmt::Input, stmt::If, stmt::While, stmt::Assume,
               stmt::Assert, stmt::Skip>
      node;
  SourceLoc loc;
};

struct Ast {
  /// Variables in order of first mention.
  std::vector<std::string> variables;
  Block statements;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourceLoc loc, const std::string& message)
      : std::runtime_error(std::to_string(loc.line) + ":" +
                           std::to_string(loc.column) + ": " + message),
        loc_(loc) {}

  [[nodiscard]] SourceLoc location() const { return loc_; }

 private:
  SourceLoc loc_;
};

/// Parses a `.pwl` program. Throws ParseError with a line/column position on
/// syntax errors, duplicate assume labels and non-linear expressions.
Ast parse(std::string_view source);

}  // namespace paramax
