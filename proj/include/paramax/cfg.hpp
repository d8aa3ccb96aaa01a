#pragma once

/// @file cfg.hpp
/// @brief Control-flow graphs with one transformer per node.
///
/// Branch conditions become guard-filter nodes on the two out-paths of a
/// branch, so every node is a single state transformer and the analysis
/// equations are C_v = join over predecessors v' of t_v(C_v').

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "paramax/assumption_set.hpp"
#include "paramax/ast.hpp"
#include "paramax/syntax.hpp"

namespace paramax {

namespace node {

struct Entry {};
struct Exit {};

struct Assign {
  VarId var = 0;
  LinearExpr expr;
};

struct Input {
  VarId var = 0;
  std::optional<InputRange> range;
};

struct Guard {
  Comparison cond;
};

struct Assume {
  std::size_t assumption = 0;
  AtomicConstraint constraint;
};

struct Assert {
  AssertExpr expr;
};

struct Skip {
  /// Join point of a while loop; widening is applied here.
  bool loop_head = false;
};

}  // namespace node

using NodeKind = std::variant<node::Entry, node::Exit, node::Assign, node::Input,
                              node::Guard, node::Assume, node::Assert, node::Skip>;

struct CfgNode {
  NodeId id = 0;
  NodeKind kind;
  int line = 0;
};

struct AssumptionId {
  std::size_t index = 0;
  std::string label;
  NodeId node = 0;
};

class Cfg {
 public:
  [[nodiscard]] std::size_t size() const { return nodes_.size(); }
  [[nodiscard]] const CfgNode& node(NodeId v) const;
  [[nodiscard]] const std::vector<CfgNode>& nodes() const { return nodes_; }

  [[nodiscard]] NodeId entry() const { return entry_; }
  [[nodiscard]] NodeId exit() const { return exit_; }

  [[nodiscard]] const std::vector<NodeId>& successors(NodeId v) const;
  /// Syntactic predecessors {v' | v' -> v}.
  [[nodiscard]] const std::vector<NodeId>& predecessors(NodeId v) const;

  [[nodiscard]] const std::vector<AssumptionId>& assumptions() const { return assumptions_; }
  [[nodiscard]] std::size_t assumption_count() const { return assumptions_.size(); }
  [[nodiscard]] std::vector<std::string> assumption_labels() const;

  [[nodiscard]] const std::vector<std::string>& variables() const { return variables_; }
  [[nodiscard]] std::size_t variable_count() const { return variables_.size(); }

  /// Nodes in reverse post-order from the entry.
  [[nodiscard]] const std::vector<NodeId>& reverse_post_order() const { return rpo_; }
  [[nodiscard]] bool is_loop_head(NodeId v) const;

  /// Assert nodes in id order.
  [[nodiscard]] std::vector<NodeId> assert_nodes() const;

  friend Cfg build_cfg(const Ast& ast);
  friend Cfg restrict(const Cfg& cfg, AssumptionSet keep);

 private:
  NodeId add(NodeKind kind, int line);
  void link(NodeId from, NodeId to);
  void finish();

  std::vector<CfgNode> nodes_;
  std::vector<std::vector<NodeId>> succs_;
  std::vector<std::vector<NodeId>> preds_;
  NodeId entry_ = 0;
  NodeId exit_ = 0;
  std::vector<AssumptionId> assumptions_;
  std::vector<std::string> variables_;
  std::vector<NodeId> rpo_;
};

/// Builds the CFG; node ids follow source order with the entry at 0 and the
/// exit last.
Cfg build_cfg(const Ast& ast);

/// Parses and builds in one step.
Cfg compile(std::string_view source);

std::vector<NodeId> predecessors(const Cfg& cfg, NodeId v);

/// The program keeping only the assume nodes in `keep`; every other assume
/// node becomes a skip. Node ids, edges and assumption indices are kept.
/// Throws std::invalid_argument if `keep` names an index outside the
/// program's assumptions.
Cfg restrict(const Cfg& cfg, AssumptionSet keep);

std::string kind_name(const NodeKind& k);
/// Short statement text of a node, e.g. "x := x + 2".
std::string describe(const Cfg& cfg, const CfgNode& n);

/// One line per node: id, kind, successors.
std::string dump(const Cfg& cfg);

}  // namespace paramax
