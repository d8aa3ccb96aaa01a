#include "paramax/cfg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace paramax {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

class Builder {
 public:
  Builder(Cfg& g, NodeId (Cfg::*add)(NodeKind, int), void (Cfg::*link)(NodeId, NodeId),
          std::vector<AssumptionId>& assumptions)
      : g_(g), add_(add), link_(link), assumptions_(assumptions) {}

  using Frontier = std::vector<NodeId>;

  Frontier lower(const Block& b, Frontier in) {
    for (const auto& s : b) in = lower(s, std::move(in));
    return in;
  }

  Frontier lower(const Stmt& s, const Frontier& in) {
    const int line = s.loc.line;
    return std::visit(
        overloaded{
            [&](const stmt::Assign& a) {
              return simple(node::Assign{a.var, a.expr}, line, in);
            },
            [&](const stmt::Input& a) {
              return simple(node::Input{a.var, a.range}, line, in);
            },
            [&](const stmt::Assume& a) {
              const std::size_t index = assumptions_.size();
              Frontier out = simple(node::Assume{index, a.constraint}, line, in);
              assumptions_.push_back({index, a.label, out.front()});
              return out;
            },
            [&](const stmt::Assert& a) { return simple(node::Assert{a.expr}, line, in); },
            [&](const stmt::Skip&) { return simple(node::Skip{}, line, in); },
            [&](const stmt::If& a) {
              Frontier then_in = simple(node::Guard{a.cond}, line, in);
              Frontier out = lower(a.then_block, then_in);
              Frontier else_in = simple(node::Guard{negate(a.cond)}, line, in);
              Frontier else_out = lower(a.else_block, else_in);
              out.insert(out.end(), else_out.begin(), else_out.end());
              return out;
            },
            [&](const stmt::While& a) {
              Frontier head = simple(node::Skip{true}, line, in);
              Frontier body_in = simple(node::Guard{a.cond}, line, head);
              Frontier body_out = lower(a.body, body_in);
              for (NodeId v : body_out) (g_.*link_)(v, head.front());
              return simple(node::Guard{negate(a.cond)}, line, head);
            },
        },
        s.node);
  }

  Frontier simple(NodeKind k, int line, const Frontier& in) {
    const NodeId v = (g_.*add_)(std::move(k), line);
    for (NodeId p : in) (g_.*link_)(p, v);
    return {v};
  }

 private:
  Cfg& g_;
  NodeId (Cfg::*add_)(NodeKind, int);
  void (Cfg::*link_)(NodeId, NodeId);
  std::vector<AssumptionId>& assumptions_;
};

std::string var_name(const Cfg& cfg, VarId v) {
  return v < cfg.variable_count() ? cfg.variables()[v] : "v" + std::to_string(v);
}

}  // namespace

const CfgNode& Cfg::node(NodeId v) const {
  if (v >= nodes_.size()) throw std::out_of_range("unknown node id " + std::to_string(v));
  return nodes_[v];
}

const std::vector<NodeId>& Cfg::successors(NodeId v) const {
  if (v >= succs_.size()) throw std::out_of_range("unknown node id " + std::to_string(v));
  return succs_[v];
}

const std::vector<NodeId>& Cfg::predecessors(NodeId v) const {
  if (v >= preds_.size()) throw std::out_of_range("unknown node id " + std::to_string(v));
  return preds_[v];
}

std::vector<std::string> Cfg::assumption_labels() const {
  std::vector<std::string> out;
  out.reserve(assumptions_.size());
  for (const auto& a : assumptions_) out.push_back(a.label);
  return out;
}

bool Cfg::is_loop_head(NodeId v) const {
  const auto* s = std::get_if<node::Skip>(&node(v).kind);
  return s && s->loop_head;
}

std::vector<NodeId> Cfg::assert_nodes() const {
  std::vector<NodeId> out;
  for (const auto& n : nodes_) {
    if (std::holds_alternative<node::Assert>(n.kind)) out.push_back(n.id);
  }
  return out;
}

NodeId Cfg::add(NodeKind kind, int line) {
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({id, std::move(kind), line});
  succs_.emplace_back();
  preds_.emplace_back();
  return id;
}

void Cfg::link(NodeId from, NodeId to) {
  succs_[from].push_back(to);
  preds_[to].push_back(from);
}

void Cfg::finish() {
  // Iterative DFS post-order from the entry.
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<NodeId> post;
  std::vector<std::pair<NodeId, std::size_t>> stack{{entry_, 0}};
  seen[entry_] = 1;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < succs_[v].size()) {
      const NodeId w = succs_[v][i++];
      if (!seen[w]) {
        seen[w] = 1;
        stack.emplace_back(w, 0);
      }
    } else {
      post.push_back(v);
      stack.pop_back();
    }
  }
  rpo_.assign(post.rbegin(), post.rend());
}

Cfg build_cfg(const Ast& ast) {
  Cfg g;
  g.variables_ = ast.variables;
  Builder b(g, &Cfg::add, &Cfg::link, g.assumptions_);
  g.entry_ = g.add(node::Entry{}, 0);
  auto frontier = b.lower(ast.statements, {g.entry_});
  g.exit_ = g.add(node::Exit{}, 0);
  for (NodeId v : frontier) g.link(v, g.exit_);
  g.finish();
  return g;
}

Cfg compile(std::string_view source) { return build_cfg(parse(source)); }

std::vector<NodeId> predecessors(const Cfg& cfg, NodeId v) {
  auto out = cfg.predecessors(v);
  std::sort(out.begin(), out.end());
  return out;
}

Cfg restrict(const Cfg& cfg, AssumptionSet keep) {
  if (!keep.subset_of(AssumptionSet::full(cfg.assumption_count()))) {
    throw std::invalid_argument("assumption set names an assumption outside the program");
  }
  Cfg out = cfg;
  for (const auto& a : cfg.assumptions_) {
    if (!keep.contains(a.index)) out.nodes_[a.node].kind = node::Skip{};
  }
  return out;
}

std::string kind_name(const NodeKind& k) {
  return std::visit(overloaded{
                        [](const node::Entry&) { return "entry"; },
                        [](const node::Exit&) { return "exit"; },
                        [](const node::Assign&) { return "assign"; },
                        [](const node::Input&) { return "input"; },
                        [](const node::Guard&) { return "guard"; },
                        [](const node::Assume&) { return "assume"; },
                        [](const node::Assert&) { return "assert"; },
                        [](const node::Skip&) { return "skip"; },
                    },
                    k);
}

std::string describe(const Cfg& cfg, const CfgNode& n) {
  const auto& names = cfg.variables();
  return std::visit(
      overloaded{
          [](const node::Entry&) { return std::string("entry"); },
          [](const node::Exit&) { return std::string("exit"); },
          [&](const node::Assign& a) {
            return var_name(cfg, a.var) + " := " + render(a.expr, names);
          },
          [&](const node::Input& a) {
            std::string s = var_name(cfg, a.var) + " := input()";
            if (a.range) {
              s += " in [" + std::to_string(a.range->lo) + ", " +
                   std::to_string(a.range->hi) + "]";
            }
            return s;
          },
          [&](const node::Guard& a) { return render(a.cond, names); },
          [&](const node::Assume& a) {
            return "assume " + cfg.assumptions().at(a.assumption).label + ": " +
                   render(a.constraint, names);
          },
          [&](const node::Assert& a) { return "assert " + render(a.expr, names); },
          [](const node::Skip& a) { return std::string(a.loop_head ? "loop head" : "skip"); },
      },
      n.kind);
}

std::string dump(const Cfg& cfg) {
  std::ostringstream os;
  for (const auto& n : cfg.nodes()) {
    os << "id=" << n.id << " kind=" << kind_name(n.kind);
    const auto k = kind_name(n.kind);
    if (k != std::string("entry") && k != std::string("exit")) {
      os << " stmt=\"" << describe(cfg, n) << '"';
    }
    os << " succs=[";
    const auto& s = cfg.successors(n.id);
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]\n";
  }
  return os.str();
}

std::string render(AssumptionSet s, const std::vector<std::string>& labels) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < 32; ++i) {
    if (!s.contains(i)) continue;
    if (!first) out += ", ";
    out += i < labels.size() ? labels[i] : "a" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace paramax
