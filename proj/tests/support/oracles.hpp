#pragma once

// Test-only helpers: a condition parser, random generators and brute-force
// reference implementations.

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "paramax/cfg.hpp"
#include "paramax/condition.hpp"
#include "paramax/interval.hpp"
#include "paramax/param_state.hpp"

namespace paramax::testing {

inline std::string corpus_path(const std::string& name) {
  return std::string(PARAMAX_CORPUS_DIR) + "/" + name;
}

inline std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Cfg load(const std::string& name) { return compile(read_text(corpus_path(name))); }

inline std::vector<std::string> corpus_files() {
  return {"bounded_loop.pwl",  "branches.pwl",         "chain.pwl",
          "consistency_refuted.pwl", "countdown.pwl",  "diamond.pwl",
          "example1.pwl",      "example1_loop.pwl",    "fig1.pwl",
          "guard_relational.pwl", "impossible.pwl",    "irrefutable.pwl",
          "loop_assume.pwl",   "multi_assume.pwl",     "mutual_exclusion.pwl",
          "no_asserts.pwl",    "synth_basic.pwl",      "two_vars.pwl",
          "widen_loop.pwl"};
}

/// Parser for the rendered condition syntax: | & ! parentheses, true, false
/// and labels.
class ConditionParser {
 public:
  ConditionParser(std::string text, std::vector<std::string> labels)
      : s_(std::move(text)), labels_(std::move(labels)) {}

  Condition parse() {
    Condition c = disj();
    skip_ws();
    if (i_ != s_.size()) fail("trailing input");
    return c;
  }

 private:
  Condition disj() {
    std::vector<Condition> parts{conj()};
    while (eat('|')) parts.push_back(conj());
    return parts.size() == 1 ? parts.front() : Condition::disjunction(parts);
  }
  Condition conj() {
    std::vector<Condition> parts{unary()};
    while (eat('&')) parts.push_back(unary());
    return parts.size() == 1 ? parts.front() : Condition::conjunction(parts);
  }
  Condition unary() {
    if (eat('!')) return Condition::negation(unary());
    if (eat('(')) {
      Condition c = disj();
      if (!eat(')')) fail("expected ')'");
      return c;
    }
    skip_ws();
    std::size_t j = i_;
    while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_')) {
      ++j;
    }
    if (j == i_) fail("expected an atom");
    const std::string word = s_.substr(i_, j - i_);
    i_ = j;
    if (word == "true") return Condition::truth();
    if (word == "false") return Condition::falsity();
    const auto it = std::find(labels_.begin(), labels_.end(), word);
    if (it == labels_.end()) fail("unknown label " + word);
    return Condition::atom(static_cast<std::size_t>(it - labels_.begin()));
  }
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("condition parse error at " + std::to_string(i_) + ": " + what);
  }

  std::string s_;
  std::vector<std::string> labels_;
  std::size_t i_ = 0;
};

inline Condition parse_condition(const std::string& text, const std::vector<std::string>& labels) {
  return ConditionParser(text, labels).parse();
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

/// Direct recursive evaluation of the tree, independent of truth tables.
inline bool eval_tree(const Condition& c, AssumptionSet a) {
  using K = Condition::Kind;
  switch (c.kind()) {
    case K::True:
      return true;
    case K::False:
      return false;
    case K::Atom:
      return a.contains(c.atom_index());
    case K::Not:
      return !eval_tree(c.children().front(), a);
    case K::And:
      return std::all_of(c.children().begin(), c.children().end(),
                         [&](const Condition& x) { return eval_tree(x, a); });
    case K::Or:
      return std::any_of(c.children().begin(), c.children().end(),
                         [&](const Condition& x) { return eval_tree(x, a); });
  }
  return false;
}

inline std::vector<AssumptionSet> all_subsets(std::size_t width) {
  std::vector<AssumptionSet> out;
  for (AssumptionSet::Bits b = 0; b < (AssumptionSet::Bits{1} << width); ++b) out.emplace_back(b);
  return out;
}

inline std::vector<AssumptionSet> brute_sets(const Condition& c, std::size_t width) {
  std::vector<AssumptionSet> out;
  for (auto a : all_subsets(width)) {
    if (eval_tree(c, a)) out.push_back(a);
  }
  return out;
}

class Random {
 public:
  explicit Random(std::uint32_t seed) : rng_(seed) {}

  int range(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937& engine() { return rng_; }

  Interval interval(int span = 6) {
    Value lo = range(-span, span);
    Value hi = lo + range(0, span);
    if (chance(0.15)) lo = kNegInf;
    if (chance(0.15)) hi = kPosInf;
    return {lo, hi};
  }

  IntervalEnv env(std::size_t vars, double bottom = 0.1, int span = 6) {
    if (chance(bottom)) return IntervalEnv::bottom(vars);
    std::vector<Interval> v;
    for (std::size_t i = 0; i < vars; ++i) v.push_back(interval(span));
    return IntervalEnv::of(std::move(v));
  }

  /// Environment drawn from a small pool; equal states recur.
  IntervalEnv pooled_env(std::size_t vars, std::size_t pool) {
    while (pool_.size() < pool) pool_.push_back(env(vars));
    return pool_[static_cast<std::size_t>(range(0, static_cast<int>(pool) - 1))];
  }

  Condition condition(std::size_t atoms, int depth) {
    if (depth == 0 || chance(0.25)) {
      if (atoms == 0 || chance(0.1)) return chance(0.5) ? Condition::truth() : Condition::falsity();
      return Condition::atom(static_cast<std::size_t>(range(0, static_cast<int>(atoms) - 1)));
    }
    switch (range(0, 2)) {
      case 0:
        return Condition::negation(condition(atoms, depth - 1));
      case 1: {
        std::vector<Condition> cs;
        for (int i = range(1, 3); i > 0; --i) cs.push_back(condition(atoms, depth - 1));
        return Condition::conjunction(cs);
      }
      default: {
        std::vector<Condition> cs;
        for (int i = range(1, 3); i > 0; --i) cs.push_back(condition(atoms, depth - 1));
        return Condition::disjunction(cs);
      }
    }
  }

  /// A partition of the subsets of `width` atoms into at most `max_rules`
  /// rules. Conditions are unsimplified disjunctions of minterms; some rules
  /// may be unsatisfiable and some states equal.
  ParamState param_state(std::size_t width, std::size_t max_rules, std::size_t vars) {
    pool_.clear();
    const auto k = static_cast<std::size_t>(range(1, static_cast<int>(max_rules)));
    std::vector<std::vector<Condition>> groups(k);
    for (auto a : all_subsets(width)) {
      groups[static_cast<std::size_t>(range(0, static_cast<int>(k) - 1))].push_back(minterm(a, width));
    }
    ParamState x;
    for (auto& g : groups) {
      Condition c = g.empty() ? unsat(width) : Condition::disjunction(g);
      x.rules.push_back({c, pooled_env(vars, std::max<std::size_t>(1, k - 1))});
    }
    std::shuffle(x.rules.begin(), x.rules.end(), rng_);
    return x;
  }

  static Condition minterm(AssumptionSet a, std::size_t width) {
    std::vector<Condition> lits;
    for (std::size_t i = 0; i < width; ++i) {
      lits.push_back(a.contains(i) ? Condition::atom(i) : !Condition::atom(i));
    }
    if (lits.empty()) return Condition::truth();
    return Condition::conjunction(lits);
  }

  static Condition unsat(std::size_t width) {
    if (width == 0) return Condition::falsity();
    return Condition::atom(0) & !Condition::atom(0);
  }

 private:
  std::mt19937 rng_;
  std::vector<IntervalEnv> pool_;
};

/// Reference normal form: group assumption sets by their state, order groups
/// by their smallest member.
struct CanonicalRule {
  std::vector<AssumptionSet> sets;
  IntervalEnv state;
  friend bool operator==(const CanonicalRule&, const CanonicalRule&) = default;
};

inline std::vector<CanonicalRule> enumerate_canonical(const ParamState& x, std::size_t width) {
  std::map<IntervalEnv, std::vector<AssumptionSet>> groups;
  for (auto a : all_subsets(width)) {
    const Rule* hit = nullptr;
    for (const auto& r : x.rules) {
      if (eval_tree(r.condition, a)) {
        if (hit) throw std::logic_error("overlapping rules");
        hit = &r;
      }
    }
    if (!hit) throw std::logic_error("uncovered subset");
    groups[hit->state].push_back(a);
  }
  std::vector<CanonicalRule> out;
  for (auto& [s, sets] : groups) out.push_back({sets, s});
  std::sort(out.begin(), out.end(),
            [](const CanonicalRule& a, const CanonicalRule& b) { return a.sets[0] < b.sets[0]; });
  return out;
}

inline std::vector<CanonicalRule> as_canonical(const ParamState& x, std::size_t width) {
  std::vector<CanonicalRule> out;
  for (const auto& r : x.rules) out.push_back({brute_sets(r.condition, width), r.state});
  return out;
}

/// Point-wise reference for rho: the state of the rule whose tree evaluates
/// to true.
inline IntervalEnv brute_rho(const ParamState& x, AssumptionSet a) {
  for (const auto& r : x.rules) {
    if (eval_tree(r.condition, a)) return r.state;
  }
  throw std::logic_error("uncovered subset");
}

/// Concrete points of a bounded box, for brute-force hulls.
inline std::vector<ConcreteState> points(const IntervalEnv& s) {
  std::vector<ConcreteState> out;
  if (s.is_bottom()) return out;
  out.emplace_back();
  for (std::size_t v = 0; v < s.size(); ++v) {
    std::vector<ConcreteState> next;
    const auto& iv = s[static_cast<VarId>(v)];
    for (const auto& p : out) {
      for (Value x = iv.lo; x <= iv.hi; ++x) {
        auto q = p;
        q.push_back(x);
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

/// Smallest box containing the points, Bottom when there are none.
inline IntervalEnv hull_of(const std::vector<ConcreteState>& pts, std::size_t vars) {
  if (pts.empty()) return IntervalEnv::bottom(vars);
  std::vector<Interval> iv(vars, Interval{kPosInf, kNegInf});
  for (const auto& p : pts) {
    for (std::size_t v = 0; v < vars; ++v) {
      iv[v].lo = std::min(iv[v].lo, p[v]);
      iv[v].hi = std::max(iv[v].hi, p[v]);
    }
  }
  return IntervalEnv::of(iv);
}

/// Random programs over x and y with bounded inputs, counted loops, branches,
/// labelled assumes and asserts.
class ProgramGenerator {
 public:
  explicit ProgramGenerator(std::uint32_t seed) : rnd_(seed) {}

  std::string generate(std::size_t assumes, std::size_t asserts = 2) {
    out_.str({});
    labels_ = 0;
    loops_ = 0;
    out_ << "x := input() in [" << rnd_.range(-6, 0) << ", " << rnd_.range(0, 6) << "];\n";
    out_ << "y := input() in [" << rnd_.range(-6, 0) << ", " << rnd_.range(0, 6) << "];\n";
    std::vector<char> kinds(assumes, 'a');
    kinds.insert(kinds.end(), asserts, 's');
    for (int k = rnd_.range(1, 3); k > 0; --k) kinds.push_back('=');
    std::shuffle(kinds.begin(), kinds.end(), rnd_.engine());
    for (char k : kinds) block(k, 0);
    return out_.str();
  }

 private:
  const char* var() { return rnd_.chance(0.5) ? "x" : "y"; }

  void block(char k, int depth) {
    const int shape = depth < 1 ? rnd_.range(0, 3) : 0;
    if (shape == 2) {
      out_ << "if (" << var() << " > " << rnd_.range(-3, 3) << ") {\n";
      stmt(k);
      out_ << "} else {\n";
      stmt('=');
      out_ << "}\n";
    } else if (shape == 3) {
      const std::string i = "i" + std::to_string(loops_++);
      out_ << i << " := 0;\nwhile (" << i << " < " << rnd_.range(1, 2) << ") {\n";
      stmt(k);
      out_ << i << " := " << i << " + 1;\n}\n";
    } else {
      stmt(k);
    }
  }

  void stmt(char k) {
    const char* v = var();
    if (k == 'a') {
      out_ << "assume a" << labels_++ << ": " << v << (rnd_.chance(0.5) ? " >= " : " <= ")
           << rnd_.range(-3, 3) << ";\n";
    } else if (k == 's') {
      out_ << "assert " << v << (rnd_.chance(0.5) ? " >= " : " <= ") << rnd_.range(-4, 4);
      if (rnd_.chance(0.3)) out_ << " && x <= y + " << rnd_.range(0, 4);
      out_ << ";\n";
    } else {
      const int d = rnd_.range(-2, 2);
      out_ << v << " := " << var() << (d < 0 ? " - " : " + ") << std::abs(d) << ";\n";
    }
  }

  Random rnd_;
  std::ostringstream out_;
  std::size_t labels_ = 0;
  int loops_ = 0;
};

}  // namespace paramax::testing
