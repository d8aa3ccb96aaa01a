#include "paramax/condition.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

namespace paramax {

struct Condition::Node {
  Kind kind = Kind::True;
  std::size_t atom = 0;
  std::vector<Condition> children;
  TruthTable table;
};

WidthExceeded::WidthExceeded(std::size_t atoms, std::size_t cap)
    : std::length_error("program has " + std::to_string(atoms) +
                        " assumptions, above the condition width cap of " +
                        std::to_string(cap)) {}

void check_width(std::size_t atoms, std::size_t cap) {
  if (atoms > cap || atoms > TruthTable::kMaxVars) {
    throw WidthExceeded(atoms, std::min(cap, TruthTable::kMaxVars));
  }
}

Condition::Condition() : Condition(truth()) {}

Condition Condition::truth() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::True;
    n->table = TruthTable::constant(true);
    return n;
  }();
  return Condition(node);
}

Condition Condition::falsity() {
  static const auto node = [] {
    auto n = std::make_shared<Node>();
    n->kind = Kind::False;
    n->table = TruthTable::constant(false);
    return n;
  }();
  return Condition(node);
}

Condition Condition::atom(std::size_t index) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Atom;
  n->atom = index;
  n->table = TruthTable::variable(index);
  return Condition(std::move(n));
}

Condition Condition::negation(Condition c) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Not;
  n->table = ~c.table();
  n->children.push_back(std::move(c));
  return Condition(std::move(n));
}

Condition Condition::conjunction(std::vector<Condition> cs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::And;
  n->table = TruthTable::constant(true);
  for (const auto& c : cs) n->table = n->table & c.table();
  n->children = std::move(cs);
  return Condition(std::move(n));
}

Condition Condition::disjunction(std::vector<Condition> cs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Or;
  n->table = TruthTable::constant(false);
  for (const auto& c : cs) n->table = n->table | c.table();
  n->children = std::move(cs);
  return Condition(std::move(n));
}

Condition::Kind Condition::kind() const { return n_->kind; }
std::size_t Condition::atom_index() const { return n_->atom; }
const std::vector<Condition>& Condition::children() const { return n_->children; }
const TruthTable& Condition::table() const { return n_->table; }

bool operator==(const Condition& a, const Condition& b) {
  if (a.n_ == b.n_) return true;
  if (a.kind() != b.kind()) return false;
  if (a.kind() == Condition::Kind::Atom) return a.atom_index() == b.atom_index();
  return a.children() == b.children();
}

namespace {

std::size_t min_atom_of(const std::vector<Condition>& cs) {
  std::size_t m = std::numeric_limits<std::size_t>::max();
  for (const auto& c : cs) {
    if (c.kind() == Condition::Kind::Atom) {
      m = std::min(m, c.atom_index());
    } else if (!c.children().empty()) {
      m = std::min(m, min_atom_of(c.children()));
    }
  }
  return m;
}

std::size_t min_atom(const Condition& c) {
  if (c.kind() == Condition::Kind::Atom) return c.atom_index();
  return min_atom_of(c.children());
}

void sort_operands(std::vector<Condition>& cs) {
  std::stable_sort(cs.begin(), cs.end(), [](const Condition& a, const Condition& b) {
    return min_atom(a) < min_atom(b);
  });
}

Condition make_nary(Condition::Kind k, std::vector<Condition> parts) {
  std::vector<Condition> flat;
  for (auto& p : parts) {
    if (p.kind() == k) {
      flat.insert(flat.end(), p.children().begin(), p.children().end());
    } else {
      flat.push_back(std::move(p));
    }
  }
  sort_operands(flat);
  if (flat.size() == 1) return flat.front();
  return k == Condition::Kind::And ? Condition::conjunction(std::move(flat))
                                   : Condition::disjunction(std::move(flat));
}

Condition build(const TruthTable& t, std::uint64_t start, std::size_t vars) {
  const std::uint64_t len = std::uint64_t{1} << vars;
  if (t.range_is(start, len, false)) return Condition::falsity();
  if (t.range_is(start, len, true)) return Condition::truth();
  const std::size_t x = vars - 1;
  const std::uint64_t half = len / 2;
  if (t.ranges_equal(start, start + half, half)) return build(t, start, x);
  const Condition lo = build(t, start, x);
  const Condition hi = build(t, start + half, x);
  const Condition a = Condition::atom(x);
  using K = Condition::Kind;
  const bool lo_t = lo.kind() == K::True;
  const bool lo_f = lo.kind() == K::False;
  const bool hi_t = hi.kind() == K::True;
  const bool hi_f = hi.kind() == K::False;
  if (hi_t && lo_f) return a;
  if (hi_f && lo_t) return Condition::negation(a);
  if (hi_t) return make_nary(K::Or, {a, lo});
  if (hi_f) return make_nary(K::And, {Condition::negation(a), lo});
  if (lo_t) return make_nary(K::Or, {Condition::negation(a), hi});
  if (lo_f) return make_nary(K::And, {a, hi});
  return make_nary(K::Or, {make_nary(K::And, {a, hi}),
                           make_nary(K::And, {Condition::negation(a), lo})});
}

}  // namespace

Condition Condition::from_table(const TruthTable& t) {
  struct Hash {
    std::size_t operator()(const TruthTable& x) const { return x.hash(); }
  };
  struct Same {
    bool operator()(const TruthTable& a, const TruthTable& b) const {
      return a.same_representation(b);
    }
  };
  constexpr std::size_t kCacheLimit = 1 << 14;
  thread_local std::unordered_map<TruthTable, Condition, Hash, Same> cache;
  if (const auto it = cache.find(t); it != cache.end()) return it->second;
  if (cache.size() >= kCacheLimit) cache.clear();
  Condition c = build(t, 0, t.vars());
  cache.emplace(t, c);
  return c;
}

Condition operator&(const Condition& a, const Condition& b) {
  return Condition::conjunction({a, b});
}

Condition operator|(const Condition& a, const Condition& b) {
  return Condition::disjunction({a, b});
}

Condition operator!(const Condition& a) { return Condition::negation(a); }

bool eval(const Condition& c, AssumptionSet a) { return c.table().get(a.bits()); }

bool sat(const Condition& c) { return c.table().any(); }

bool implies(const Condition& a, const Condition& b) {
  return a.table().implies(b.table());
}

bool equivalent(const Condition& a, const Condition& b) { return a.table() == b.table(); }

bool disjoint(const Condition& a, const Condition& b) {
  return !a.table().intersects(b.table());
}

Condition simplify(const Condition& c) {
  using K = Condition::Kind;
  const auto& t = c.table();
  if (!t.any()) return Condition::falsity();
  if (t.all()) return Condition::truth();
  switch (c.kind()) {
    case K::True:
    case K::False:
    case K::Atom:
      return c;
    case K::Not: {
      Condition s = simplify(c.children().front());
      if (s.kind() == K::Not) return s.children().front();
      return Condition::negation(std::move(s));
    }
    case K::And:
    case K::Or: {
      const bool is_and = c.kind() == K::And;
      std::vector<Condition> parts;
      for (const auto& ch : c.children()) {
        Condition s = simplify(ch);
        if (s.kind() == (is_and ? K::True : K::False)) continue;
        if (s.kind() == c.kind()) {
          parts.insert(parts.end(), s.children().begin(), s.children().end());
        } else {
          parts.push_back(std::move(s));
        }
      }
      std::vector<char> keep(parts.size(), 1);
      for (std::size_t j = parts.size(); j-- > 0;) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (i == j || !keep[i]) continue;
          const bool redundant = is_and ? implies(parts[i], parts[j])
                                        : implies(parts[j], parts[i]);
          if (redundant) {
            keep[j] = 0;
            break;
          }
        }
      }
      std::vector<Condition> out;
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (keep[i]) out.push_back(parts[i]);
      }
      if (out.size() == 1) return out.front();
      return is_and ? Condition::conjunction(std::move(out))
                    : Condition::disjunction(std::move(out));
    }
  }
  return c;
}

std::vector<AssumptionSet> satisfying_sets(const Condition& c, std::size_t width) {
  if (width > TruthTable::kMaxVars || width > 32) {
    throw WidthExceeded(width, TruthTable::kMaxVars);
  }
  if (c.table().vars() > width) {
    // Atoms at or above width may still be irrelevant to the function.
    const TruthTable& t = c.table();
    const std::uint64_t block = std::uint64_t{1} << width;
    for (std::uint64_t s = block; s < t.assignments(); s += block) {
      if (!t.ranges_equal(0, s, block)) {
        throw std::invalid_argument("condition mentions an assumption outside the universe");
      }
    }
  }
  std::vector<AssumptionSet> out;
  if (c.table().vars() > width) {
    for (std::uint64_t i = 0; i < (std::uint64_t{1} << width); ++i) {
      if (c.table().get(i)) out.emplace_back(static_cast<AssumptionSet::Bits>(i));
    }
    return out;
  }
  c.table().for_each_set(width, [&](std::uint64_t i) {
    out.emplace_back(static_cast<AssumptionSet::Bits>(i));
  });
  return out;
}

namespace {

void render_into(const Condition& c, const std::vector<std::string>& labels,
                 std::string& out) {
  using K = Condition::Kind;
  const auto nested = [&](const Condition& ch) {
    const bool paren = ch.kind() == K::And || ch.kind() == K::Or;
    if (paren) out += '(';
    render_into(ch, labels, out);
    if (paren) out += ')';
  };
  switch (c.kind()) {
    case K::True:
      out += "true";
      return;
    case K::False:
      out += "false";
      return;
    case K::Atom: {
      const std::size_t i = c.atom_index();
      out += i < labels.size() ? labels[i] : "a" + std::to_string(i);
      return;
    }
    case K::Not:
      out += '!';
      nested(c.children().front());
      return;
    case K::And:
    case K::Or: {
      if (c.children().empty()) {
        out += c.kind() == K::And ? "true" : "false";
        return;
      }
      const char* sep = c.kind() == K::And ? " & " : " | ";
      for (std::size_t i = 0; i < c.children().size(); ++i) {
        if (i) out += sep;
        nested(c.children()[i]);
      }
      return;
    }
  }
}

}  // namespace

std::string render(const Condition& c, const std::vector<std::string>& labels) {
  std::string out;
  render_into(c, labels, out);
  return out;
}

}  // namespace paramax
