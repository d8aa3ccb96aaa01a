#include "paramax/syntax.hpp"

#include <sstream>
#include <stdexcept>

namespace paramax {

Rel flip(Rel r) {
  switch (r) {
    case Rel::Le: return Rel::Ge;
    case Rel::Ge: return Rel::Le;
    default: return r;
  }
}

const char* to_string(Rel r) {
  switch (r) {
    case Rel::Le: return "<=";
    case Rel::Ge: return ">=";
    case Rel::Eq: return "==";
    case Rel::Ne: return "!=";
  }
  return "?";
}

namespace {

Comparison with_offset(Comparison c, Value delta) {
  if (c.rhs.is_var) {
    c.offset += delta;
  } else {
    c.rhs.value += delta;
  }
  return c;
}

std::string name_of(VarId v, VarNames names) {
  if (v < names.size()) return names[v];
  return "v" + std::to_string(v);
}

std::string render_operand(const Operand& o, VarNames names) {
  return o.is_var ? name_of(o.var, names) : std::to_string(o.value);
}

}  // namespace

Comparison negate(const Comparison& c) {
  Comparison out = c;
  switch (c.rel) {
    case Rel::Le:
      out.rel = Rel::Ge;
      return with_offset(out, 1);
    case Rel::Ge:
      out.rel = Rel::Le;
      return with_offset(out, -1);
    case Rel::Eq:
      out.rel = Rel::Ne;
      return out;
    case Rel::Ne:
      out.rel = Rel::Eq;
      return out;
  }
  throw std::logic_error("negate: bad relation");
}

std::string render(const LinearExpr& e, VarNames names) {
  std::ostringstream os;
  bool first = true;
  for (const auto& t : e.terms) {
    Value c = t.coef;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    } else if (c < 0) {
      os << "-";
      c = -c;
    }
    if (c != 1) os << c << " * ";
    os << name_of(t.var, names);
    first = false;
  }
  if (first) {
    os << e.constant;
  } else if (e.constant != 0) {
    os << (e.constant < 0 ? " - " : " + ")
       << (e.constant < 0 ? -e.constant : e.constant);
  }
  return os.str();
}

std::string render(const Comparison& c, VarNames names) {
  std::ostringstream os;
  os << render_operand(c.lhs, names) << ' ' << to_string(c.rel) << ' '
     << render_operand(c.rhs, names);
  if (c.offset > 0) os << " + " << c.offset;
  if (c.offset < 0) os << " - " << -c.offset;
  return os.str();
}

std::string render(const AssertExpr& e, VarNames names) {
  if (e.kind == AssertExpr::Kind::Compare) return render(e.compare, names);
  const char* sep = e.kind == AssertExpr::Kind::And ? " && " : " || ";
  std::string out;
  for (std::size_t i = 0; i < e.children.size(); ++i) {
    if (i) out += sep;
    const auto& ch = e.children[i];
    if (ch.kind == AssertExpr::Kind::Compare) {
      out += render(ch, names);
    } else {
      out += "(" + render(ch, names) + ")";
    }
  }
  return out;
}

std::string render(const AtomicConstraint& c, VarNames names) {
  std::string out;
  for (std::size_t i = 0; i < c.conjuncts.size(); ++i) {
    const auto& b = c.conjuncts[i];
    if (i) out += " && ";
    out += name_of(b.var, names) + " " + to_string(b.rel) + " " +
           std::to_string(b.constant);
  }
  return out;
}

}  // namespace paramax
