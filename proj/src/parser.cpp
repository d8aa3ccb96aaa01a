#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string_view>

#include "paramax/ast.hpp"

namespace paramax {

namespace {

// Largest magnitude accepted for an integer literal.
constexpr Value kLiteralLimit = Value{1} << 62;

enum class Tok {
  Ident, Int, Assign, Colon, Semi, LBrace, RBrace, LParen, RParen, LBracket,
  RBracket, Comma, Plus, Minus, Star, Le, Lt, Ge, Gt, Eq, Ne, AndAnd, OrOr,
  End
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Value value = 0;
  SourceLoc loc;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      skip_space();
      Token t;
      t.loc = {line_, col_};
      if (pos_ >= src_.size()) {
        t.kind = Tok::End;
        out.push_back(t);
        return out;
      }
      const char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          advance();
        }
        t.kind = Tok::Ident;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        Value v = 0;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          v = v * 10 + (src_[pos_] - '0');
          if (v > kLiteralLimit) throw ParseError(t.loc, "integer literal too large");
          advance();
        }
        t.kind = Tok::Int;
        t.value = v;
      } else {
        t.kind = punct(t.loc);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else {
        break;
      }
    }
  }

  bool next_is(char c) const {
    return pos_ + 1 < src_.size() && src_[pos_ + 1] == c;
  }

  Tok two(Tok t) {
    advance();
    advance();
    return t;
  }

  Tok one(Tok t) {
    advance();
    return t;
  }

  Tok punct(SourceLoc loc) {
    switch (src_[pos_]) {
      case ':': return next_is('=') ? two(Tok::Assign) : one(Tok::Colon);
      case ';': return one(Tok::Semi);
      case '{': return one(Tok::LBrace);
      case '}': return one(Tok::RBrace);
      case '(': return one(Tok::LParen);
      case ')': return one(Tok::RParen);
      case '[': return one(Tok::LBracket);
      case ']': return one(Tok::RBracket);
      case ',': return one(Tok::Comma);
      case '+': return one(Tok::Plus);
      case '-': return one(Tok::Minus);
      case '*': return one(Tok::Star);
      case '<': return next_is('=') ? two(Tok::Le) : one(Tok::Lt);
      case '>': return next_is('=') ? two(Tok::Ge) : one(Tok::Gt);
      case '=': return next_is('=') ? two(Tok::Eq) : one(Tok::Eq);
      case '!':
        if (next_is('=')) return two(Tok::Ne);
        break;
      case '&':
        if (next_is('&')) return two(Tok::AndAnd);
        break;
      case '|':
        if (next_is('|')) return two(Tok::OrOr);
        break;
      default:
        break;
    }
    throw ParseError(loc, std::string("unexpected character '") + src_[pos_] + "'");
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

const std::set<std::string, std::less<>> kKeywords = {
    "if", "else", "while", "assume", "assert", "skip", "input", "in"};

// Relation as written, before strict comparisons are normalized away.
enum class RawRel { Le, Lt, Ge, Gt, Eq, Ne };

bool is_relation(Tok t) {
  return t == Tok::Le || t == Tok::Lt || t == Tok::Ge || t == Tok::Gt ||
         t == Tok::Eq || t == Tok::Ne;
}

RawRel raw_relation(Tok t) {
  switch (t) {
    case Tok::Le: return RawRel::Le;
    case Tok::Lt: return RawRel::Lt;
    case Tok::Ge: return RawRel::Ge;
    case Tok::Gt: return RawRel::Gt;
    case Tok::Eq: return RawRel::Eq;
    default: return RawRel::Ne;
  }
}

Value checked_add(Value a, Value b, SourceLoc loc) {
  Value r;
  if (__builtin_add_overflow(a, b, &r) || r > kLiteralLimit || r < -kLiteralLimit) {
    throw ParseError(loc, "constant out of range");
  }
  return r;
}

Value checked_mul(Value a, Value b, SourceLoc loc) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r) || r > kLiteralLimit || r < -kLiteralLimit) {
    throw ParseError(loc, "constant out of range");
  }
  return r;
}

LinearExpr combine(const LinearExpr& a, const LinearExpr& b, Value sign,
                   SourceLoc loc) {
  LinearExpr out;
  out.constant = checked_add(a.constant, checked_mul(sign, b.constant, loc), loc);
  std::map<VarId, Value> coefs;
  for (const auto& t : a.terms) coefs[t.var] = t.coef;
  for (const auto& t : b.terms) {
    coefs[t.var] = checked_add(coefs[t.var], checked_mul(sign, t.coef, loc), loc);
  }
  for (const auto& [v, c] : coefs) {
    if (c != 0) out.terms.push_back({v, c});
  }
  return out;
}

LinearExpr scaled(const LinearExpr& e, Value k, SourceLoc loc) {
  LinearExpr out;
  out.constant = checked_mul(e.constant, k, loc);
  if (k == 0) return out;
  for (const auto& t : e.terms) out.terms.push_back({t.var, checked_mul(t.coef, k, loc)});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Ast run() {
    Ast ast;
    while (peek().kind != Tok::End) ast.statements.push_back(statement());
    ast.variables = std::move(vars_);
    return ast;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }

  const Token& take() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  bool accept(Tok k) {
    if (peek().kind != k) return false;
    take();
    return true;
  }

  const Token& expect(Tok k, const char* what) {
    if (peek().kind != k) {
      throw ParseError(peek().loc, std::string("expected ") + what);
    }
    return take();
  }

  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) {
      throw ParseError(peek().loc, "expected '" + std::string(kw) + "'");
    }
    take();
  }

  VarId variable(const Token& t) {
    if (kKeywords.count(t.text)) {
      throw ParseError(t.loc, "keyword '" + t.text + "' used as a variable");
    }
    auto it = std::find(vars_.begin(), vars_.end(), t.text);
    if (it != vars_.end()) return static_cast<VarId>(it - vars_.begin());
    vars_.push_back(t.text);
    return static_cast<VarId>(vars_.size() - 1);
  }

  Block block() {
    expect(Tok::LBrace, "'{'");
    Block out;
    while (peek().kind != Tok::RBrace) {
      if (peek().kind == Tok::End) throw ParseError(peek().loc, "unterminated block");
      out.push_back(statement());
    }
    take();
    return out;
  }

  Stmt statement() {
    const SourceLoc loc = peek().loc;
    if (peek().kind != Tok::Ident) throw ParseError(loc, "expected a statement");

    if (at_keyword("if")) {
      take();
      expect(Tok::LParen, "'('");
      Comparison cond = guard();
      expect(Tok::RParen, "')'");
      stmt::If s{cond, block(), {}};
      if (at_keyword("else")) {
        take();
        if (at_keyword("if")) {
          s.else_block.push_back(statement());
        } else {
          s.else_block = block();
        }
      }
      return {std::move(s), loc};
    }
    if (at_keyword("while")) {
      take();
      expect(Tok::LParen, "'('");
      Comparison cond = guard();
      expect(Tok::RParen, "')'");
      return {stmt::While{cond, block()}, loc};
    }
    if (at_keyword("assume")) {
      take();
      const Token& label = expect(Tok::Ident, "an assumption label");
      if (!labels_.insert(label.text).second) {
        throw ParseError(label.loc, "duplicate assume label '" + label.text + "'");
      }
      expect(Tok::Colon, "':'");
      AtomicConstraint c = constraint();
      expect(Tok::Semi, "';'");
      return {stmt::Assume{label.text, std::move(c)}, loc};
    }
    if (at_keyword("assert")) {
      take();
      AssertExpr e = assertion();
      expect(Tok::Semi, "';'");
      return {stmt::Assert{std::move(e)}, loc};
    }
    if (at_keyword("skip")) {
      take();
      expect(Tok::Semi, "';'");
      return {stmt::Skip{}, loc};
    }

    const VarId target = variable(take());
    expect(Tok::Assign, "':='");
    if (at_keyword("input") && peek(1).kind == Tok::LParen) {
      take();
      take();
      expect(Tok::RParen, "')'");
      std::optional<InputRange> range;
      if (at_keyword("in")) {
        take();
        expect(Tok::LBracket, "'['");
        Value lo = signed_literal();
        expect(Tok::Comma, "','");
        Value hi = signed_literal();
        expect(Tok::RBracket, "']'");
        if (lo > hi) throw ParseError(loc, "empty input range");
        range = InputRange{lo, hi};
      }
      expect(Tok::Semi, "';'");
      return {stmt::Input{target, range}, loc};
    }
    LinearExpr e = expression();
    expect(Tok::Semi, "';'");
    return {stmt::Assign{target, std::move(e)}, loc};
  }

  Value signed_literal() {
    bool neg = accept(Tok::Minus);
    Value v = expect(Tok::Int, "an integer").value;
    return neg ? -v : v;
  }

  LinearExpr expression() {
    LinearExpr acc = term();
    for (;;) {
      const SourceLoc loc = peek().loc;
      if (accept(Tok::Plus)) {
        acc = combine(acc, term(), 1, loc);
      } else if (accept(Tok::Minus)) {
        acc = combine(acc, term(), -1, loc);
      } else {
        return acc;
      }
    }
  }

  LinearExpr term() {
    LinearExpr acc = factor();
    while (peek().kind == Tok::Star) {
      const SourceLoc loc = take().loc;
      LinearExpr rhs = factor();
      if (acc.is_constant()) {
        acc = scaled(rhs, acc.constant, loc);
      } else if (rhs.is_constant()) {
        acc = scaled(acc, rhs.constant, loc);
      } else {
        throw ParseError(loc, "non-linear expression");
      }
    }
    return acc;
  }

  LinearExpr factor() {
    const Token& t = peek();
    if (accept(Tok::Minus)) return scaled(factor(), -1, t.loc);
    if (t.kind == Tok::Int) return LinearExpr::of_constant(take().value);
    if (accept(Tok::LParen)) {
      LinearExpr e = expression();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind == Tok::Ident) return LinearExpr::of_var(variable(take()));
    throw ParseError(t.loc, "expected an expression");
  }

  struct RawComparison {
    LinearExpr lhs;
    RawRel rel;
    LinearExpr rhs;
    SourceLoc loc;
  };

  RawComparison raw_comparison() {
    RawComparison c;
    c.loc = peek().loc;
    c.lhs = expression();
    if (!is_relation(peek().kind)) throw ParseError(peek().loc, "expected a comparison operator");
    c.rel = raw_relation(take().kind);
    c.rhs = expression();
    return c;
  }

  // Brings `lhs rel rhs` into the form `x rel y + k` or `x rel c` (or a
  // constant comparison), with strict relations made non-strict.
  static Comparison normalize(const RawComparison& raw) {
    const LinearExpr d = combine(raw.lhs, raw.rhs, -1, raw.loc);
    RawRel rel = raw.rel;
    Comparison c;
    auto flip_raw = [](RawRel r) {
      switch (r) {
        case RawRel::Le: return RawRel::Ge;
        case RawRel::Lt: return RawRel::Gt;
        case RawRel::Ge: return RawRel::Le;
        case RawRel::Gt: return RawRel::Lt;
        default: return r;
      }
    };
    // d rel 0
    if (d.terms.empty()) {
      c.lhs = Operand::constant(d.constant);
      c.rhs = Operand::constant(0);
    } else if (d.terms.size() == 1 && (d.terms[0].coef == 1 || d.terms[0].coef == -1)) {
      c.lhs = Operand::variable(d.terms[0].var);
      if (d.terms[0].coef == 1) {
        c.rhs = Operand::constant(-d.constant);
      } else {
        c.rhs = Operand::constant(d.constant);
        rel = flip_raw(rel);
      }
    } else if (d.terms.size() == 2 && d.terms[0].coef == -d.terms[1].coef &&
               (d.terms[0].coef == 1 || d.terms[0].coef == -1)) {
      const auto& pos = d.terms[0].coef == 1 ? d.terms[0] : d.terms[1];
      const auto& neg = d.terms[0].coef == 1 ? d.terms[1] : d.terms[0];
      // pos - neg + k rel 0  <=>  pos rel neg - k; keep the first-written
      // variable on the left.
      const bool pos_first = !raw.lhs.terms.empty() &&
                             std::any_of(raw.lhs.terms.begin(), raw.lhs.terms.end(),
                                         [&](const LinearTerm& t) { return t.var == pos.var; });
      if (pos_first || raw.lhs.terms.empty()) {
        c.lhs = Operand::variable(pos.var);
        c.rhs = Operand::variable(neg.var);
        c.offset = -d.constant;
      } else {
        c.lhs = Operand::variable(neg.var);
        c.rhs = Operand::variable(pos.var);
        c.offset = d.constant;
        rel = flip_raw(rel);
      }
    } else {
      throw ParseError(raw.loc,
                       "comparison must relate a variable to a constant or to another variable");
    }

    auto shift = [&](Value delta) {
      if (c.rhs.is_var) {
        c.offset = checked_add(c.offset, delta, raw.loc);
      } else {
        c.rhs.value = checked_add(c.rhs.value, delta, raw.loc);
      }
    };
    switch (rel) {
      case RawRel::Le: c.rel = Rel::Le; break;
      case RawRel::Ge: c.rel = Rel::Ge; break;
      case RawRel::Eq: c.rel = Rel::Eq; break;
      case RawRel::Ne: c.rel = Rel::Ne; break;
      case RawRel::Lt: c.rel = Rel::Le; shift(-1); break;
      case RawRel::Gt: c.rel = Rel::Ge; shift(1); break;
    }
    return c;
  }

  Comparison guard() { return normalize(raw_comparison()); }

  AtomicConstraint constraint() {
    AtomicConstraint out;
    do {
      RawComparison raw = raw_comparison();
      Comparison c = normalize(raw);
      if (c.rhs.is_var) {
        throw ParseError(raw.loc, "relational assumptions are not interval-representable");
      }
      if (!c.lhs.is_var) {
        throw ParseError(raw.loc, "assumption conjunct must mention a variable");
      }
      if (c.rel == Rel::Ne) {
        throw ParseError(raw.loc, "'!=' assumptions are not interval-representable");
      }
      out.conjuncts.push_back({c.lhs.var, c.rel, c.rhs.value});
    } while (accept(Tok::AndAnd));
    if (peek().kind == Tok::OrOr) {
      throw ParseError(peek().loc, "disjunctive assumptions are not supported");
    }
    return out;
  }

  AssertExpr assertion() {
    std::vector<AssertExpr> parts{assert_conjunction()};
    while (accept(Tok::OrOr)) parts.push_back(assert_conjunction());
    return parts.size() == 1 ? std::move(parts[0]) : AssertExpr::any_of(std::move(parts));
  }

  AssertExpr assert_conjunction() {
    std::vector<AssertExpr> parts{assert_atom()};
    while (accept(Tok::AndAnd)) parts.push_back(assert_atom());
    return parts.size() == 1 ? std::move(parts[0]) : AssertExpr::all_of(std::move(parts));
  }

  AssertExpr assert_atom() {
    if (peek().kind == Tok::LParen) {
      // Either a parenthesized assertion or a comparison whose left side
      // starts with a parenthesized expression.
      const std::size_t saved = pos_;
      const auto saved_vars = vars_;
      try {
        take();
        AssertExpr inner = assertion();
        expect(Tok::RParen, "')'");
        if (!is_relation(peek().kind) && peek().kind != Tok::Plus &&
            peek().kind != Tok::Minus && peek().kind != Tok::Star) {
          return inner;
        }
      } catch (const ParseError&) {
      }
      pos_ = saved;
      vars_ = saved_vars;
    }
    return AssertExpr::leaf(normalize(raw_comparison()));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::vector<std::string> vars_;
  std::set<std::string> labels_;
};

}  // namespace

Ast parse(std::string_view source) {
  return Parser(Lexer(source).run()).run();
}

}  // namespace paramax
