#include <gtest/gtest.h>

#include <algorithm>
#include <cctype>
#include <set>

#include "paramax/cfg.hpp"
#include "support/oracles.hpp"

namespace paramax {
namespace {

using testing::corpus_files;
using testing::load;

TEST(Parser, ReadsStatementsAndVariables) {
  const Ast ast = parse("x := input();\nassume a: x > 0;\ny := 2 * x - 3;\nassert x <= y || y == 1;\n");
  EXPECT_EQ(ast.variables, (std::vector<std::string>{"x", "y"}));
  ASSERT_EQ(ast.statements.size(), 4u);
  const auto& as = std::get<stmt::Assume>(ast.statements[1].node);
  EXPECT_EQ(as.label, "a");
  ASSERT_EQ(as.constraint.conjuncts.size(), 1u);
  EXPECT_EQ(as.constraint.conjuncts[0].rel, Rel::Ge);
  EXPECT_EQ(as.constraint.conjuncts[0].constant, 1);
  const auto& asg = std::get<stmt::Assign>(ast.statements[2].node);
  EXPECT_EQ(asg.expr.constant, -3);
  ASSERT_EQ(asg.expr.terms.size(), 1u);
  EXPECT_EQ(asg.expr.terms[0].coef, 2);
  EXPECT_EQ(ast.statements[3].loc.line, 4);
}

TEST(Parser, StrictComparisonsBecomeNonStrict) {
  const Ast ast = parse("assume a: x < 3 && x > -2;");
  const auto& c = std::get<stmt::Assume>(ast.statements[0].node).constraint;
  ASSERT_EQ(c.conjuncts.size(), 2u);
  EXPECT_EQ(c.conjuncts[0].rel, Rel::Le);
  EXPECT_EQ(c.conjuncts[0].constant, 2);
  EXPECT_EQ(c.conjuncts[1].rel, Rel::Ge);
  EXPECT_EQ(c.conjuncts[1].constant, -1);
}

TEST(Parser, InputRangeAnnotation) {
  const Ast ast = parse("x := input() in [-2, 13];");
  const auto& in = std::get<stmt::Input>(ast.statements[0].node);
  ASSERT_TRUE(in.range.has_value());
  EXPECT_EQ(in.range->lo, -2);
  EXPECT_EQ(in.range->hi, 13);
}

struct BadProgram {
  const char* source;
  const char* message;
  int line;
};

class ParserErrors : public ::testing::TestWithParam<BadProgram> {};

TEST_P(ParserErrors, ReportsPosition) {
  const auto& p = GetParam();
  try {
    parse(p.source);
    FAIL() << "accepted: " << p.source;
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find(p.message), std::string::npos) << e.what();
    EXPECT_EQ(e.location().line, p.line);
  }
}

INSTANTIATE_TEST_SUITE_P(
    Frontend, ParserErrors,
    ::testing::Values(
        BadProgram{"x := 1;\nassume a: x >= 0;\nassume a: x <= 3;", "duplicate assume label", 3},
        BadProgram{"x := y * z;", "non-linear", 1},
        BadProgram{"assume a: x >= 1 || x <= -1;", "disjunctive", 1},
        BadProgram{"assume a: x <= y;", "relational", 1},
        BadProgram{"assume a: x != 3;", "'!='", 1},
        BadProgram{"x := 1\ny := 2;", "expected ';'", 2},
        BadProgram{"while (x < 3) {\n x := x + 1;\n", "unterminated block", 3},
        BadProgram{"x := input() in [4, 1];", "empty input range", 1},
        BadProgram{"x := 1 $ 2;", "unexpected character", 1}),
    [](const ::testing::TestParamInfo<BadProgram>& info) {
      std::string name = "case" + std::to_string(info.index) + "_";
      for (const char* c = info.param.message; *c; ++c) {
        if (std::isalnum(static_cast<unsigned char>(*c))) name += *c;
      }
      return name;
    });

TEST(Cfg, EntryExitAndReachability) {
  for (const auto& f : corpus_files()) {
    SCOPED_TRACE(f);
    const Cfg g = load(f);
    EXPECT_TRUE(g.predecessors(g.entry()).empty());
    EXPECT_TRUE(g.successors(g.exit()).empty());
    EXPECT_EQ(g.reverse_post_order().size(), g.size()) << "unreachable node";
    EXPECT_EQ(g.reverse_post_order().front(), g.entry());
    std::size_t assumes = 0;
    for (const auto& n : g.nodes()) {
      if (const auto* a = std::get_if<node::Assume>(&n.kind)) {
        ++assumes;
        EXPECT_EQ(g.assumptions().at(a->assumption).node, n.id);
      }
    }
    EXPECT_EQ(assumes, g.assumption_count());
  }
}

TEST(Cfg, Example1Layout) {
  const Cfg g = load("example1.pwl");
  ASSERT_EQ(g.size(), 6u);
  EXPECT_EQ(g.assumption_labels(), (std::vector<std::string>{"v2", "v4"}));
  EXPECT_EQ(g.assumptions()[0].node, 2u);
  EXPECT_EQ(g.assumptions()[1].node, 4u);
  EXPECT_EQ(kind_name(g.node(3).kind), "assign");
  EXPECT_EQ(describe(g, g.node(3)), "x := 5");
}

TEST(Cfg, BranchesBecomeGuards) {
  const Cfg g = compile("x := input();\nif (x > 0) { y := 1; } else { y := 2; }\n");
  // entry, input, guard, assign, guard, assign, exit
  ASSERT_EQ(g.size(), 7u);
  EXPECT_EQ(kind_name(g.node(2).kind), "guard");
  EXPECT_EQ(kind_name(g.node(4).kind), "guard");
  EXPECT_EQ(describe(g, g.node(2)), "x >= 1");
  EXPECT_EQ(describe(g, g.node(4)), "x <= 0");
  EXPECT_EQ(predecessors(g, g.exit()), (std::vector<NodeId>{3, 5}));
}

TEST(Cfg, LoopHeadHasBackEdge) {
  const Cfg g = load("fig1.pwl");
  std::vector<NodeId> heads;
  for (const auto& n : g.nodes()) {
    if (g.is_loop_head(n.id)) heads.push_back(n.id);
  }
  ASSERT_EQ(heads.size(), 1u);
  EXPECT_EQ(g.predecessors(heads[0]).size(), 2u);
}

TEST(Cfg, RestrictNeutralizesOtherAssumes) {
  const Cfg g = load("example1.pwl");
  const Cfg r = restrict(g, AssumptionSet::single(0));
  EXPECT_EQ(kind_name(r.node(2).kind), "assume");
  EXPECT_EQ(kind_name(r.node(4).kind), "skip");
  EXPECT_EQ(r.assumption_count(), 2u);
  EXPECT_EQ(r.successors(3), g.successors(3));
  EXPECT_THROW(restrict(g, AssumptionSet::single(2)), std::invalid_argument);
}

TEST(Cfg, DumpListsNodes) {
  const Cfg g = load("example1.pwl");
  const std::string d = dump(g);
  EXPECT_NE(d.find("id=1 kind=input stmt=\"x := input()\" succs=[2]"), std::string::npos) << d;
  EXPECT_NE(d.find("id=5 kind=exit succs=[]"), std::string::npos) << d;
}

}  // namespace
}  // namespace paramax
