#include <gtest/gtest.h>

#include "paramax/param_state.hpp"
#include "support/oracles.hpp"

namespace paramax {
namespace {

using testing::all_subsets;
using testing::as_canonical;
using testing::brute_rho;
using testing::enumerate_canonical;
using testing::Random;

const Condition a = Condition::atom(0);
const Condition b = Condition::atom(1);

IntervalEnv x_in(Value lo, Value hi) { return IntervalEnv::of({{lo, hi}}); }

AssumeState x_at_least(Value k) {
  return AssumeState::from(AtomicConstraint{{{0, Rel::Ge, k}}});
}

TEST(ParamState, Rho) {
  const IntervalEnv s = x_in(2, 3);
  EXPECT_EQ(rho(ParamState::uniform(s), AssumptionSet(1)), s);
  const ParamState x{{{a, x_in(1, kPosInf)}, {!a, IntervalEnv::top(1)}}};
  EXPECT_EQ(rho(x, AssumptionSet::single(0)), x_in(1, kPosInf));
  EXPECT_EQ(rho(x, AssumptionSet()), IntervalEnv::top(1));
  const ParamState broken{{{a, s}, {Condition::truth(), s}}};
  EXPECT_THROW(rho(broken, AssumptionSet::single(0)), std::logic_error);
  EXPECT_THROW(rho(ParamState{{{a, s}}}, AssumptionSet()), std::logic_error);
}

TEST(ParamState, ExactMergeStep) {
  const ParamState x{{{a, x_in(5, 5)}, {!a, x_in(5, 5)}}};
  const auto m = exact_merge_step(x);
  ASSERT_TRUE(m);
  ASSERT_EQ(m->rules.size(), 1u);
  EXPECT_TRUE(equivalent(m->rules[0].condition, a | !a));
  EXPECT_EQ(m->rules[0].state, x_in(5, 5));

  EXPECT_FALSE(exact_merge_step(ParamState{{{a, x_in(1, 1)}, {!a, x_in(2, 2)}}}));

  const ParamState three{{{a & b, x_in(0, 0)}, {a & !b, x_in(0, 0)}, {!a, x_in(0, 0)}}};
  const auto once = exact_merge_step(three);
  ASSERT_TRUE(once);
  EXPECT_EQ(once->rules.size(), 2u);
}

TEST(ParamState, RedundancyElimStep) {
  const IntervalEnv s = IntervalEnv::top(1);
  const ParamState x{{{!a & a, x_in(1, kPosInf)}, {!a, s}}};
  const auto r = redundancy_elim_step(x);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (ParamState{{{!a, s}}}));
  EXPECT_FALSE(redundancy_elim_step(ParamState{{{a, s}, {!a, s}}}));
  const auto r2 = redundancy_elim_step(ParamState{{{Condition::falsity(), s}, {Condition::truth(), x_in(0, 0)}}});
  ASSERT_TRUE(r2);
  EXPECT_EQ(*r2, ParamState::uniform(x_in(0, 0)));
}

TEST(ParamState, NormalizeInf) {
  const ParamState x{{{a, x_in(5, 5)}, {!a, x_in(5, 5)}}};
  EXPECT_EQ(normalize_inf(x), ParamState::uniform(x_in(5, 5)));
  const ParamState inf{{{!a, IntervalEnv::top(1)}, {a, x_in(1, kPosInf)}}};
  EXPECT_EQ(normalize_inf(inf), inf);
}

TEST(ParamState, Split) {
  const ParamState top = ParamState::uniform(IntervalEnv::top(1));
  const ParamState s = split(top, 0, x_at_least(1));
  EXPECT_EQ(normalize_inf(s), (ParamState{{{!a, IntervalEnv::top(1)}, {a, x_in(1, kPosInf)}}}));

  const ParamState only_rejected{{{!a, IntervalEnv::top(1)}}};
  EXPECT_EQ(split(only_rejected, 0, x_at_least(1)), only_rejected);

  const ParamState accepted{{{a, x_in(-3, 3)}}};
  const ParamState r = split(accepted, 0, x_at_least(1));
  ASSERT_EQ(r.rules.size(), 1u);
  EXPECT_EQ(r.rules[0].condition, a);
  EXPECT_EQ(r.rules[0].state, x_in(1, 3));
}

TEST(ParamState, JoinParam) {
  const ParamState x{{{a, x_in(1, 3)}, {!a, x_in(7, 9)}}};
  EXPECT_EQ(join_param(std::vector<ParamState>{x}), normalize_inf(x));
  const ParamState j = join_param(ParamState::uniform(x_in(11, 12)), ParamState::uniform(x_in(0, 0)));
  EXPECT_EQ(j, ParamState::uniform(x_in(0, 12)));
  EXPECT_EQ(join_param(x, ParamState::uniform(IntervalEnv::bottom(1))), normalize_inf(x));
}

TEST(ParamState, LeqParam) {
  const ParamState x{{{a, x_in(1, 3)}, {!a, x_in(7, 9)}}};
  EXPECT_TRUE(leq_param(x, x));
  EXPECT_TRUE(leq_param(ParamState::uniform(IntervalEnv::bottom(1)), x));
  EXPECT_FALSE(leq_param(x, ParamState{{{a, x_in(1, 3)}, {!a, x_in(8, 9)}}}));
  EXPECT_TRUE(leq_param(x, approx_merge(x, 0, 1)));
}

TEST(ParamState, ApproxMerge) {
  const ParamState x{{{a, x_in(1, 3)}, {!a, x_in(10, 12)}}};
  const ParamState m = approx_merge(x, 0, 1);
  ASSERT_EQ(m.rules.size(), 1u);
  EXPECT_TRUE(equivalent(m.rules[0].condition, Condition::truth()));
  EXPECT_EQ(m.rules[0].state, x_in(1, 12));
  EXPECT_THROW(approx_merge(x, 0, 0), std::invalid_argument);
  EXPECT_THROW(approx_merge(x, 0, 2), std::out_of_range);

  const ParamState same{{{a, x_in(4, 4)}, {!a, x_in(4, 4)}}};
  EXPECT_EQ(normalize_inf(approx_merge(same, 0, 1)), normalize_inf(*exact_merge_step(same)));
}

TEST(ParamState, Loss) {
  EXPECT_EQ(loss(x_in(1, 3), x_in(1, 3)), (Loss{0, 0}));
  EXPECT_EQ(loss(x_in(1, 3), x_in(10, 12)), (Loss{0, 9}));
  EXPECT_EQ(loss(x_in(0, 5), x_in(0, kPosInf)), (Loss{0, 0}));
  EXPECT_EQ(loss(IntervalEnv::bottom(1), x_in(0, 100)), (Loss{0, 0}));
  EXPECT_LT((Loss{0, 1000}), (Loss{1, 0}));
}

TEST(ParamState, ReduceToBudget) {
  const ParamState x{{{a & b, x_in(1, 2)}, {a & !b, x_in(2, 3)}, {!a, x_in(100, 200)}}};
  EXPECT_EQ(reduce_to_budget(x, 3), x);
  const ParamState r = reduce_to_budget(x, 2);
  ASSERT_EQ(r.rules.size(), 2u);
  for (auto s : all_subsets(2)) {
    const IntervalEnv want = s.contains(0) ? x_in(1, 3) : x_in(100, 200);
    EXPECT_EQ(rho(r, s), want);
  }
  const ParamState one = reduce_to_budget(x, 1);
  EXPECT_EQ(one, ParamState::uniform(x_in(1, 200)));
  EXPECT_THROW(reduce_to_budget(x, 0), std::invalid_argument);
}

TEST(ParamState, WidenParamCoversBoth) {
  const ParamState p{{{a, x_in(0, 1)}, {!a, x_in(5, 5)}}};
  const ParamState n{{{a, x_in(0, 2)}, {!a, x_in(5, 5)}}};
  const ParamState w = widen_param(p, n);
  EXPECT_EQ(rho(w, AssumptionSet::single(0)), x_in(0, kPosInf));
  EXPECT_EQ(rho(w, AssumptionSet()), x_in(5, 5));
}

class Randomized : public ::testing::Test {
 protected:
  Random rnd{31};
};

TEST_F(Randomized, NormalizeMatchesEnumeration) {
  for (int t = 0; t < 500; ++t) {
    const std::size_t width = static_cast<std::size_t>(rnd.range(0, 4));
    const ParamState x = rnd.param_state(width, 6, 2);
    const ParamState n = normalize_inf(x);
    EXPECT_TRUE(is_partition(n, width));
    EXPECT_EQ(as_canonical(n, width), enumerate_canonical(x, width));
  }
}

TEST_F(Randomized, ReductionOrderDoesNotMatter) {
  for (int t = 0; t < 100; ++t) {
    const std::size_t width = static_cast<std::size_t>(rnd.range(1, 4));
    const ParamState x = rnd.param_state(width, 6, 2);
    const ParamState want = normalize_inf(x);
    for (int order = 0; order < 20; ++order) {
      ParamState cur = x;
      std::shuffle(cur.rules.begin(), cur.rules.end(), rnd.engine());
      for (;;) {
        auto m = exact_merge_step(cur);
        auto r = redundancy_elim_step(cur);
        if (!m && !r) break;
        const bool pick_merge = m && (!r || rnd.chance(0.5));
        cur = pick_merge ? *m : *r;
        std::shuffle(cur.rules.begin(), cur.rules.end(), rnd.engine());
      }
      ASSERT_EQ(canonicalize(cur), want);
    }
  }
}

TEST_F(Randomized, SplitCorrectness) {
  for (int t = 0; t < 500; ++t) {
    const std::size_t width = static_cast<std::size_t>(rnd.range(1, 4));
    const ParamState x = normalize_inf(rnd.param_state(width, 6, 1));
    const std::size_t at = static_cast<std::size_t>(rnd.range(0, static_cast<int>(width) - 1));
    const AssumeState p = x_at_least(rnd.range(-3, 3));
    const ParamState s = split(x, at, p);
    EXPECT_TRUE(is_partition(s, width));
    for (auto A : all_subsets(width)) {
      const IntervalEnv want = A.contains(at) ? meet(rho(x, A), p) : rho(x, A);
      EXPECT_EQ(brute_rho(s, A), want);
    }
  }
}

TEST_F(Randomized, JoinIsPointwise) {
  for (int t = 0; t < 500; ++t) {
    const std::size_t width = static_cast<std::size_t>(rnd.range(0, 4));
    std::vector<ParamState> xs;
    for (int k = rnd.range(1, 3); k > 0; --k) xs.push_back(rnd.param_state(width, 5, 2));
    const ParamState j = join_param(xs);
    EXPECT_TRUE(is_partition(j, width));
    for (auto A : all_subsets(width)) {
      IntervalEnv want = IntervalEnv::bottom(2);
      for (const auto& x : xs) want = join(want, brute_rho(x, A));
      EXPECT_EQ(brute_rho(j, A), want);
    }
  }
}

TEST_F(Randomized, LeqMatchesEnumeration) {
  for (int t = 0; t < 1000; ++t) {
    const std::size_t width = static_cast<std::size_t>(rnd.range(0, 3));
    const ParamState x = rnd.param_state(width, 4, 1);
    ParamState y = rnd.param_state(width, 4, 1);
    if (rnd.chance(0.5)) y = join_param(x, y);
    bool want = true;
    for (auto A : all_subsets(width)) want = want && leq(brute_rho(x, A), brute_rho(y, A));
    EXPECT_EQ(leq_param(x, y), want);
  }
}

TEST_F(Randomized, ApproxMergeOverApproximates) {
  for (int t = 0; t < 1000; ++t) {
    const std::size_t width = static_cast<std::size_t>(rnd.range(1, 4));
    const ParamState x = normalize_inf(rnd.param_state(width, 6, 2));
    if (x.rules.size() < 2) continue;
    const int n = static_cast<int>(x.rules.size());
    const auto i = static_cast<std::size_t>(rnd.range(0, n - 1));
    auto j = static_cast<std::size_t>(rnd.range(0, n - 2));
    if (j >= i) ++j;
    const ParamState m = approx_merge(x, i, j);
    EXPECT_TRUE(is_partition(m, width));
    EXPECT_TRUE(leq_param(x, m));
    const ParamState r = reduce_to_budget(x, static_cast<std::size_t>(rnd.range(1, 3)));
    EXPECT_TRUE(is_partition(r, width));
    EXPECT_TRUE(leq_param(x, r));
  }
}

TEST_F(Randomized, WidenParamIsUpperBound) {
  for (int t = 0; t < 500; ++t) {
    const std::size_t width = static_cast<std::size_t>(rnd.range(0, 3));
    const ParamState p = rnd.param_state(width, 4, 2);
    const ParamState n = rnd.param_state(width, 4, 2);
    const ParamState w = widen_param(p, n);
    EXPECT_TRUE(is_partition(w, width));
    for (auto A : all_subsets(width)) {
      EXPECT_EQ(rho(w, A), widen(brute_rho(p, A), brute_rho(n, A)));
    }
  }
}

}  // namespace
}  // namespace paramax
