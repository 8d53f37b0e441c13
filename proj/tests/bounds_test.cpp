#include <gtest/gtest.h>

#include "brute_force.hpp"
#include "sumset/bounds.hpp"

namespace sumset {
namespace {

TEST(BoundHA, SingleMultiplicity) {
  EXPECT_EQ(bound_hA(3, 2), 5);
  EXPECT_EQ(bound_hA(1, 7), 1);
  EXPECT_EQ(bound_hA(5, 3), 13);
  EXPECT_THROW(bound_hA(0, 2), Error);
}

TEST(BoundHHat, SingleMultiplicity) {
  EXPECT_EQ(bound_h_hat(4, 2), 5);
  EXPECT_EQ(bound_h_hat(5, 5), 1);
  EXPECT_EQ(bound_h_hat(6, 3), 10);
  try {
    bound_h_hat(3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::hypothesis);
  }
}

TEST(BoundUnion, Ordinary) {
  EXPECT_EQ(bound_HA(3, HSet{2, 3}, false), 8);
  for (std::int64_t k = 1; k <= 6; ++k) EXPECT_EQ(bound_HA(k, HSet{1}, false), k);
  EXPECT_EQ(bound_HA(4, HSet{1, 2, 3}, true), 10);
  EXPECT_THROW(bound_HA(4, HSet{0, 2}, false), Error);
}

TEST(BoundUnion, PositiveAndZeroFormulasDifferByRMinusOne) {
  for (std::int64_t k = 1; k <= 10; ++k)
    for (const HSet& h : {HSet{1}, HSet{2, 5}, HSet{1, 2, 3}, HSet{3, 4, 8, 9}})
      EXPECT_EQ(bound_HA(k, h, false) - bound_HA(k, h, true), static_cast<std::int64_t>(h.count()) - 1);
}

TEST(BoundUnion, Restricted) {
  EXPECT_EQ(bound_H_hat(5, HSet{1, 2}, false), 9);
  for (std::int64_t k = 1; k <= 8; ++k) EXPECT_EQ(bound_H_hat(k, HSet{k}, false), 1);
  // |H^A| for A = [0,5], H = {1,2}, frozen from subset enumeration.
  EXPECT_EQ(brute::union_fold({0, 1, 2, 3, 4, 5}, {1, 2}, true).size(), 10u);
  EXPECT_EQ(bound_H_hat(6, HSet{1, 2}, true), 10);
  EXPECT_THROW(bound_H_hat(4, HSet{1, 5}, false), Error);
  EXPECT_THROW(bound_H_hat(4, HSet{1, 4}, true), Error);
}

TEST(BoundUnion, GeneralFormulaReducesToClosedFormsForIntervals) {
  for (std::int64_t k = 1; k <= 20; ++k)
    for (std::int64_t r = 1; r <= k; ++r) {
      const HSet h(make_interval(1, r));
      // [0, r] with 0 not in A: one extra element for {0}.
      EXPECT_EQ(bound_H_hat(k, h, false) + 1, r * k - r * (r - 1) / 2 + 1);
      if (r <= k - 1) {
        EXPECT_EQ(bound_H_hat(k, h, true), r * k - r * (r + 1) / 2 + 1);
      }
    }
}

TEST(ExtremalExample, Examples) {
  auto [a, h] = extremal_example(3, 2, SumsetKind::ordinary, false);
  EXPECT_EQ(a, make_interval(1, 3));
  EXPECT_EQ(h, (HSet{1, 2}));
  EXPECT_EQ(evaluate_kind(a, h, SumsetKind::ordinary).computed_size, 6);

  auto [ar, hr] = extremal_example(5, 2, SumsetKind::restricted, false);
  EXPECT_EQ(evaluate_kind(ar, hr, SumsetKind::restricted).computed_size, 9);

  auto [a1, h1] = extremal_example(1, 1, SumsetKind::ordinary, false);
  EXPECT_EQ(a1, (IntSet{1}));
  const BoundReport single = evaluate_kind(a1, h1, SumsetKind::ordinary);
  EXPECT_EQ(single.computed_size, 1);
  EXPECT_TRUE(single.is_equality);

  EXPECT_THROW(extremal_example(3, 4, SumsetKind::restricted, false), Error);
  EXPECT_THROW(extremal_example(3, 3, SumsetKind::restricted, true), Error);
}

TEST(ExtremalExample, AlwaysAttainsTheBound) {
  for (std::int64_t k = 1; k <= 12; ++k)
    for (std::int64_t r = 1; r <= 12; ++r)
      for (bool zero : {false, true})
        for (SumsetKind kind : {SumsetKind::ordinary, SumsetKind::restricted}) {
          if (kind == SumsetKind::restricted && r > (zero ? k - 1 : k)) continue;
          auto [a, h] = extremal_example(k, r, kind, zero);
          const BoundReport rep = evaluate_kind(a, h, kind);
          EXPECT_TRUE(rep.hypotheses_met);
          EXPECT_TRUE(rep.is_equality) << "k=" << k << " r=" << r << " zero=" << zero;
        }
}

TEST(Evaluate, Examples) {
  const auto evens = evaluate(IntSet{2, 4, 6, 8}, HSet{1, 2});
  ASSERT_EQ(evens.size(), 2u);
  EXPECT_EQ(evens[0].computed_size, 8);
  EXPECT_EQ(evens[0].bound_value, 8);
  EXPECT_TRUE(evens[0].is_equality);
  EXPECT_EQ(evens[0].formula, BoundFormula::union_positive);

  const BoundReport strict = evaluate_kind(IntSet{1, 2, 4}, HSet{2, 3}, SumsetKind::ordinary);
  EXPECT_EQ(strict.computed_size, 10);
  EXPECT_EQ(strict.bound_value, 8);
  EXPECT_FALSE(strict.is_equality);

  const BoundReport zero = evaluate_kind(IntSet{0, 1, 2}, HSet{1, 2}, SumsetKind::ordinary);
  EXPECT_EQ(zero.computed_size, 5);
  EXPECT_EQ(zero.bound_value, 5);
  EXPECT_EQ(zero.formula, BoundFormula::union_with_zero);
  EXPECT_TRUE(zero.is_equality);
}

TEST(Evaluate, NegativeSetsReduceByReflection) {
  const auto pos = evaluate(IntSet{1, 2, 4}, HSet{2, 3});
  const auto neg = evaluate(IntSet{-4, -2, -1}, HSet{2, 3});
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(pos[i].computed_size, neg[i].computed_size);
    EXPECT_EQ(pos[i].bound_value, neg[i].bound_value);
  }
  const auto zneg = evaluate(IntSet{-2, -1, 0}, HSet{1, 2});
  EXPECT_EQ(zneg[0].formula, BoundFormula::union_with_zero);
}

TEST(Evaluate, MixedSignIsUnsupported) {
  try {
    evaluate(IntSet{-3, 2}, HSet{1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::unsupported_class);
  }
}

TEST(Evaluate, RestrictedBeyondKHasNoBound) {
  const BoundReport r = evaluate_kind(IntSet{1, 2}, HSet{1, 3}, SumsetKind::restricted);
  EXPECT_FALSE(r.hypotheses_met);
  EXPECT_FALSE(r.bound_value);
  EXPECT_FALSE(r.reason.empty());
  EXPECT_EQ(r.computed_size, 2);
}

TEST(Evaluate, ZeroMultiplicityHandledExplicitly) {
  // H = [0, r], 0 not in A: stripped bound plus the lone 0.
  for (std::int64_t k = 1; k <= 7; ++k)
    for (std::int64_t r = 1; r <= k; ++r) {
      const IntSet a = make_interval(1, k);
      const HSet with0(make_interval(0, r));
      const BoundReport rep = evaluate_kind(a, with0, SumsetKind::restricted);
      ASSERT_TRUE(rep.hypotheses_met);
      EXPECT_EQ(*rep.bound_value, r * k - r * (r - 1) / 2 + 1);
      EXPECT_TRUE(rep.is_equality);
      EXPECT_EQ(rep.computed_size,
                evaluate_kind(a, HSet(make_interval(1, r)), SumsetKind::restricted).computed_size + 1);
    }
  // 0 in A and 0 in H: {0} already comes from h = 1.
  const BoundReport zero_both = evaluate_kind(IntSet{0, 1, 2, 3}, HSet{0, 1, 2}, SumsetKind::restricted);
  EXPECT_TRUE(zero_both.hypotheses_met);
  EXPECT_EQ(zero_both.bound_value, bound_H_hat(4, HSet{1, 2}, true));

  EXPECT_FALSE(evaluate_kind(IntSet{1, 2, 3}, HSet{0, 2}, SumsetKind::restricted).hypotheses_met);
  EXPECT_FALSE(evaluate_kind(IntSet{1, 2, 3}, HSet{0}, SumsetKind::ordinary).hypotheses_met);
  EXPECT_FALSE(evaluate_kind(IntSet{0, 1, 3}, HSet{0, 2}, SumsetKind::restricted).hypotheses_met);
}

TEST(Evaluate, ComputedSizeNeverBelowBoundOnSmallSets) {
  for (std::int64_t mask = 1; mask < (1 << 9); ++mask) {
    std::vector<std::int64_t> v;
    for (int b = 0; b < 9; ++b)
      if (mask & (1 << b)) v.push_back(b);
    const IntSet a(v);
    for (const HSet& h : {HSet{1, 2}, HSet{2, 4}, HSet{1, 3, 4}, HSet{3}})
      for (const BoundReport& rep : evaluate(a, h))
        if (rep.hypotheses_met) {
          EXPECT_GE(rep.computed_size, *rep.bound_value);
        }
  }
}

}  // namespace
}  // namespace sumset
