#include <gtest/gtest.h>

#include <random>
#include <set>

#include "mindswap/machine.hpp"
#include "mindswap/undo.hpp"
#include "test_util.hpp"

using namespace mindswap;
using mindswap::testing::chrono_seq;
using mindswap::testing::P;
using mindswap::testing::product_seq;

namespace
{

UndoBudget budget_of(char const *text)
{
  return min_undo_count(decompose(P(text)));
}

// Every invariant a returned factorization must satisfy.
void expect_sound(Permutation const &p, FactorizationResult const &f)
{
  auto d = decompose(p);
  EXPECT_EQ(f.factors.order, Order::ProductNotation);
  EXPECT_EQ(f.factors.size(), min_undo_count(d).M) << to_string(p);
  EXPECT_EQ(product(f.factors), p) << to_string(p);
  std::set<Transposition> distinct(f.factors.swaps.begin(), f.factors.swaps.end());
  EXPECT_EQ(distinct.size(), f.factors.size()) << to_string(p);
  for (auto const &t : d.two_cycles())
    EXPECT_FALSE(distinct.contains(t)) << to_string(p) << " uses " << to_string(t);
  for (Label h : f.helpers_used)
    EXPECT_EQ(p(h), h);
  EXPECT_EQ(f.helpers_used.empty(), d.n != 2);
}

} // namespace

TEST(Epsilon, Values)
{
  EXPECT_EQ(epsilon(0), 0u);
  EXPECT_EQ(epsilon(1), 1u);
  EXPECT_EQ(epsilon(4), 0u);
  EXPECT_EQ(epsilon(7), 1u);
}

TEST(MinUndoCount, PaperCases)
{
  EXPECT_EQ(budget_of("(12)(3456789)").M, 9u);
  auto two = budget_of("(12)");
  EXPECT_EQ(two.M, 5u);
  EXPECT_EQ(two.helpers_required, 2u);
  EXPECT_EQ(budget_of("(12)(34)").M, 4u);
  EXPECT_EQ(budget_of("(12)(34)(56)").M, 7u);
  EXPECT_EQ(budget_of("(12)(34)(56)(78)").M, 8u);
  EXPECT_EQ(budget_of("(123)").M, 2u);
  EXPECT_EQ(budget_of("(12)(34)(56)").helpers_required, 0u);
}

TEST(MinUndoCount, TwoRFamily)
{
  for (std::size_t r = 2; r <= 10; ++r) {
    std::vector<Cycle> cycles;
    for (Label k = 0; k < r; ++k)
      cycles.push_back({2 * k + 1, 2 * k + 2});
    auto b = min_undo_count(decompose(from_cycles(cycles)));
    EXPECT_EQ(b.M, 2 * r + epsilon(r));
  }
}

TEST(MinUndoCount, IdentityRejected)
{
  EXPECT_THROW(min_undo_count(decompose(Permutation::identity())), NothingToUndoError);
  EXPECT_THROW(classic_min_count(decompose(Permutation::identity())), NothingToUndoError);
}

TEST(ClassicMinCount, Values)
{
  EXPECT_EQ(classic_min_count(decompose(P("(12)(3456789)"))), 7u);
  EXPECT_EQ(classic_min_count(decompose(P("(12)"))), 1u);
  EXPECT_EQ(classic_min_count(decompose(P("(123456)"))), 5u);
}

TEST(ConstructFactorization, FuturamaTemplate)
{
  auto f = construct_factorization(P("(12)(3456789)"));
  EXPECT_EQ(to_string(f.factors), "(23)(19)(18)(17)(16)(15)(14)(13)(29)");
  expect_sound(P("(12)(3456789)"), f);
}

TEST(ConstructFactorization, FourBlock)
{
  auto f = construct_factorization(P("(12)(34)"));
  EXPECT_EQ(to_string(f.factors), "(24)(13)(23)(14)");
}

TEST(ConstructFactorization, SevenBlock)
{
  auto f = construct_factorization(P("(12)(34)(56)"));
  EXPECT_EQ(to_string(f.factors), "(15)(25)(35)(46)(45)(16)(13)");
}

TEST(ConstructFactorization, LoneTranspositionUsesHelpers)
{
  auto f = construct_factorization(P("(12)"), {3, 4});
  EXPECT_EQ(to_string(f.factors), "(34)(23)(14)(13)(24)");
  EXPECT_EQ(f.helpers_used, (std::set<Label>{3, 4}));
}

TEST(ConstructFactorization, HelperPoolSkipsSupport)
{
  auto f = construct_factorization(P("(57)"), {5, 7, 9, 9, 2});
  EXPECT_EQ(f.helpers_used, (std::set<Label>{2, 9}));
  expect_sound(P("(57)"), f);
}

TEST(ConstructFactorization, TwoThreeTemplate)
{
  // Hand-multiplied: (23)(15)(14)(13)(25) sends 1->2, 2->1, 3->4, 4->5, 5->3.
  auto f = construct_factorization(P("(12)(345)"));
  EXPECT_EQ(f.factors.swaps,
            (std::vector<Transposition>{{2, 3}, {1, 5}, {1, 4}, {1, 3}, {2, 5}}));
  EXPECT_EQ(product(f.factors), P("(12)(345)"));
}

TEST(ConstructFactorization, PlainCycles)
{
  auto f = construct_factorization(P("(123456)(789)"));
  EXPECT_EQ(to_string(f.factors), "(12)(23)(34)(45)(56)(78)(89)");
}

TEST(ConstructFactorization, Errors)
{
  EXPECT_THROW(construct_factorization(Permutation::identity()), NothingToUndoError);
  EXPECT_THROW(construct_factorization(P("(12)")), NeedHelpersError);
  EXPECT_THROW(construct_factorization(P("(12)"), {1, 3}), NeedHelpersError);
  try {
    construct_factorization(P("(12)"), {3});
    FAIL();
  } catch (NeedHelpersError const &e) {
    EXPECT_EQ(e.needed(), 2u);
  }
}

TEST(ConstructFactorization, ExhaustiveUpToSix)
{
  for (Label n = 2; n <= 6; ++n) {
    for (auto const &p : mindswap::testing::all_perms(n)) {
      if (p.is_identity())
        continue;
      auto f = construct_factorization(p, default_helpers(p));
      expect_sound(p, f);
    }
  }
}

TEST(ConstructFactorization, RandomUpToTwelve)
{
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto p = mindswap::testing::random_perm(rng, 12);
    if (p.is_identity())
      continue;
    expect_sound(p, construct_factorization(p, default_helpers(p)));
  }
}

TEST(ConstructFactorization, Deterministic)
{
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    auto p = mindswap::testing::random_perm(rng, 10);
    if (p.is_identity())
      continue;
    auto h = default_helpers(p);
    EXPECT_EQ(construct_factorization(p, h).factors, construct_factorization(p, h).factors);
  }
}

TEST(ConstructFactorization, BudgetRelations)
{
  for (auto const &p : mindswap::testing::all_perms(6)) {
    if (p.is_identity())
      continue;
    auto d = decompose(p);
    auto b = min_undo_count(d);
    auto classic = classic_min_count(d);
    EXPECT_GE(b.M, classic);
    if (d.n > 2) {
      EXPECT_EQ(b.M % 2, (d.n - d.m) % 2);
      EXPECT_EQ(b.M == classic, d.r == 0);
    }
  }
}

TEST(RestorationPlan, FuturamaTheorem)
{
  auto history = chrono_seq({{3, 6}, {3, 7}, {5, 6}, {3, 9}, {1, 2}, {8, 9}, {4, 5}});
  auto plan = make_restoration_plan(history, {PlanMode::Theorem, {}, 0});
  EXPECT_EQ(plan.plan.order, Order::Chronological);
  EXPECT_EQ(plan.plan.swaps,
            (std::vector<Transposition>{
                {2, 3}, {1, 9}, {1, 8}, {1, 7}, {1, 6}, {1, 5}, {1, 4}, {1, 3}, {2, 9}}));
  EXPECT_EQ(plan.budget.M, 9u);
}

TEST(RestorationPlan, Stargate)
{
  auto history = chrono_seq({{3, 4}, {1, 2}});
  auto plan = make_restoration_plan(history, {PlanMode::Theorem, {}, 0});
  EXPECT_EQ(plan.plan.size(), 4u);
  EXPECT_TRUE(validate_plan(replay(history), plan.plan).valid());
}

TEST(RestorationPlan, LoneSwapWithHelpers)
{
  auto history = chrono_seq({{1, 2}});
  auto plan = make_restoration_plan(history, {PlanMode::Theorem, {3, 4}, 0});
  EXPECT_EQ(plan.plan.size(), 5u);
  EXPECT_EQ(plan.helpers_used, (std::set<Label>{3, 4}));
  EXPECT_TRUE(validate_plan(replay(history), plan.plan).valid());
}

TEST(RestorationPlan, IdentityRejected)
{
  auto history = chrono_seq({{1, 2}, {3, 4}, {1, 2}});
  EXPECT_THROW(make_restoration_plan(chrono_seq({{1, 2}, {2, 3}, {1, 2}, {2, 3}, {1, 2}, {2, 3}}),
                                     {PlanMode::Theorem, {}, 0}),
               NothingToUndoError);
  EXPECT_THROW(make_restoration_plan(history, {PlanMode::History, {}, 0}), PairReusedError);
}

TEST(RestorationPlan, HistoryModeAvoidsHistory)
{
  // (13)(12) leaves (123)-type displacement; the constructed plan for the
  // resulting 3-cycle reuses a history pair, so search takes over.
  auto history = chrono_seq({{1, 2}, {1, 3}});
  auto p = product(history);
  auto theorem = make_restoration_plan(history, {PlanMode::Theorem, {}, 0});
  auto state = replay(history);
  EXPECT_FALSE(validate_plan(state, theorem.plan).fresh());

  auto hist = make_restoration_plan(history, {PlanMode::History, {}, 0});
  EXPECT_FALSE(hist.constructed);
  auto verdict = validate_plan(state, hist.plan);
  EXPECT_TRUE(verdict.valid());
  EXPECT_GE(hist.plan.size(), min_undo_count(decompose(p)).M);
}

TEST(RestorationPlan, HistoryModeKeepsConstructionWhenFresh)
{
  auto history = chrono_seq({{3, 6}, {3, 7}, {5, 6}, {3, 9}, {1, 2}, {8, 9}, {4, 5}});
  auto plan = make_restoration_plan(history, {PlanMode::History, {}, 0});
  EXPECT_TRUE(plan.constructed);
  EXPECT_EQ(plan.plan.size(), 9u);
}

TEST(RestorationPlan, TheoremPlanRestoresAnyHistory)
{
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<Label> lab(1, 7);
  for (int i = 0; i < 300; ++i) {
    std::vector<Transposition> swaps;
    for (int k = 0; k < 6; ++k) {
      Label a = lab(rng), b = lab(rng);
      if (a != b)
        swaps.emplace_back(a, b);
    }
    auto history = chrono_seq(swaps);
    auto p = product(history);
    if (p.is_identity())
      continue;
    auto plan = make_restoration_plan(history, {PlanMode::Theorem, {}, 0});
    // Only the theorem's forbidden set is guaranteed to be avoided.
    auto state = state_from_assignment(p, {});
    EXPECT_TRUE(validate_plan(state, plan.plan).restored);
  }
}
