#include <gtest/gtest.h>

#include <random>

#include "mindswap/perm.hpp"
#include "test_util.hpp"

using namespace mindswap;
using mindswap::testing::P;

TEST(FromCycles, BuildsFuturamaPermutation)
{
  auto p = from_cycles({{1, 2}, {3, 4, 5, 6, 7, 8, 9}});
  EXPECT_EQ(p(1), 2u);
  EXPECT_EQ(p(2), 1u);
  for (Label x = 3; x < 9; ++x)
    EXPECT_EQ(p(x), x + 1);
  EXPECT_EQ(p(9), 3u);
}

TEST(FromCycles, EmptyIsIdentity)
{
  EXPECT_TRUE(from_cycles({}).is_identity());
}

TEST(FromCycles, ThreeCycle)
{
  auto p = from_cycles({{1, 2, 3}});
  EXPECT_EQ(p(1), 2u);
  EXPECT_EQ(p(2), 3u);
  EXPECT_EQ(p(3), 1u);
}

TEST(FromCycles, Errors)
{
  EXPECT_THROW(from_cycles({{1, 2}, {2, 3}}), DisjointnessError);
  EXPECT_THROW(from_cycles({{1, 2, 1}}), MalformedCycleError);
  EXPECT_THROW(from_cycles({{4}}), MalformedCycleError);
  EXPECT_THROW(from_cycles({{0, 1}}), MalformedCycleError);
}

TEST(Permutation, RejectsNonBijection)
{
  EXPECT_THROW(Permutation(std::map<Label, Label>{{1, 2}, {2, 2}}), std::invalid_argument);
  EXPECT_THROW(Permutation(std::map<Label, Label>{{1, 2}}), std::invalid_argument);
}

TEST(Permutation, FixedPointsAreNotStored)
{
  Permutation p(std::map<Label, Label>{{1, 2}, {2, 1}, {5, 5}});
  EXPECT_EQ(p.support_size(), 2u);
  EXPECT_EQ(p, P("(12)"));
}

TEST(Compose, Involution)
{
  EXPECT_TRUE(compose(P("(12)"), P("(12)")).is_identity());
}

TEST(Compose, ChainOfTranspositionsIsCycle)
{
  // (ab)(bc)(cd)(de)(ef) = (abcdef)
  auto seq = mindswap::testing::product_seq(
      {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
  EXPECT_EQ(product(seq), from_cycles({{1, 2, 3, 4, 5, 6}}));
}

TEST(Compose, DisjointCommute)
{
  auto p = compose(P("(12)"), P("(34)"));
  auto d = decompose(p);
  EXPECT_EQ(d.cycles, (std::vector<Cycle>{{1, 2}, {3, 4}}));
  EXPECT_EQ(p, compose(P("(34)"), P("(12)")));
}

TEST(Compose, RightmostActsFirst)
{
  // (12)(23): 3 -> 2 -> 1
  EXPECT_EQ(compose(P("(12)"), P("(23)"))(3), 1u);
}

TEST(Inverse, Examples)
{
  EXPECT_TRUE(inverse(Permutation::identity()).is_identity());
  EXPECT_EQ(inverse(P("(123)")), P("(132)"));
  EXPECT_EQ(inverse(P("(12)(34)")), P("(12)(34)"));
}

TEST(Apply, Examples)
{
  EXPECT_EQ(apply(P("(12)"), 1), 2u);
  EXPECT_EQ(apply(P("(12)"), 7), 7u);
  EXPECT_EQ(apply(P("(3456789)"), 9), 3u);
}

TEST(Decompose, Futurama)
{
  auto d = decompose(P("(12)(3456789)"));
  EXPECT_EQ(d.cycles, (std::vector<Cycle>{{1, 2}, {3, 4, 5, 6, 7, 8, 9}}));
  EXPECT_EQ(d.n, 9u);
  EXPECT_EQ(d.m, 2u);
  EXPECT_EQ(d.r, 1u);
}

TEST(Decompose, Identity)
{
  auto d = decompose(Permutation::identity());
  EXPECT_TRUE(d.empty());
  EXPECT_EQ(d.n + d.m + d.r, 0u);
}

TEST(Decompose, SwitchesOfTheEpisodeMatchClosedForm)
{
  auto f9 = P("(45)(89)(12)(39)(56)(37)(36)");
  EXPECT_EQ(decompose(f9), decompose(P("(12)(3456789)")));
}

TEST(Decompose, CanonicalRotation)
{
  auto d = decompose(P("(564)(97)"));
  EXPECT_EQ(d.cycles, (std::vector<Cycle>{{4, 5, 6}, {7, 9}}));
}

TEST(Parity, Examples)
{
  EXPECT_EQ(parity(P("(12)")), Parity::Odd);
  EXPECT_EQ(parity(P("(12)(3456789)")), Parity::Odd);
  EXPECT_EQ(parity(Permutation::identity()), Parity::Even);
  EXPECT_EQ(parity(P("(123)")), Parity::Even);
}

TEST(ParseCycles, Basics)
{
  auto p = P("(12)(34)");
  EXPECT_EQ(p(1), 2u);
  EXPECT_EQ(p(3), 4u);
  EXPECT_EQ(P("(1,10)(2 11)")(10), 1u);
  EXPECT_EQ(P("(1, 10)")(1), 10u);
  EXPECT_TRUE(P("").is_identity());
  EXPECT_TRUE(P("()").is_identity());
  EXPECT_TRUE(P("(5)").is_identity());
}

TEST(ParseCycles, EpisodeIdentity)
{
  EXPECT_EQ(P("(45)(89)(12)(39)(56)(37)(36)"),
            P("(23)(19)(18)(17)(16)(15)(14)(13)(29)"));
}

TEST(ParseCycles, NonDisjointInputIsMultipliedOut)
{
  EXPECT_EQ(P("(23)(13)(23)"), P("(12)"));
}

TEST(ParseCycles, Errors)
{
  EXPECT_THROW(P("(12"), ParseError);
  EXPECT_THROW(P("12)"), ParseError);
  EXPECT_THROW(P("((12)"), ParseError);
  EXPECT_THROW(P("(1a)"), ParseError);
  EXPECT_THROW(P("(1,x)"), ParseError);
  EXPECT_THROW(P("(01)"), ParseError);
  EXPECT_THROW(P("(1,0)"), ParseError);
  EXPECT_THROW(P("(1,,2)"), ParseError);
  EXPECT_THROW(P("(121)"), ParseError);
  EXPECT_THROW(P("x"), ParseError);
}

TEST(Print, Canonical)
{
  EXPECT_EQ(to_string(P("(45)(89)(12)(39)(56)(37)(36)")), "(12)(3456789)");
  EXPECT_EQ(to_string(P("(2,10)(3 1)")), "(1,3)(2,10)");
  EXPECT_EQ(to_string(Permutation::identity()), "()");
  EXPECT_EQ(to_string(Transposition(12, 3)), "(3,12)");
}

TEST(SwapSequence, ConventionsAreReversals)
{
  auto seq = mindswap::testing::product_seq({{4, 5}, {8, 9}, {3, 6}});
  auto chrono = seq.as(Order::Chronological);
  EXPECT_EQ(chrono.swaps.front(), Transposition(3, 6));
  EXPECT_EQ(product(chrono), product(seq));
  EXPECT_EQ(chrono.as(Order::ProductNotation), seq);
  EXPECT_EQ(product(inverse(seq)), inverse(product(seq)));
}

// Properties over randomly generated permutations.

class PermProperties : public ::testing::Test
{
protected:
  std::mt19937_64 rng{20100819};
};

TEST_F(PermProperties, DecomposeRoundTrip)
{
  for (int i = 0; i < 1000; ++i) {
    auto p = mindswap::testing::random_perm(rng, 12);
    EXPECT_EQ(from_cycles(decompose(p).cycles), p);
  }
}

TEST_F(PermProperties, InverseCancels)
{
  for (int i = 0; i < 500; ++i) {
    auto p = mindswap::testing::random_perm(rng, 12);
    EXPECT_TRUE(compose(p, inverse(p)).is_identity());
    EXPECT_TRUE(compose(inverse(p), p).is_identity());
  }
}

TEST_F(PermProperties, ParityIsHomomorphism)
{
  for (int i = 0; i < 500; ++i) {
    auto p = mindswap::testing::random_perm(rng, 10);
    auto q = mindswap::testing::random_perm(rng, 10);
    bool odd = (parity(p) == Parity::Odd) != (parity(q) == Parity::Odd);
    EXPECT_EQ(parity(compose(p, q)), odd ? Parity::Odd : Parity::Even);
  }
}

TEST_F(PermProperties, FactorizationLengthMatchesParity)
{
  std::uniform_int_distribution<Label> lab(1, 9);
  std::uniform_int_distribution<int> len(0, 15);
  for (int i = 0; i < 1000; ++i) {
    std::vector<Transposition> swaps;
    int w = len(rng);
    while (static_cast<int>(swaps.size()) < w) {
      Label a = lab(rng), b = lab(rng);
      if (a != b)
        swaps.emplace_back(a, b);
    }
    auto d = decompose(product(mindswap::testing::product_seq(swaps)));
    EXPECT_EQ(swaps.size() % 2, (d.n - d.m) % 2);
  }
}

TEST_F(PermProperties, PrintParseRoundTrip)
{
  for (int i = 0; i < 500; ++i) {
    auto p = mindswap::testing::random_perm(rng, 14);
    EXPECT_EQ(parse_cycles(to_string(p)), p) << to_string(p);
  }
}
