#include <gtest/gtest.h>

#include <set>

#include "niggli/characters.hpp"
#include "niggli/error.hpp"
#include "niggli/reduction.hpp"

using namespace niggli;

TEST(Table, FortyTwoRows) {
  const auto t = character_table();
  ASSERT_EQ(t.size(), 42u);
  std::set<int> numbers;
  for (const auto& e : t) numbers.insert(e.it_character);
  EXPECT_EQ(numbers.size(), 42u);
  EXPECT_FALSE(numbers.count(31));
  EXPECT_FALSE(numbers.count(44));
}

TEST(Table, Lookups) {
  EXPECT_EQ(character_by_number(1).bravais, "cF");
  EXPECT_EQ(character_by_roof("44A").it_character, 3);
  EXPECT_THROW(character_by_roof("99Z"), PreconditionError);
  EXPECT_THROW(character_by_number(31), PreconditionError);
}

TEST(Table, GeneratorProjectorMatchesPattern) {
  for (const auto& e : character_table()) {
    const NumericProjector pat = NumericProjector::from_exact(e.pattern().projector());
    EXPECT_LT(distance(e.projector(), pat), 1e-9) << e.roof_symbol << " " << e.it_character;
    EXPECT_EQ(e.free_params, e.pattern().free_parameters());
  }
}

TEST(Table, SharedPatternsAreUnsigned) {
  EXPECT_FALSE(character_by_number(10).signed_parameters);
  EXPECT_FALSE(character_by_number(14).signed_parameters);
  EXPECT_FALSE(character_by_number(20).signed_parameters);
  EXPECT_FALSE(character_by_number(25).signed_parameters);
  EXPECT_TRUE(character_by_number(9).signed_parameters);
}

TEST(GeneratorExpression, ReadsPrimes) {
  const GeneratorExpression a = parse_generator_expression("12F2′F′ = 12F̂");
  EXPECT_EQ(a.cases.to_string(), "12F");
  EXPECT_EQ(a.primed.to_string(), "2F");
  const GeneratorExpression b = parse_generator_expression("2ADA'");
  EXPECT_EQ(b.cases.to_string(), "2AD");
  EXPECT_EQ(b.primed.to_string(), "A");
}

namespace {

int top_character(const G6Vector& g) { return classify(g).ranked.front().entry->it_character; }

}  // namespace

TEST(Classify, Cubics) {
  EXPECT_EQ(top_character({1, 1, 1, 0, 0, 0}), 3);
  EXPECT_EQ(top_character({4, 4, 4, 4, 4, 4}), 1);
  EXPECT_EQ(top_character({3, 3, 3, -2, -2, -2}), 5);
}

TEST(Classify, LowerSymmetry) {
  EXPECT_EQ(top_character({1, 1, 2, 0, 0, 0}), 11);        // tP
  EXPECT_EQ(top_character({1, 1, 2, 0, 0, -1}), 12);       // hP
  EXPECT_EQ(top_character({1, 2, 3, 0, 0, 0}), 32);        // oP
  EXPECT_EQ(top_character({2, 2, 2, 1, 1, 1}), 2);         // hR
}

TEST(Classify, TriclinicHasNoMatch) {
  const Classification c = classify({10, 12, 15, -3, -4, -5});
  EXPECT_FALSE(c.ranked.front().match);
  EXPECT_GT(c.ranked.front().distance, 0.0);
}

TEST(Classify, NearbyPointMatchesWithinTolerance) {
  const G6Vector g{1, 1 + 1e-9, 1, 0, 0, 0};
  const Classification c = classify(niggli_reduce(g).reduced, 1e-6);
  EXPECT_TRUE(c.ranked.front().match);
  // The exact orthorhombic subspace ranks first; the cubic one still matches.
  bool cubic = false;
  for (const auto& r : c.ranked) cubic |= r.match && r.entry->it_character == 3;
  EXPECT_TRUE(cubic);
}

TEST(Classify, RequiresReducedInput) {
  try {
    classify({2, 1, 3, 0, 0, 0});
    FAIL();
  } catch (const NotReduced& e) {
    EXPECT_NE(std::string(e.what()).find(describe(NiggliCondition::G1LeG2)), std::string::npos);
  }
}

TEST(Classify, RankingIsSorted) {
  const Classification c = classify({4, 4, 4, 4, 4, 4});
  for (std::size_t i = 1; i < c.ranked.size(); ++i)
    EXPECT_LE(c.ranked[i - 1].distance, c.ranked[i].distance);
}

TEST(Hosoya, CubicPointsSatisfyTheirConditions) {
  const auto fcc = hosoya_conditions({4, 4, 4, 4, 4, 4});
  EXPECT_TRUE(fcc[0] && fcc[1] && fcc[2] && fcc[3] && fcc[4]);
  EXPECT_FALSE(fcc[5]);
  const auto bcc = hosoya_conditions({3, 3, 3, -2, -2, -2});
  EXPECT_TRUE(bcc[3] && bcc[4]);
  EXPECT_FALSE(bcc[0]);
}
