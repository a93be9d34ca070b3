#include <gtest/gtest.h>

#include <random>

#include "niggli/boundaries.hpp"
#include "niggli/error.hpp"
#include "niggli/projector.hpp"
#include "niggli/reduction.hpp"
#include "support/oracles.hpp"

using namespace niggli;

TEST(CaseId, ParsesHexDigits) {
  EXPECT_EQ(CaseId::parse('a').number(), 10);
  EXPECT_EQ(CaseId::parse("F").symbol(), 'F');
  EXPECT_THROW(CaseId::parse('0'), UnknownCase);
  EXPECT_THROW(CaseId::parse('G'), UnknownCase);
  EXPECT_THROW(CaseId::from_number(16), UnknownCase);
}

TEST(CaseSet, ParseAndFormat) {
  EXPECT_EQ(CaseSet::parse("1,6 7").to_string(), "167");
  EXPECT_EQ(CaseSet::parse("DCA9761").to_string(), "1679ACD");
  EXPECT_EQ(CaseSet::parse("1679ACD").size(), 7);
  EXPECT_THROW(CaseSet::parse("12Z"), UnknownCase);
  EXPECT_TRUE(CaseSet::parse("16").is_subset_of(CaseSet::parse("167")));
}

TEST(BoundaryCases, FifteenWithExactLaws) {
  ASSERT_EQ(boundary_cases().size(), 15u);
  for (const auto& bc : boundary_cases()) {
    SCOPED_TRACE(bc.id.symbol());
    EXPECT_EQ(bc.projector * bc.projector, bc.projector);
    EXPECT_EQ(bc.projector.transpose(), bc.projector);
    EXPECT_EQ(bc.projector, hyperplane_projector(bc.condition));
    EXPECT_EQ(bc.e3.determinant(), 1);
    EXPECT_EQ(g6_matrix_from_basis(bc.e3), bc.transform);
    EXPECT_TRUE(bc.transform.is_integer());
  }
}

// Across a generic point of each boundary, the non-reduced side is reduced
// by the boundary's transformation M alone. Points on the boundary itself
// need not be reduced (g4 = -g2 is reduced only with g6 = 0).
TEST(BoundaryCases, TransformReducesAcrossTheBoundary) {
  std::mt19937_64 rng(21);
  std::normal_distribution<double> n(0.0, 1.0);
  for (const auto& bc : boundary_cases()) {
    SCOPED_TRACE(bc.id.symbol());
    int hits = 0;
    for (int i = 0; i < 50000 && hits < 30; ++i) {
      const G6Vector g = niggli_reduce(oracle::random_cell(rng, 1.0, 10.0)).reduced;
      const G6Vector p = project_to_boundary(bc.id, g);
      if (!oracle::positive_definite(p) || !on_boundary(bc.id, p, 1e-9)) continue;
      // Stay away from every other hyperplane.
      bool isolated = true;
      for (const auto& other : boundary_cases())
        if (other.projector != bc.projector)
          isolated = isolated && boundary_distance(other.id, p) > 1e-3 * p.max_abs();
      if (!isolated) continue;
      const G6Vector delta = G6Vector(n(rng), n(rng), n(rng), n(rng), n(rng), n(rng)) *
                             (1e-7 * p.max_abs());
      const bool plus = satisfies_niggli(p + delta, 0.0);
      const bool minus = satisfies_niggli(p - delta, 0.0);
      if (plus == minus) continue;
      const G6Vector outside = plus ? p - delta : p + delta;
      ++hits;
      EXPECT_NEAR(boundary_distance(bc.id, p), 0.0, 1e-9 * p.max_abs());
      const G6Vector mapped = bc.transform * outside;
      EXPECT_TRUE(satisfies_niggli(mapped, 1e-12)) << p << " -> " << mapped;
      EXPECT_TRUE(approx_equal(niggli_reduce(outside, 1e-12).reduced, mapped, 1e-12)) << p;
      EXPECT_NEAR(metric_determinant(mapped), metric_determinant(outside),
                  1e-9 * std::pow(p.max_abs(), 3));
    }
    EXPECT_GT(hits, 0);
  }
}

TEST(BoundaryCases, SpecialSubspaceIsFixed) {
  // 1-hat: g1 = g2 and g4 = g5.
  const G6Vector g{4, 4, 7, -1, -1, -2};
  EXPECT_TRUE(special_subspace_fixed(CaseId::parse('1'), g));
  EXPECT_TRUE(approx_equal(apply_boundary_transform(CaseId::parse('1'), g), g, 1e-15));
  // F-hat: body diagonal plus g1 - g2 - g4 + g5 = 0.
  const G6Vector f{4, 5, 8, -3, -2, -4};
  EXPECT_TRUE(special_subspace_fixed(CaseId::parse('F'), f));
  EXPECT_TRUE(approx_equal(apply_boundary_transform(CaseId::parse('F'), f), f, 1e-15));
  // Cases without a special subspace.
  for (char c : {'6', '8', '9', 'B', 'C', 'E'})
    EXPECT_FALSE(special_subspace_fixed(CaseId::parse(c), {4, 4, 4, 4, 4, 4})) << c;
}

TEST(BoundaryCases, HatOfNinetyDegreeCases) {
  const G6Vector g{2, 3, 4, 0, 0, 0};
  for (char c : {'3', '4', '5'}) EXPECT_TRUE(in_hat_subspace(CaseId::parse(c), g)) << c;
  EXPECT_FALSE(in_hat_subspace(CaseId::parse('3'), {2, 3, 4, 0, -1, 0}));
}

TEST(BoundaryCases, BranchRestriction) {
  // g2 = g4 with an obtuse angle is not on case 6 or 7.
  EXPECT_FALSE(on_boundary(CaseId::parse('6'), {3, 4, 5, 4, -1, -1}));
  EXPECT_TRUE(on_boundary(CaseId::parse('6'), {3, 4, 5, 4, 2, 1}));
  EXPECT_TRUE(on_boundary(CaseId::parse('7'), {3, 4, 5, 4, 1, 2}));
  EXPECT_FALSE(on_boundary(CaseId::parse('7'), {3, 4, 5, 4, 2, 1}));
}

TEST(FlatPairs, ShareAHyperplane) {
  ASSERT_EQ(flat_pairs().size(), 3u);
  for (const auto& fp : flat_pairs())
    EXPECT_EQ(boundary_case(fp.first).projector, boundary_case(fp.second).projector);
}
