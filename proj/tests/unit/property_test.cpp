#include <gtest/gtest.h>

#include "criteria.hpp"
#include "generators.hpp"

namespace cube::testing {
namespace {

// Smaller instances of the acceptance properties under different seeds.

TEST(Property, Confluence) {
  Verdict v = confluence(300, 101);
  EXPECT_TRUE(v.pass) << v.detail;
}

TEST(Property, StrongNormalization) {
  Verdict v = strong_normalization(40, 102);
  EXPECT_TRUE(v.pass) << v.detail;
}

TEST(Property, SubjectReduction) {
  Verdict v = subject_reduction(40, 103);
  EXPECT_TRUE(v.pass) << v.detail;
}

TEST(Property, SubstitutionOracle) {
  Verdict v = substitution_oracle(3000, 104);
  EXPECT_TRUE(v.pass) << v.detail;
}

TEST(Property, SurfaceRoundTrip) {
  Verdict v = surface_round_trip(3000, 105);
  EXPECT_TRUE(v.pass) << v.detail;
}

TEST(Property, GeneratorOnlyProposesWellTypedTerms) {
  for (CubeCorner c : kAllCorners) {
    TypedGenerator g(c, 106);
    auto cases = g.take(100);
    EXPECT_EQ(cases.size(), 100u);
    EXPECT_TRUE(g.rejected().empty()) << corner_name(c) << ": " << g.rejected().front();
  }
}

TEST(Property, WorkedExamples) {
  Verdict v = worked_examples();
  EXPECT_TRUE(v.pass) << v.detail;
}

TEST(Property, TypeInType) {
  Verdict v = type_in_type();
  EXPECT_TRUE(v.pass) << v.detail;
}

}  // namespace
}  // namespace cube::testing
