#include <gtest/gtest.h>

#include "checks.hpp"

using namespace mdtree::checks;

namespace {

void expect_ok(const CheckResult& r) {
  EXPECT_GT(r.cases, 0u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure;
}

}  // namespace

TEST(Exhaustive, ComposeRoundTripUpToFour) { expect_ok(compose_roundtrip(4)); }

TEST(Exhaustive, ChainRoundTripsUpToFour) { expect_ok(chain_roundtrips(4)); }

TEST(Exhaustive, PhiImageUpToFive) { expect_ok(phi_image(5)); }

TEST(Exhaustive, RhoImageUpToFive) { expect_ok(rho_image(5)); }

TEST(Exhaustive, PsiImageUpToFive) { expect_ok(psi_image(5)); }

TEST(Exhaustive, StepRoundTripsOnFourLabels) { expect_ok(step_roundtrips(4)); }

TEST(Exhaustive, SmallerChildrenForestMapUpToFour) { expect_ok(theorem42_roundtrip(4)); }

TEST(Exhaustive, SmallLabelSetsIncludeSparseSets) {
  const auto sets = small_label_sets(2);
  ASSERT_EQ(sets.size(), 4u);
  EXPECT_EQ(sets[3], (std::vector<mdtree::Label>{3, 5}));
}
