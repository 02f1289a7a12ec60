#include <gtest/gtest.h>

#include "limitgrp/sampler.hpp"
#include "limitgrp/text_format.hpp"

using namespace limitgrp;

namespace {

const Presentation kZ3 = parse_presentation("group Z3\ngens: a b c\nrels: [a,b] ; [a,c] ; [b,c]\n");

}  // namespace

TEST(Sampler, ProducesRegularPointsOnTheVariety) {
  Rng rng(81);
  for (int k = 0; k < 10; ++k) {
    const Representation rho = sample_representation(kZ3, rng);
    EXPECT_LT(is_on_variety(rho).relator, 1e-10);
    EXPECT_LT(is_on_variety(rho).unimodularity, 1e-10);
    EXPECT_TRUE(is_regular_sample(rho));
  }
}

TEST(Sampler, Deterministic) {
  Rng a(82), b(82);
  EXPECT_EQ(sample_representation(kZ3, a).matrices, sample_representation(kZ3, b).matrices);
}

TEST(Sampler, FreeGroupsSampleDirectly) {
  Rng a(83), b(83);
  const Presentation f2 = Presentation::free(2);
  EXPECT_EQ(sample_representation(f2, a).matrices, sample_free_point(f2, b).matrices);
}

TEST(Sampler, ProjectionReducesTheResidual) {
  Rng rng(84);
  const Representation start = sample_free_point(kZ3, rng);
  const auto projected = project_to_variety(start);
  ASSERT_TRUE(projected.has_value());
  EXPECT_LT(is_on_variety(*projected).relator, 1e-10);
  EXPECT_GT(is_on_variety(start).relator, 1e-2);
}

TEST(Sampler, CentralPointsAreNotRegular) {
  const Representation rho{kZ3, {identity2(), -identity2(), identity2()}};
  EXPECT_FALSE(is_regular_sample(rho));
}

TEST(Sampler, IsolatedPointIsRegular) {
  // <a | a, a^2>: the variety is the single point a = I, cut out transversally
  const Presentation trivial = parse_presentation("group T\ngens: a\nrels: a ; a^2\n");
  Rng rng(85);
  const Representation rho = sample_representation(trivial, rng);
  EXPECT_LT((rho.matrices[0] - identity2()).norm(), 1e-10);
  EXPECT_EQ(local_dimension(rho).local_dim, 0u);
}
