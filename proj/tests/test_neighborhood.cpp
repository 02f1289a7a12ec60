#include <gtest/gtest.h>

#include <numbers>

#include "limitgrp/neighborhood.hpp"

using namespace limitgrp;

namespace {

Mat2C diag(Complex a, Complex b) {
  Mat2C m = Mat2C::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

}  // namespace

TEST(Neighborhood, Identity) {
  const auto n = standard_neighborhood(identity2(), {});
  EXPECT_LT(n.log_base.norm(), 1e-15);
  EXPECT_DOUBLE_EQ(n.epsilon, 0.1);
  EXPECT_EQ(n.shrinks, 0);
}

TEST(Neighborhood, Diagonal) {
  const auto n = standard_neighborhood(diag(2.0, 0.5), {});
  EXPECT_LT((n.log_base - diag(std::log(2.0), -std::log(2.0))).norm(), 1e-12);
  EXPECT_LT((exp_mat(n.log_base) - n.base).norm(), 1e-12);
}

TEST(Neighborhood, TraceMinusTwoIsRejected) {
  Mat2C g;
  g << -1.0, 1.0, 0.0, -1.0;
  EXPECT_THROW(standard_neighborhood(g, {}), DegenerateElement);
}

TEST(Neighborhood, ShrinksNearTheSingularLocus) {
  // rotation by angle close to pi: the segment [0, log g] passes near theta = pi
  const double a = std::numbers::pi - 0.05;
  Mat2C v;
  v << 0.0, a, -a, 0.0;
  const auto n = standard_neighborhood(exp_mat(v), {});
  EXPECT_LT(n.epsilon, 0.1);
  EXPECT_GT(n.shrinks, 0);
  // every z in the certified domain gives a family that avoids -I
  for (int k = 0; k <= 100; ++k) {
    const Complex z(k / 100.0, 0.9 * n.epsilon);
    ASSERT_GT((exp_mat(z * n.log_base) + identity2()).norm(), 1e-6);
  }
}

TEST(Neighborhood, RejectsNonPositiveEpsilon) {
  NeighborhoodOptions opt;
  opt.epsilon = 0.0;
  EXPECT_THROW(standard_neighborhood(identity2(), opt), DomainError);
}

TEST(PathDomain, Membership) {
  const PathDomain d{0.1};
  EXPECT_TRUE(d.contains({0.5, 0.0}));
  EXPECT_TRUE(d.contains({0.5, 0.09}));
  EXPECT_TRUE(d.contains({-0.05, 0.0}));
  EXPECT_FALSE(d.contains({0.5, 0.1}));
  EXPECT_FALSE(d.contains({1.2, 0.0}));
  EXPECT_NEAR(d.distance({1.03, 0.04}), 0.05, 1e-15);
}

TEST(Neighborhood, Deterministic) {
  Mat2C g;
  g << 1.3, 0.2, 0.7, (1.0 + 0.2 * 0.7) / 1.3;
  const auto a = standard_neighborhood(g, {});
  const auto b = standard_neighborhood(g, {});
  EXPECT_EQ(a.log_base, b.log_base);
  EXPECT_EQ(a.epsilon, b.epsilon);
}
