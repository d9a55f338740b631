#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rcyclic/errors.hpp"
#include "rcyclic/self_map.hpp"

using namespace rcyclic;

namespace {

void expect_near(const Point& p, double x, double y, double tol = 1e-12) {
  ASSERT_EQ(p.dimension(), 2u);
  EXPECT_NEAR(p.coords()[0], x, tol);
  EXPECT_NEAR(p.coords()[1], y, tol);
}

}  // namespace

TEST(SelfMap, LookupAppliesAndRejectsUnknownLabels) {
  SelfMap f(LookupMap{{{"a", "b"}, {"b", "a"}}});
  EXPECT_EQ(f(Point::labeled("a")), Point::labeled("b"));
  EXPECT_THROW(f(Point::labeled("c")), DomainError);
  EXPECT_THROW(f(Point::at({1.0})), DomainError);
  EXPECT_STREQ(f.kind(), "lookup");
}

TEST(SelfMap, AffineValidatesShape) {
  EXPECT_THROW(SelfMap(AffineMap{2, {1, 0, 0}, {0, 0}}), ArgumentError);
  EXPECT_THROW(SelfMap(AffineMap{1, {std::nan("")}, {0}}), ArgumentError);
  SelfMap f(AffineMap{2, {0, -1, 1, 0}, {1, 0}});
  expect_near(f(Point::at({1.0, 0.0})), 1.0, 1.0);
  EXPECT_THROW(f(Point::at({1.0})), DomainError);
}

TEST(SelfMap, ScaledRotationAboutCenter) {
  SelfMap f(ScaledRotation{{1.0, 1.0}, std::numbers::pi / 2, 0.5});
  expect_near(f(Point::at({2.0, 1.0})), 1.0, 1.5);
  expect_near(f(Point::at({1.0, 1.0})), 1.0, 1.0);
  EXPECT_THROW(SelfMap(ScaledRotation{{0, 0}, 0.0, std::nan("")}), ArgumentError);
}

TEST(SelfMap, PiecewiseUsesNearestCenterFirstOnTies) {
  SelfMap f(PiecewiseRotation{{ScaledRotation{{0, 0}, 0.0, 0.5}, ScaledRotation{{4, 0}, 0.0, 0.25}}});
  expect_near(f(Point::at({1.0, 0.0})), 0.5, 0.0);
  expect_near(f(Point::at({5.0, 0.0})), 4.25, 0.0);
  expect_near(f(Point::at({2.0, 0.0})), 1.0, 0.0);  // tie: first piece
  EXPECT_THROW(SelfMap(PiecewiseRotation{}), ArgumentError);
}

TEST(SelfMap, IterateComposesLookupEagerly) {
  SelfMap f(LookupMap{{{"a", "b"}, {"b", "c"}, {"c", "a"}}});
  const auto f2 = SelfMap::iterate(f, 2);
  EXPECT_STREQ(f2.kind(), "lookup");
  EXPECT_EQ(f2(Point::labeled("a")), Point::labeled("c"));
  EXPECT_EQ(SelfMap::iterate(f, 3)(Point::labeled("b")), Point::labeled("b"));
  EXPECT_THROW(SelfMap::iterate(f, 0), ArgumentError);
}

// Property: iterate(f, p)(x) equals p successive applications, for random similarities.
TEST(SelfMapProperty, IterateMatchesRepeatedApplication) {
  oracle::Gen gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    SelfMap f(ScaledRotation{{gen.real(-2, 2), gen.real(-2, 2)}, gen.real(-3, 3), gen.real(0.1, 0.9)});
    const int power = gen.integer(1, 6);
    const auto fp = SelfMap::iterate(f, power);
    EXPECT_STREQ(fp.kind(), power == 1 ? "rotation" : "iterated");
    Point x = Point::at({gen.real(-3, 3), gen.real(-3, 3)});
    const Point got = fp(x);
    for (int i = 0; i < power; ++i) x = f(x);
    expect_near(got, x.coords()[0], x.coords()[1], 1e-12);
  }
}

// Property: a scaled rotation scales every distance by exactly `scale`.
TEST(SelfMapProperty, ScaledRotationIsSimilarity) {
  oracle::Gen gen(6);
  for (int trial = 0; trial < 200; ++trial) {
    const double s = gen.real(0.05, 0.95);
    SelfMap f(ScaledRotation{{gen.real(-1, 1), gen.real(-1, 1)}, gen.real(-7, 7), s});
    const double ax = gen.real(-5, 5), ay = gen.real(-5, 5), bx = gen.real(-5, 5), by = gen.real(-5, 5);
    const auto fa = f(Point::at({ax, ay}));
    const auto fb = f(Point::at({bx, by}));
    const double d = oracle::hypot2(ax - bx, ay - by);
    const double dfd = oracle::hypot2(fa.coords()[0] - fb.coords()[0], fa.coords()[1] - fb.coords()[1]);
    EXPECT_NEAR(dfd, s * d, 1e-12 * (1 + d));
  }
}
