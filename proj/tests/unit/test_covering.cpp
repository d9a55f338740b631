#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "rcyclic/covering.hpp"
#include "rcyclic/errors.hpp"
#include "rcyclic/instances.hpp"

using namespace rcyclic;

namespace {

MemberSet interval(double lo, double hi) { return MemberSet(Interval{lo, hi}, {Point::at({lo})}); }

}  // namespace

TEST(WrapIndex, MatchesDefinition) {
  EXPECT_EQ(wrap_index(1, 4), 1);
  EXPECT_EQ(wrap_index(4, 4), 4);
  EXPECT_EQ(wrap_index(5, 4), 1);
  EXPECT_EQ(wrap_index(12, 5), 2);
  EXPECT_THROW(wrap_index(0, 4), ArgumentError);
  EXPECT_THROW(wrap_index(3, 1), ArgumentError);
  EXPECT_EQ(power_shift(3, 2, 4), 2);
  EXPECT_EQ(power_shift(2, 2, 4), 4);
}

TEST(MemberSet, ContinuousSetsNeedMemberWitnesses) {
  EXPECT_THROW(MemberSet(Interval{0, 1}), ArgumentError);
  EXPECT_THROW(MemberSet(Interval{0, 1}, {Point::at({2.0})}), ArgumentError);
  EXPECT_THROW(MemberSet(Ball{{0, 0}, 1}, {Point::at({0.0})}), ArgumentError);
  const auto finite = MemberSet::finite({"a", "b"});
  EXPECT_EQ(finite.witnesses().size(), 2u);
  EXPECT_STREQ(finite.kind(), "finite");
}

TEST(MemberSet, ShapesUseClosedMembership) {
  EXPECT_TRUE(interval(0, 1).contains(Point::at({1.0 + 1e-10})));
  EXPECT_FALSE(interval(0, 1).contains(Point::at({1.0 + 1e-6})));
  MemberSet ball(Ball{{0, 0}, 1}, {Point::at({0.0, 0.0})});
  EXPECT_TRUE(ball.contains(Point::at({0.6, 0.8})));
  EXPECT_FALSE(ball.contains(Point::at({0.8, 0.8})));
  EXPECT_FALSE(ball.contains(Point::at({0.0})));
  MemberSet half(HalfSpace{{1, 1}, 1}, {Point::at({0.0, 0.0})});
  EXPECT_TRUE(half.contains(Point::at({0.5, 0.5})));
  EXPECT_FALSE(half.contains(Point::at({0.5, 0.6})));
  MemberSet quarter(Sector{{0, 0}, 1, 0, std::numbers::pi / 2}, {Point::at({0.0, 0.0})});
  EXPECT_TRUE(quarter.contains(Point::at({0.0, 0.0})));
  EXPECT_TRUE(quarter.contains(Point::at({1.0, 0.0})));
  EXPECT_TRUE(quarter.contains(Point::at({0.0, 1.0})));
  EXPECT_FALSE(quarter.contains(Point::at({-0.1, 0.5})));
  EXPECT_FALSE(quarter.contains(Point::at({0.8, 0.8})));
}

// Property: sector membership agrees with a polar-angle oracle away from the boundary.
TEST(MemberSetProperty, SectorAgreesWithPolarOracle) {
  oracle::Gen gen(21);
  const double two_pi = 2 * std::numbers::pi;
  for (int trial = 0; trial < 2000; ++trial) {
    const double b = gen.real(0, two_pi - 0.2);
    const double e = gen.real(b + 0.1, two_pi);
    MemberSet s(Sector{{0, 0}, 1, b, e}, {Point::at({0.0, 0.0})});
    const double x = gen.real(-1.2, 1.2), y = gen.real(-1.2, 1.2);
    double t = std::atan2(y, x);
    if (t < 0) t += two_pi;
    const double rho = oracle::hypot2(x, y);
    if (std::abs(rho - 1) < 1e-6 || std::abs(t - b) < 1e-6 || std::abs(t - e) < 1e-6 || rho < 1e-6) continue;
    EXPECT_EQ(s.contains(Point::at({x, y})), oracle::in_sector(x, y, 1, b, e)) << x << "," << y;
  }
}

// Property: evidence points of every generated set are members and are reproducible.
TEST(MemberSetProperty, EvidencePointsAreMembersAndSeeded) {
  for (int m = 2; m <= 8; ++m)
    for (int r = 1; r < m; ++r) {
      const auto spec = gen_sector_rotation(m, r, 0.5, 1);
      for (int i = 1; i <= m; ++i) {
        const auto pts = spec.covering.evidence_points(i, {});
        EXPECT_EQ(pts, spec.covering.evidence_points(i, {}));
        EXPECT_GT(pts.size(), spec.covering.set(i).witnesses().size());
        for (const auto& p : pts) EXPECT_TRUE(spec.covering.set(i).contains(p)) << p.to_string();
      }
    }
}

TEST(CyclicCovering, IndexingAndDuplicates) {
  CyclicCovering cov({interval(0, 1), interval(1, 2), interval(0, 1)});
  EXPECT_EQ(cov.m(), 3);
  EXPECT_EQ(&cov.set(4), &cov.set(1));
  EXPECT_EQ(cov.sets_containing(Point::at({1.0})), (std::vector<int>{1, 2, 3}));
  EXPECT_EQ(cov.duplicate_sets(), (std::vector<std::pair<int, int>>{{1, 3}}));
  EXPECT_THROW(CyclicCovering({interval(0, 1)}), ArgumentError);
  const auto rotations = cyclic_rotations(cov);
  ASSERT_EQ(rotations.size(), 3u);
  EXPECT_EQ(rotations[1].set(1), cov.set(2));
}

TEST(ValidateRCyclic, FiniteShiftPassesOnlyForItsShift) {
  const auto spec = gen_finite_shift(6, 4);
  const auto report = validate_r_cyclic(spec.space, spec.covering, spec.map, 4);
  EXPECT_TRUE(report.passed);
  EXPECT_EQ(report.evidence, Evidence::Proved);
  EXPECT_EQ(scan_shifts(spec.space, spec.covering, spec.map), (std::vector<int>{4}));

  const auto wrong = validate_r_cyclic(spec.space, spec.covering, spec.map, 1);
  EXPECT_FALSE(wrong.passed);
  ASSERT_TRUE(wrong.witness);
  EXPECT_EQ(wrong.witness->set_index, 1);
  EXPECT_EQ(wrong.witness->x, Point::labeled("x1"));
  EXPECT_EQ(wrong.witness->image, Point::labeled("x5"));
  EXPECT_THROW(validate_r_cyclic(spec.space, spec.covering, spec.map, 7), ArgumentError);
}

TEST(ValidateRCyclic, ReportsUncoveredPointsAndDomainErrors) {
  MetricSpace space = FiniteSpace::discrete({"a", "b", "c"});
  SelfMap f(LookupMap{{{"a", "b"}, {"b", "a"}, {"c", "c"}}});
  CyclicCovering cov({MemberSet::finite({"a"}), MemberSet::finite({"b"})});
  const auto report = validate_r_cyclic(space, cov, f, 1);
  EXPECT_FALSE(report.passed);
  EXPECT_FALSE(report.witness);
  EXPECT_EQ(report.uncovered, (std::vector<Point>{Point::labeled("c")}));

  CyclicCovering stray({MemberSet::finite({"a"}), MemberSet::finite({"z"})});
  EXPECT_THROW(validate_r_cyclic(space, stray, f, 1), DomainError);
}

TEST(ValidateRCyclic, SampledForContinuousSets) {
  const auto spec = gen_sector_rotation(5, 2, 0.5, 1);
  const auto ok = validate_r_cyclic(spec.space, spec.covering, spec.map, 2);
  EXPECT_TRUE(ok.passed);
  EXPECT_EQ(ok.evidence, Evidence::Sampled);
  const auto bad = validate_r_cyclic(spec.space, spec.covering, spec.map, 1);
  EXPECT_FALSE(bad.passed);
  ASSERT_TRUE(bad.witness);
  EXPECT_FALSE(spec.covering.set(bad.witness->set_index + 1).contains(bad.witness->image));
}

// Property: for random finite maps, validate agrees with a direct definition check.
TEST(ValidateRCyclicProperty, AgreesWithDefinitionOnRandomFiniteInstances) {
  oracle::Gen gen(31);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = gen.integer(2, 6);
    const int m = gen.integer(2, 5);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    std::vector<std::vector<std::string>> members(static_cast<std::size_t>(m));
    for (int i = 0; i < n; ++i) members[static_cast<std::size_t>(gen.integer(0, m - 1))].push_back(labels[static_cast<std::size_t>(i)]);
    for (auto& s : members)
      if (s.empty()) s.push_back(labels[static_cast<std::size_t>(gen.integer(0, n - 1))]);
    std::vector<MemberSet> sets;
    for (auto& s : members) sets.push_back(MemberSet::finite(s));
    LookupMap table;
    for (const auto& l : labels) table.table[l] = labels[static_cast<std::size_t>(gen.integer(0, n - 1))];
    const SelfMap f(table);
    const MetricSpace space = FiniteSpace::discrete(labels);
    const CyclicCovering cov(sets);
    const int r = gen.integer(1, m);

    bool inclusion = true;
    for (int i = 0; i < m; ++i)
      for (const auto& x : members[static_cast<std::size_t>(i)]) {
        const auto& target = members[static_cast<std::size_t>((i + r) % m)];
        inclusion &= std::find(target.begin(), target.end(), table.table[x]) != target.end();
      }
    EXPECT_EQ(validate_r_cyclic(space, cov, f, r).passed, inclusion) << "trial " << trial;
  }
}
