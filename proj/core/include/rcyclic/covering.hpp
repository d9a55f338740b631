#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rcyclic/metric.hpp"
#include "rcyclic/self_map.hpp"

namespace rcyclic {

/// Boundary slack for membership in closed Euclidean sets.
inline constexpr double kMembershipTolerance = 1e-9;

/// Labels of a finite member set.
struct FiniteSet {
  std::vector<std::string> labels;
  friend bool operator==(const FiniteSet&, const FiniteSet&) = default;
};

/// Closed interval [lo, hi] of the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Closed ball.
struct Ball {
  std::vector<double> center;
  double radius = 0.0;
  friend bool operator==(const Ball&, const Ball&) = default;
};

/// Closed half-space {x : normal . x <= offset}.
struct HalfSpace {
  std::vector<double> normal;
  double offset = 0.0;
  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
};

/// Closed planar sector: the points of the disk (center, radius) whose polar angle lies in
/// [angle_begin, angle_end] (counterclockwise, width at most 2*pi). Contains the center.
struct Sector {
  std::array<double, 2> center{};
  double radius = 0.0;
  double angle_begin = 0.0;
  double angle_end = 0.0;
  friend bool operator==(const Sector&, const Sector&) = default;
};

using SetShape = std::variant<FiniteSet, Interval, Ball, HalfSpace, Sector>;

/// Controls the evidence points drawn from continuous sets.
struct SamplingOptions {
  /// Grid refinement level per set (polar grid for sectors and disks, uniform for intervals).
  std::size_t grid = 6;
  /// Uniform random points per bounded set, in addition to the grid.
  std::size_t random = 8;
  std::uint64_t seed = kDefaultSeed;
};

/// Evidence level of a check: exhaustive over a finite space, or sampled.
enum class Evidence { Proved, Sampled };

const char* to_string(Evidence evidence);

/// One member X_i of a cyclic covering.
class MemberSet {
 public:
  /// Continuous sets need at least one witness and every witness must be a member.
  /// Finite sets take their labels as witnesses. Throws ArgumentError otherwise.
  MemberSet(SetShape shape, std::vector<Point> witnesses = {});

  static MemberSet finite(std::vector<std::string> labels) { return MemberSet(FiniteSet{std::move(labels)}); }

  const SetShape& shape() const noexcept { return shape_; }
  const std::vector<Point>& witnesses() const noexcept { return witnesses_; }
  bool is_finite() const noexcept { return std::holds_alternative<FiniteSet>(shape_); }
  const char* kind() const;

  bool contains(const Point& x) const;

  /// All labels of a finite set; otherwise witnesses + grid + seeded random points.
  /// `salt` decorrelates the random draws of different sets.
  std::vector<Point> evidence_points(const SamplingOptions& options, std::uint64_t salt = 0) const;

  friend bool operator==(const MemberSet&, const MemberSet&) = default;

 private:
  SetShape shape_;
  std::vector<Point> witnesses_;
};

/// Ordered covering X_1, ..., X_m (m >= 2). Order is significant; sets may overlap or repeat.
class CyclicCovering {
 public:
  explicit CyclicCovering(std::vector<MemberSet> sets);

  int m() const noexcept { return static_cast<int>(sets_.size()); }
  /// 1-based; index is wrapped into [1, m] for any index >= 1.
  const MemberSet& set(int index) const;
  std::span<const MemberSet> sets() const noexcept { return sets_; }
  bool is_finite() const;

  /// 1-based indices of the sets containing x, ascending.
  std::vector<int> sets_containing(const Point& x) const;
  /// Pairs (i, j), i < j, with X_i == X_j.
  std::vector<std::pair<int, int>> duplicate_sets() const;

  /// evidence_points of set i (1-based) with the set index as salt.
  std::vector<Point> evidence_points(int index, const SamplingOptions& options) const;

  friend bool operator==(const CyclicCovering&, const CyclicCovering&) = default;

 private:
  std::vector<MemberSet> sets_;
};

/// ((p - 1) mod m) + 1. Throws ArgumentError when p < 1 or m < 2.
int wrap_index(long long p, int m);

/// wrap_index(k * r, m): the set shift of the k-th iterate of an r-cyclic operator.
int power_shift(int r, int k, int m);

/// The m cyclic rotations; element t starts at X_{1+t}.
std::vector<CyclicCovering> cyclic_rotations(const CyclicCovering& cov);

struct InclusionWitness {
  int set_index;
  Point x;
  Point image;
};

struct ValidationReport {
  int r = 0;
  bool passed = false;
  Evidence evidence = Evidence::Proved;
  /// First x in canonical order (set index, then point order) with f(x) outside X_{i+r}.
  std::optional<InclusionWitness> witness;
  /// Points of a finite space not in any set (the covering does not cover X).
  std::vector<Point> uncovered;
  /// Sets that coincide; permitted, reported for information.
  std::vector<std::pair<int, int>> duplicate_sets;
  std::size_t points_checked = 0;
};

/// Checks f(X_i) ⊆ X_{i+r} for every i on enumerated or sampled points.
/// Throws ArgumentError if r is outside [1, m], DomainError if a finite set names a point
/// outside the space.
ValidationReport validate_r_cyclic(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                                   const SamplingOptions& sampling = {});

/// Every r in [1, m] for which validate_r_cyclic passes.
std::vector<int> scan_shifts(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f,
                             const SamplingOptions& sampling = {});

}  // namespace rcyclic
