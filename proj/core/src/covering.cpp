#include "rcyclic/covering.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rcyclic/errors.hpp"

namespace rcyclic {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

bool finite_all(std::span<const double> v) {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

// Distance from p to the segment center + t*(cos a, sin a), t in [0, radius].
double distance_to_ray(const Sector& s, double px, double py, double angle) {
  const double ux = std::cos(angle);
  const double uy = std::sin(angle);
  const double dx = px - s.center[0];
  const double dy = py - s.center[1];
  const double t = std::clamp(dx * ux + dy * uy, 0.0, s.radius);
  return std::hypot(dx - t * ux, dy - t * uy);
}

struct Contains {
  const Point& x;

  bool operator()(const FiniteSet& s) const {
    if (!x.is_labeled()) return false;
    for (const auto& label : s.labels)
      if (label == x.label()) return true;
    return false;
  }

  bool operator()(const Interval& s) const {
    if (x.is_labeled() || x.dimension() != 1) return false;
    const double v = x.coords()[0];
    return v >= s.lo - kMembershipTolerance && v <= s.hi + kMembershipTolerance;
  }

  bool operator()(const Ball& s) const {
    if (x.is_labeled() || x.dimension() != s.center.size()) return false;
    auto c = x.coords();
    double sum = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) sum += (c[i] - s.center[i]) * (c[i] - s.center[i]);
    return std::sqrt(sum) <= s.radius + kMembershipTolerance;
  }

  bool operator()(const HalfSpace& s) const {
    if (x.is_labeled() || x.dimension() != s.normal.size()) return false;
    auto c = x.coords();
    double dot = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i) dot += s.normal[i] * c[i];
    return (dot - s.offset) / norm(s.normal) <= kMembershipTolerance;
  }

  bool operator()(const Sector& s) const {
    if (x.is_labeled() || x.dimension() != 2) return false;
    const double px = x.coords()[0];
    const double py = x.coords()[1];
    const double rho = std::hypot(px - s.center[0], py - s.center[1]);
    if (rho > s.radius + kMembershipTolerance) return false;
    if (rho <= kMembershipTolerance) return true;
    double rel = std::fmod(std::atan2(py - s.center[1], px - s.center[0]) - s.angle_begin, kTwoPi);
    if (rel < 0.0) rel += kTwoPi;
    if (rel <= s.angle_end - s.angle_begin) return true;
    return distance_to_ray(s, px, py, s.angle_begin) <= kMembershipTolerance ||
           distance_to_ray(s, px, py, s.angle_end) <= kMembershipTolerance;
  }
};

void validate_shape(const SetShape& shape) {
  std::visit(
      [](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          if (s.labels.empty()) throw ArgumentError("finite set must name at least one point");
        } else if constexpr (std::is_same_v<T, Interval>) {
          if (!std::isfinite(s.lo) || !std::isfinite(s.hi) || s.lo > s.hi)
            throw ArgumentError("interval needs finite bounds with lo <= hi");
        } else if constexpr (std::is_same_v<T, Ball>) {
          if (s.center.empty() || !finite_all(s.center)) throw ArgumentError("ball center must be finite");
          if (!std::isfinite(s.radius) || s.radius < 0.0) throw ArgumentError("ball radius must be nonnegative");
        } else if constexpr (std::is_same_v<T, HalfSpace>) {
          if (s.normal.empty() || !finite_all(s.normal) || norm(s.normal) == 0.0)
            throw ArgumentError("half-space normal must be finite and nonzero");
          if (!std::isfinite(s.offset)) throw ArgumentError("half-space offset must be finite");
        } else {
          if (!finite_all(s.center)) throw ArgumentError("sector center must be finite");
          if (!std::isfinite(s.radius) || s.radius <= 0.0) throw ArgumentError("sector radius must be positive");
          const double width = s.angle_end - s.angle_begin;
          if (!std::isfinite(width) || width < 0.0 || width > kTwoPi + 1e-12)
            throw ArgumentError("sector angles must satisfy 0 <= end - begin <= 2*pi");
        }
      },
      shape);
}

struct Grid {
  std::size_t level;

  std::vector<Point> operator()(const FiniteSet&) const { return {}; }

  std::vector<Point> operator()(const Interval& s) const {
    std::vector<Point> out;
    if (level == 0) return out;
    for (std::size_t t = 0; t <= level; ++t)
      out.push_back(Point::at({s.lo + (s.hi - s.lo) * static_cast<double>(t) / static_cast<double>(level)}));
    return out;
  }

  std::vector<Point> operator()(const Ball& s) const {
    std::vector<Point> out;
    if (level == 0) return out;
    out.push_back(Point::at(s.center));
    const double step = s.radius / static_cast<double>(level);
    if (s.center.size() == 2) {
      for (std::size_t t = 1; t <= level; ++t)
        for (std::size_t u = 0; u < 2 * level; ++u) {
          const double a = kTwoPi * static_cast<double>(u) / static_cast<double>(2 * level);
          const double rho = step * static_cast<double>(t);
          out.push_back(Point::at({s.center[0] + rho * std::cos(a), s.center[1] + rho * std::sin(a)}));
        }
      return out;
    }
    for (std::size_t k = 0; k < s.center.size(); ++k)
      for (std::size_t t = 1; t <= level; ++t)
        for (double sign : {1.0, -1.0}) {
          auto c = s.center;
          c[k] += sign * step * static_cast<double>(t);
          out.push_back(Point::at(std::move(c)));
        }
    return out;
  }

  std::vector<Point> operator()(const HalfSpace&) const { return {}; }

  std::vector<Point> operator()(const Sector& s) const {
    std::vector<Point> out;
    if (level == 0) return out;
    out.push_back(Point::at({s.center[0], s.center[1]}));
    const double width = s.angle_end - s.angle_begin;
    for (std::size_t t = 1; t <= level; ++t)
      for (std::size_t u = 0; u <= level; ++u) {
        const double rho = s.radius * static_cast<double>(t) / static_cast<double>(level);
        const double a = s.angle_begin + width * static_cast<double>(u) / static_cast<double>(level);
        out.push_back(Point::at({s.center[0] + rho * std::cos(a), s.center[1] + rho * std::sin(a)}));
      }
    return out;
  }
};

struct Random {
  std::size_t count;
  std::mt19937_64& rng;

  std::vector<Point> operator()(const FiniteSet&) const { return {}; }
  std::vector<Point> operator()(const HalfSpace&) const { return {}; }

  std::vector<Point> operator()(const Interval& s) const {
    std::uniform_real_distribution<double> u(s.lo, s.hi);
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) out.push_back(Point::at({s.lo == s.hi ? s.lo : u(rng)}));
    return out;
  }

  std::vector<Point> operator()(const Ball& s) const {
    std::normal_distribution<double> gauss;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const auto dim = static_cast<double>(s.center.size());
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<double> dir(s.center.size());
      for (double& d : dir) d = gauss(rng);
      const double len = norm(dir);
      const double rho = s.radius * std::pow(unit(rng), 1.0 / dim);
      std::vector<double> c = s.center;
      if (len > 0.0)
        for (std::size_t k = 0; k < c.size(); ++k) c[k] += rho * dir[k] / len;
      out.push_back(Point::at(std::move(c)));
    }
    return out;
  }

  std::vector<Point> operator()(const Sector& s) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) {
      const double rho = s.radius * std::sqrt(unit(rng));
      const double a = s.angle_begin + (s.angle_end - s.angle_begin) * unit(rng);
      out.push_back(Point::at({s.center[0] + rho * std::cos(a), s.center[1] + rho * std::sin(a)}));
    }
    return out;
  }
};

}  // namespace

const char* to_string(Evidence evidence) { return evidence == Evidence::Proved ? "PROVED" : "SAMPLED"; }

MemberSet::MemberSet(SetShape shape, std::vector<Point> witnesses)
    : shape_(std::move(shape)), witnesses_(std::move(witnesses)) {
  validate_shape(shape_);
  if (const auto* fin = std::get_if<FiniteSet>(&shape_)) {
    if (!witnesses_.empty()) throw ArgumentError("finite sets take their labels as witnesses");
    for (const auto& label : fin->labels) witnesses_.push_back(Point::labeled(label));
    return;
  }
  if (witnesses_.empty()) throw ArgumentError(std::string(kind()) + " set needs at least one witness point");
  for (const auto& w : witnesses_)
    if (!contains(w)) throw ArgumentError("witness " + w.to_string() + " is not a member of its " + kind() + " set");
}

const char* MemberSet::kind() const {
  static constexpr const char* kNames[] = {"finite", "interval", "ball", "halfspace", "sector"};
  return kNames[shape_.index()];
}

bool MemberSet::contains(const Point& x) const { return std::visit(Contains{x}, shape_); }

std::vector<Point> MemberSet::evidence_points(const SamplingOptions& options, std::uint64_t salt) const {
  std::vector<Point> out = witnesses_;
  if (is_finite()) return out;
  auto grid = std::visit(Grid{options.grid}, shape_);
  out.insert(out.end(), grid.begin(), grid.end());
  std::mt19937_64 rng(options.seed ^ (0x9e3779b97f4a7c15ULL * (salt + 1)));
  auto random = std::visit(Random{options.random, rng}, shape_);
  out.insert(out.end(), random.begin(), random.end());
  return out;
}

CyclicCovering::CyclicCovering(std::vector<MemberSet> sets) : sets_(std::move(sets)) {
  if (sets_.size() < 2) throw ArgumentError("a cyclic covering needs m >= 2 sets");
}

const MemberSet& CyclicCovering::set(int index) const { return sets_[static_cast<std::size_t>(wrap_index(index, m()) - 1)]; }

bool CyclicCovering::is_finite() const {
  for (const auto& s : sets_)
    if (!s.is_finite()) return false;
  return true;
}

std::vector<int> CyclicCovering::sets_containing(const Point& x) const {
  std::vector<int> out;
  for (int i = 1; i <= m(); ++i)
    if (set(i).contains(x)) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> CyclicCovering::duplicate_sets() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= m(); ++i)
    for (int j = i + 1; j <= m(); ++j)
      if (set(i).shape() == set(j).shape()) out.emplace_back(i, j);
  return out;
}

std::vector<Point> CyclicCovering::evidence_points(int index, const SamplingOptions& options) const {
  return set(index).evidence_points(options, static_cast<std::uint64_t>(index));
}

int wrap_index(long long p, int m) {
  if (m < 2) throw ArgumentError("m must be at least 2, got " + std::to_string(m));
  if (p < 1) throw ArgumentError("index must be at least 1, got " + std::to_string(p));
  return static_cast<int>((p - 1) % m) + 1;
}

int power_shift(int r, int k, int m) {
  if (m < 2) throw ArgumentError("m must be at least 2");
  if (r < 1 || r > m) throw ArgumentError("r must lie in [1, m]");
  if (k < 1) throw ArgumentError("k must be at least 1");
  return wrap_index(static_cast<long long>(k) * r, m);
}

std::vector<CyclicCovering> cyclic_rotations(const CyclicCovering& cov) {
  std::vector<CyclicCovering> out;
  out.reserve(static_cast<std::size_t>(cov.m()));
  for (int t = 0; t < cov.m(); ++t) {
    std::vector<MemberSet> sets;
    for (int i = 1; i <= cov.m(); ++i) sets.push_back(cov.set(i + t));
    out.emplace_back(std::move(sets));
  }
  return out;
}

ValidationReport validate_r_cyclic(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                                   const SamplingOptions& sampling) {
  const int m = cov.m();
  if (r < 1 || r > m) throw ArgumentError("r must lie in [1, " + std::to_string(m) + "], got " + std::to_string(r));

  ValidationReport report;
  report.r = r;
  report.evidence = space.is_finite() && cov.is_finite() ? Evidence::Proved : Evidence::Sampled;
  report.duplicate_sets = cov.duplicate_sets();

  for (int i = 1; i <= m; ++i)
    if (const auto* fs = std::get_if<FiniteSet>(&cov.set(i).shape()))
      for (const auto& label : fs->labels)
        if (!space.contains(Point::labeled(label)))
          throw DomainError("point " + label + " of X_" + std::to_string(i) + " is outside the space");

  if (const auto* fin = space.finite()) {
    for (const auto& p : fin->points())
      if (cov.sets_containing(p).empty()) report.uncovered.push_back(p);
  }

  bool inclusion = true;
  for (int i = 1; i <= m && inclusion; ++i) {
    const MemberSet& target = cov.set(i + r);
    for (const auto& x : cov.evidence_points(i, sampling)) {
      if (!space.contains(x)) throw DomainError("point " + x.to_string() + " of X_" + std::to_string(i) + " is outside the space");
      Point y = f(x);
      if (!space.contains(y)) throw DomainError("f maps " + x.to_string() + " outside the space");
      ++report.points_checked;
      if (!target.contains(y)) {
        report.witness = InclusionWitness{i, x, std::move(y)};
        inclusion = false;
        break;
      }
    }
  }
  report.passed = inclusion && report.uncovered.empty();
  return report;
}

std::vector<int> scan_shifts(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f,
                             const SamplingOptions& sampling) {
  std::vector<int> out;
  for (int r = 1; r <= cov.m(); ++r)
    if (validate_r_cyclic(space, cov, f, r, sampling).passed) out.push_back(r);
  return out;
}

}  // namespace rcyclic
