#include "rcyclic/metric.hpp"

#include <cmath>
#include <cstdio>
#include <random>

#include "rcyclic/errors.hpp"

namespace rcyclic {

namespace {

constexpr std::size_t kMaxReportedViolations = 32;

bool all_finite(std::span<const double> values) {
  for (double v : values)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

std::string format_real(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", value == 0.0 ? 0.0 : value);  // no "-0"
  return buf;
}

Point Point::labeled(std::string label) {
  if (label.empty()) throw ArgumentError("point label must be nonempty");
  return Point(std::move(label));
}

Point Point::at(std::vector<double> coords) {
  if (coords.empty()) throw ArgumentError("point needs at least one coordinate");
  if (!all_finite(coords)) throw ArgumentError("point coordinates must be finite");
  return Point(std::move(coords));
}

const std::string& Point::label() const {
  if (const auto* label = std::get_if<std::string>(&value_)) return *label;
  throw DomainError("point " + to_string() + " has no label");
}

std::span<const double> Point::coords() const {
  if (const auto* coords = std::get_if<std::vector<double>>(&value_)) return *coords;
  throw DomainError("point " + to_string() + " has no coordinates");
}

std::size_t Point::dimension() const noexcept {
  if (const auto* coords = std::get_if<std::vector<double>>(&value_)) return coords->size();
  return 0;
}

std::string Point::to_string() const {
  if (const auto* label = std::get_if<std::string>(&value_)) return *label;
  const auto& coords = std::get<std::vector<double>>(value_);
  std::string out = "(";
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ", ";
    out += format_real(coords[i]);
  }
  return out + ")";
}

FiniteSpace::FiniteSpace(std::vector<std::string> labels, std::vector<double> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  if (labels_.empty()) throw ArgumentError("finite space needs at least one point");
  if (table_.size() != labels_.size() * labels_.size())
    throw ArgumentError("distance table must have " + std::to_string(labels_.size() * labels_.size()) +
                        " entries, got " + std::to_string(table_.size()));
  if (!all_finite(table_)) throw ArgumentError("distance table entries must be finite");
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i].empty()) throw ArgumentError("point labels must be nonempty");
    if (!index_.emplace(labels_[i], i).second) throw ArgumentError("duplicate point label '" + labels_[i] + "'");
  }
}

FiniteSpace FiniteSpace::discrete(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<double> table(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) table[i * n + i] = 0.0;
  return FiniteSpace(std::move(labels), std::move(table));
}

std::optional<std::size_t> FiniteSpace::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool FiniteSpace::is_discrete() const {
  const std::size_t n = size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (at(i, j) != (i == j ? 0.0 : 1.0)) return false;
  return true;
}

std::vector<Point> FiniteSpace::points() const {
  std::vector<Point> out;
  out.reserve(labels_.size());
  for (const auto& label : labels_) out.push_back(Point::labeled(label));
  return out;
}

EuclideanSpace::EuclideanSpace(std::size_t dimension) : dimension_(dimension) {
  if (dimension == 0) throw ArgumentError("Euclidean space dimension must be positive");
}

std::vector<Point> EuclideanSpace::sample(std::size_t count, std::uint64_t seed) const {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Point> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<double> coords(dimension_);
    for (double& c : coords) c = unit(rng);
    out.push_back(Point::at(std::move(coords)));
  }
  return out;
}

bool MetricSpace::contains(const Point& p) const {
  if (const auto* fin = finite()) return p.is_labeled() && fin->index_of(p.label()).has_value();
  return !p.is_labeled() && p.dimension() == euclidean()->dimension();
}

double MetricSpace::distance(const Point& a, const Point& b) const {
  if (const auto* fin = finite()) {
    auto index = [&](const Point& p) {
      if (!p.is_labeled()) throw DomainError("point " + p.to_string() + " is not in the finite space");
      auto i = fin->index_of(p.label());
      if (!i) throw DomainError("point " + p.label() + " is not in the finite space");
      return *i;
    };
    return fin->at(index(a), index(b));
  }
  const std::size_t dim = euclidean()->dimension();
  for (const Point* p : {&a, &b})
    if (p->is_labeled() || p->dimension() != dim)
      throw DomainError("point " + p->to_string() + " is not in R^" + std::to_string(dim));
  auto x = a.coords();
  auto y = b.coords();
  double sum = 0.0;
  for (std::size_t i = 0; i < dim; ++i) sum += (x[i] - y[i]) * (x[i] - y[i]);
  return std::sqrt(sum);
}

const char* to_string(Axiom axiom) {
  switch (axiom) {
    case Axiom::NonNegativity: return "non-negativity";
    case Axiom::Identity: return "identity";
    case Axiom::Symmetry: return "symmetry";
    case Axiom::Triangle: return "triangle";
  }
  return "?";
}

AxiomReport check_metric_axioms(const MetricSpace& space, std::size_t sample_budget, std::uint64_t seed) {
  AxiomReport report;
  std::vector<Point> points;
  if (const auto* fin = space.finite()) {
    points = fin->points();
    report.exhaustive = true;
  } else {
    if (sample_budget < 3) throw ArgumentError("sample_budget must be at least 3 for continuous spaces");
    points = space.euclidean()->sample(sample_budget, seed);
  }
  report.points_checked = points.size();

  const std::size_t n = points.size();
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i * n + j] = space.distance(points[i], points[j]);

  auto add = [&](Axiom axiom, std::vector<Point> witness, double lhs, double rhs) {
    if (report.violations.size() < kMaxReportedViolations)
      report.violations.push_back({axiom, std::move(witness), lhs, rhs});
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(d[i * n + i]) > kAxiomTolerance) add(Axiom::Identity, {points[i]}, d[i * n + i], 0.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double dij = d[i * n + j];
      if (dij < -kAxiomTolerance) add(Axiom::NonNegativity, {points[i], points[j]}, dij, 0.0);
      if (i == j) continue;
      if (dij <= kAxiomTolerance && !(points[i] == points[j]))
        add(Axiom::Identity, {points[i], points[j]}, dij, 0.0);
      if (i < j && std::abs(dij - d[j * n + i]) > kAxiomTolerance)
        add(Axiom::Symmetry, {points[i], points[j]}, dij, d[j * n + i]);
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        const double lhs = d[a * n + c];
        const double rhs = d[a * n + b] + d[b * n + c];
        if (lhs > rhs + kAxiomTolerance) add(Axiom::Triangle, {points[a], points[b], points[c]}, lhs, rhs);
      }
  return report;
}

}  // namespace rcyclic
