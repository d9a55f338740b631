#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

namespace rcyclic {

/// Absolute tolerance used when checking the metric axioms.
inline constexpr double kAxiomTolerance = 1e-12;

/// Seed used for every sampled check unless the caller overrides it.
inline constexpr std::uint64_t kDefaultSeed = 20240611;

/// Formats a real with 12 significant digits.
std::string format_real(double value);

/// A point of either a finite space (opaque label) or a Euclidean space (coordinates).
class Point {
 public:
  static Point labeled(std::string label);
  /// Throws ArgumentError when a coordinate is NaN or infinite, or when `coords` is empty.
  static Point at(std::vector<double> coords);

  bool is_labeled() const noexcept { return std::holds_alternative<std::string>(value_); }
  const std::string& label() const;
  std::span<const double> coords() const;
  std::size_t dimension() const noexcept;

  std::string to_string() const;

  friend bool operator==(const Point&, const Point&) = default;

 private:
  explicit Point(std::variant<std::string, std::vector<double>> value) : value_(std::move(value)) {}

  std::variant<std::string, std::vector<double>> value_;
};

/// Finite point set with an explicit distance table.
///
/// The table is stored as given; it is not required to satisfy the metric
/// axioms so that check_metric_axioms can report violations as data.
class FiniteSpace {
 public:
  /// `table` is row-major with labels.size() squared finite entries. Throws ArgumentError
  /// on size mismatch, duplicate or empty labels, or a non-finite entry.
  FiniteSpace(std::vector<std::string> labels, std::vector<double> table);

  /// Discrete metric: d(a,b) = 1 for a != b.
  static FiniteSpace discrete(std::vector<std::string> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<double>& table() const noexcept { return table_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  double at(std::size_t i, std::size_t j) const { return table_[i * labels_.size() + j]; }
  bool is_discrete() const;
  std::vector<Point> points() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> table_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// R^dim with the Euclidean norm. Sampling draws from the cube [-1, 1]^dim.
class EuclideanSpace {
 public:
  explicit EuclideanSpace(std::size_t dimension);

  std::size_t dimension() const noexcept { return dimension_; }
  std::vector<Point> sample(std::size_t count, std::uint64_t seed) const;

  friend bool operator==(const EuclideanSpace&, const EuclideanSpace&) = default;

 private:
  std::size_t dimension_;
};

/// A point universe plus its distance function. Completeness is a declared assumption.
class MetricSpace {
 public:
  MetricSpace(FiniteSpace space) : kind_(std::move(space)) {}  // NOLINT(google-explicit-constructor)
  MetricSpace(EuclideanSpace space) : kind_(space) {}          // NOLINT(google-explicit-constructor)

  bool is_finite() const noexcept { return std::holds_alternative<FiniteSpace>(kind_); }
  const FiniteSpace* finite() const noexcept { return std::get_if<FiniteSpace>(&kind_); }
  const EuclideanSpace* euclidean() const noexcept { return std::get_if<EuclideanSpace>(&kind_); }

  bool contains(const Point& p) const;
  /// Throws DomainError when either point is outside the space.
  double distance(const Point& a, const Point& b) const;

  friend bool operator==(const MetricSpace&, const MetricSpace&) = default;

 private:
  std::variant<FiniteSpace, EuclideanSpace> kind_;
};

inline double distance(const MetricSpace& space, const Point& a, const Point& b) {
  return space.distance(a, b);
}

enum class Axiom { NonNegativity, Identity, Symmetry, Triangle };

const char* to_string(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  /// (a), (a,b) or (a,b,c); for Triangle, d(a,c) > d(a,b) + d(b,c).
  std::vector<Point> witness;
  double lhs;
  double rhs;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool exhaustive = false;
  std::size_t points_checked = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive on finite spaces; on Euclidean spaces checks `sample_budget` sampled points
/// (all pairs and triples among them). Throws ArgumentError if sample_budget < 3 for a
/// continuous space.
AxiomReport check_metric_axioms(const MetricSpace& space, std::size_t sample_budget,
                                std::uint64_t seed = kDefaultSeed);

}  // namespace rcyclic
