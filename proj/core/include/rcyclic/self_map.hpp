#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rcyclic/metric.hpp"

namespace rcyclic {

/// Finite map given as label -> label.
struct LookupMap {
  std::map<std::string, std::string> table;
  friend bool operator==(const LookupMap&, const LookupMap&) = default;
};

/// x -> A x + b on R^dim, A row-major.
struct AffineMap {
  std::size_t dim = 0;
  std::vector<double> linear;
  std::vector<double> translation;
  friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

/// Planar similarity: rotate by `angle` about `center`, then scale toward it.
struct ScaledRotation {
  std::array<double, 2> center{};
  double angle = 0.0;
  double scale = 1.0;
  friend bool operator==(const ScaledRotation&, const ScaledRotation&) = default;
};

/// One ScaledRotation per disk; a point is moved by the piece whose center is nearest
/// (first piece on ties).
struct PiecewiseRotation {
  std::vector<ScaledRotation> pieces;
  friend bool operator==(const PiecewiseRotation&, const PiecewiseRotation&) = default;
};

class SelfMap;

/// base^power, power >= 1.
struct IteratedMap {
  std::shared_ptr<const SelfMap> base;
  int power = 1;
  friend bool operator==(const IteratedMap& a, const IteratedMap& b);
};

using MapDefinition = std::variant<LookupMap, AffineMap, ScaledRotation, PiecewiseRotation, IteratedMap>;

/// The operator f: X -> X.
class SelfMap {
 public:
  /// Throws ArgumentError on malformed parameters (shape mismatch, non-finite values,
  /// empty piece list, power < 1).
  explicit SelfMap(MapDefinition definition);

  const MapDefinition& definition() const noexcept { return definition_; }

  /// Throws DomainError when `x` is outside the map's domain.
  Point operator()(const Point& x) const;

  /// f^power; lookup tables are composed eagerly.
  static SelfMap iterate(const SelfMap& f, int power);

  const char* kind() const;

  friend bool operator==(const SelfMap&, const SelfMap&) = default;

 private:
  MapDefinition definition_;
};

}  // namespace rcyclic
