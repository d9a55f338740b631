#include "rcyclic/self_map.hpp"

#include <cmath>
#include <limits>

#include "rcyclic/errors.hpp"

namespace rcyclic {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ArgumentError(std::string(what) + " must be finite");
}

void validate(const ScaledRotation& rot) {
  require_finite(rot.center[0], "rotation center");
  require_finite(rot.center[1], "rotation center");
  require_finite(rot.angle, "rotation angle");
  require_finite(rot.scale, "rotation scale");
  if (rot.scale < 0.0) throw ArgumentError("rotation scale must be nonnegative");
}

std::array<double, 2> planar(const Point& x) {
  if (x.is_labeled() || x.dimension() != 2) throw DomainError("rotation needs a planar point, got " + x.to_string());
  return {x.coords()[0], x.coords()[1]};
}

Point rotate(const ScaledRotation& rot, const std::array<double, 2>& p) {
  const double dx = p[0] - rot.center[0];
  const double dy = p[1] - rot.center[1];
  const double cs = std::cos(rot.angle);
  const double sn = std::sin(rot.angle);
  return Point::at({rot.center[0] + rot.scale * (cs * dx - sn * dy), rot.center[1] + rot.scale * (sn * dx + cs * dy)});
}

struct Apply {
  const Point& x;

  Point operator()(const LookupMap& m) const {
    if (!x.is_labeled()) throw DomainError("lookup map needs a labeled point, got " + x.to_string());
    auto it = m.table.find(x.label());
    if (it == m.table.end()) throw DomainError("lookup map is undefined at " + x.label());
    return Point::labeled(it->second);
  }

  Point operator()(const AffineMap& m) const {
    if (x.is_labeled() || x.dimension() != m.dim)
      throw DomainError("affine map needs a point of R^" + std::to_string(m.dim) + ", got " + x.to_string());
    auto in = x.coords();
    std::vector<double> out(m.dim);
    for (std::size_t i = 0; i < m.dim; ++i) {
      double sum = m.translation[i];
      for (std::size_t j = 0; j < m.dim; ++j) sum += m.linear[i * m.dim + j] * in[j];
      out[i] = sum;
    }
    return Point::at(std::move(out));
  }

  Point operator()(const ScaledRotation& rot) const { return rotate(rot, planar(x)); }

  Point operator()(const PiecewiseRotation& pw) const {
    const auto p = planar(x);
    const ScaledRotation* best = nullptr;
    double best_d = std::numeric_limits<double>::infinity();
    for (const auto& piece : pw.pieces) {
      const double d = std::hypot(p[0] - piece.center[0], p[1] - piece.center[1]);
      if (d < best_d) {
        best_d = d;
        best = &piece;
      }
    }
    return rotate(*best, p);
  }

  Point operator()(const IteratedMap& it) const {
    Point y = x;
    for (int k = 0; k < it.power; ++k) y = (*it.base)(y);
    return y;
  }
};

}  // namespace

bool operator==(const IteratedMap& a, const IteratedMap& b) {
  if (a.power != b.power) return false;
  if (a.base == b.base) return true;
  return a.base && b.base && *a.base == *b.base;
}

SelfMap::SelfMap(MapDefinition definition) : definition_(std::move(definition)) {
  std::visit(
      [](const auto& def) {
        using T = std::decay_t<decltype(def)>;
        if constexpr (std::is_same_v<T, AffineMap>) {
          if (def.dim == 0) throw ArgumentError("affine map dimension must be positive");
          if (def.linear.size() != def.dim * def.dim)
            throw ArgumentError("affine linear part must have dim*dim entries");
          if (def.translation.size() != def.dim) throw ArgumentError("affine translation must have dim entries");
          for (double v : def.linear) require_finite(v, "affine coefficient");
          for (double v : def.translation) require_finite(v, "affine translation");
        } else if constexpr (std::is_same_v<T, ScaledRotation>) {
          validate(def);
        } else if constexpr (std::is_same_v<T, PiecewiseRotation>) {
          if (def.pieces.empty()) throw ArgumentError("piecewise rotation needs at least one piece");
          for (const auto& piece : def.pieces) validate(piece);
        } else if constexpr (std::is_same_v<T, IteratedMap>) {
          if (!def.base) throw ArgumentError("iterated map needs a base map");
          if (def.power < 1) throw ArgumentError("iteration power must be at least 1");
        } else {
          for (const auto& [from, to] : def.table)
            if (from.empty() || to.empty()) throw ArgumentError("lookup labels must be nonempty");
        }
      },
      definition_);
}

Point SelfMap::operator()(const Point& x) const { return std::visit(Apply{x}, definition_); }

SelfMap SelfMap::iterate(const SelfMap& f, int power) {
  if (power < 1) throw ArgumentError("iteration power must be at least 1");
  if (const auto* lookup = std::get_if<LookupMap>(&f.definition_)) {
    LookupMap out;
    for (const auto& [from, to] : lookup->table) {
      std::string y = to;
      for (int k = 1; k < power; ++k) {
        auto it = lookup->table.find(y);
        if (it == lookup->table.end()) throw DomainError("lookup map is undefined at " + y);
        y = it->second;
      }
      out.table.emplace(from, std::move(y));
    }
    return SelfMap(std::move(out));
  }
  if (power == 1) return f;
  return SelfMap(IteratedMap{std::make_shared<const SelfMap>(f), power});
}

const char* SelfMap::kind() const {
  static constexpr const char* kNames[] = {"lookup", "affine", "rotation", "piecewise_rotation", "iterated"};
  return kNames[definition_.index()];
}

}  // namespace rcyclic
