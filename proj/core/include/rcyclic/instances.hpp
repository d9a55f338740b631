#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "rcyclic/contraction.hpp"
#include "rcyclic/covering.hpp"
#include "rcyclic/metric.hpp"
#include "rcyclic/self_map.hpp"

namespace rcyclic {

/// Modeling hypotheses the instance declares but the library never verifies.
struct Assumptions {
  bool complete = true;
  bool closed_sets = true;
  friend bool operator==(const Assumptions&, const Assumptions&) = default;
};

/// A complete fixed-point problem: space, ordered covering, operator and shift.
struct InstanceSpec {
  std::string name;
  int r = 1;
  Mode mode = Mode::Synchronous;
  MetricSpace space;
  CyclicCovering covering;
  SelfMap map;
  std::optional<double> c;
  Assumptions assumptions;

  int m() const { return covering.m(); }

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

/// X = {x1, ..., xm}, X_i = {x_i}, discrete metric, f(x_i) = x_{i+r}.
/// Throws ArgumentError unless m >= 2 and 1 <= r <= m.
InstanceSpec gen_finite_shift(int m, int r);

/// Sectors of disks with a scaled rotation; see the README for the construction.
/// disks = 1: one unit disk at the origin cut into m closed sectors, f rotates by 2 pi r / m
/// and scales by `scale` toward the center. disks = gcd(m, r) = k > 1: disk j (center
/// (3(j-1), 0)) carries the sets of circuit j as m/k sectors and f rotates it by 2 pi k / m.
/// Throws ArgumentError unless m >= 2, 1 <= r < m, 0 < scale < 1 and disks is 1 or gcd(m, r).
InstanceSpec gen_sector_rotation(int m, int r, double scale, int disks);

/// Format id on the first line of every instance document.
inline constexpr std::string_view kInstanceFormat = "rcyclic-instance";
inline constexpr int kInstanceVersion = 1;

/// Parses and validates an instance document. Throws ParseError with line and field.
InstanceSpec load_instance(std::string_view text);
/// Reads a file and parses it. Throws std::runtime_error on I/O failure.
InstanceSpec load_instance_file(const std::filesystem::path& path);

/// Writes the instance document; load_instance(serialize(x)) == x.
std::string serialize(const InstanceSpec& spec);

}  // namespace rcyclic
