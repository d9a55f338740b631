#pragma once

#include <string>
#include <vector>

namespace rcyclic {

/// Invariant circuits of an r-cyclic covering with gcd(m, r) = k.
///
/// Circuit j (1-based) is the traversal X_j, X_{j+r}, ..., X_{j+(m/k-1)r} with indices
/// wrapped into [1, m]. The circuits partition {1, ..., m} and the operator restricted to
/// the union of one circuit is 1-cyclic along the listed order.
struct CircuitDecomposition {
  int m = 0;
  int r = 0;
  int k = 0;
  std::vector<std::vector<int>> circuits;

  /// 0-based position of the circuit containing set index i.
  int circuit_of(int i) const;

  friend bool operator==(const CircuitDecomposition&, const CircuitDecomposition&) = default;
};

/// Throws ArgumentError unless m >= 2 and 1 <= r < m.
CircuitDecomposition decompose(int m, int r);

/// [wrap(l), wrap(l + r), ..., wrap(l + n r)], n + 1 entries.
std::vector<int> orbit_indices(int l, int r, int m, int n);

/// True iff the index orbit from l reaches every set within m - 1 steps.
bool visits_all(int l, int r, int m);

/// The set shift f_r in the group of shifts modulo m (identity is r = m).
struct ShiftElement {
  int r = 0;
  int m = 0;

  /// Throws ArgumentError unless m >= 2 and 1 <= r <= m.
  ShiftElement(int r, int m);

  friend bool operator==(const ShiftElement&, const ShiftElement&) = default;
};

/// f_a o f_b = f_{wrap(a + b)}. Throws ArgumentError when the moduli differ.
ShiftElement compose_shifts(const ShiftElement& a, const ShiftElement& b);

ShiftElement shift_identity(int m);
ShiftElement shift_inverse(const ShiftElement& a);

/// table[a-1][b-1] = r of compose_shifts(f_a, f_b).
std::vector<std::vector<int>> cayley_table(int m);

struct GroupViolation {
  std::string axiom;
  std::vector<int> elements;
};

struct GroupReport {
  int m = 0;
  std::vector<GroupViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Exhaustive check of closure, associativity, identity f_m, inverse f_{m-r} and
/// commutativity. Throws ArgumentError if m < 2.
GroupReport verify_group_axioms(int m);

/// Graphviz digraph with nodes X_1..X_m and edges i -> wrap(i + r), colored per circuit.
std::string emit_dot(const CircuitDecomposition& dec);

}  // namespace rcyclic
