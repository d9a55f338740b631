#include "rcyclic/decomposition.hpp"

#include <array>
#include <numeric>
#include <sstream>

#include "rcyclic/covering.hpp"
#include "rcyclic/errors.hpp"

namespace rcyclic {

namespace {

constexpr std::array<const char*, 8> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                 "#9467bd", "#8c564b", "#e377c2", "#17becf"};
constexpr std::array<const char*, 4> kStyles = {"solid", "dashed", "dotted", "bold"};

void require_shift(int r, int m, bool allow_m) {
  if (m < 2) throw ArgumentError("m must be at least 2, got " + std::to_string(m));
  const int hi = allow_m ? m : m - 1;
  if (r < 1 || r > hi)
    throw ArgumentError("r must lie in [1, " + std::to_string(hi) + "] for m = " + std::to_string(m) + ", got " +
                        std::to_string(r));
}

}  // namespace

int CircuitDecomposition::circuit_of(int i) const {
  for (std::size_t j = 0; j < circuits.size(); ++j)
    for (int idx : circuits[j])
      if (idx == i) return static_cast<int>(j);
  throw ArgumentError("set index " + std::to_string(i) + " is not in [1, " + std::to_string(m) + "]");
}

CircuitDecomposition decompose(int m, int r) {
  if (m >= 2 && r == m)
    throw ArgumentError("decomposition is undefined for r = m: every set is mapped into itself");
  require_shift(r, m, false);
  CircuitDecomposition dec{m, r, std::gcd(m, r), {}};
  const int length = m / dec.k;
  for (int j = 1; j <= dec.k; ++j) {
    std::vector<int> circuit;
    circuit.reserve(static_cast<std::size_t>(length));
    int idx = j;
    for (int t = 0; t < length; ++t) {
      circuit.push_back(idx);
      idx = wrap_index(idx + r, m);
    }
    dec.circuits.push_back(std::move(circuit));
  }
  return dec;
}

std::vector<int> orbit_indices(int l, int r, int m, int n) {
  require_shift(r, m, true);
  if (l < 1 || l > m) throw ArgumentError("start index must lie in [1, m]");
  if (n < 0) throw ArgumentError("horizon must be nonnegative");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  int idx = l;
  for (int t = 0; t <= n; ++t) {
    out.push_back(idx);
    idx = wrap_index(idx + r, m);
  }
  return out;
}

bool visits_all(int l, int r, int m) {
  require_shift(r, m, false);
  std::vector<bool> seen(static_cast<std::size_t>(m) + 1, false);
  for (int idx : orbit_indices(l, r, m, m - 1)) seen[static_cast<std::size_t>(idx)] = true;
  for (int i = 1; i <= m; ++i)
    if (!seen[static_cast<std::size_t>(i)]) return false;
  return true;
}

ShiftElement::ShiftElement(int r, int m) : r(r), m(m) { require_shift(r, m, true); }

ShiftElement compose_shifts(const ShiftElement& a, const ShiftElement& b) {
  if (a.m != b.m)
    throw ArgumentError("cannot compose shifts modulo " + std::to_string(a.m) + " and " + std::to_string(b.m));
  return {wrap_index(a.r + b.r, a.m), a.m};
}

ShiftElement shift_identity(int m) { return {m, m}; }

ShiftElement shift_inverse(const ShiftElement& a) { return {a.r == a.m ? a.m : a.m - a.r, a.m}; }

std::vector<std::vector<int>> cayley_table(int m) {
  require_shift(1, m, true);
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int a = 1; a <= m; ++a)
    for (int b = 1; b <= m; ++b)
      table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)] =
          compose_shifts({a, m}, {b, m}).r;
  return table;
}

GroupReport verify_group_axioms(int m) {
  require_shift(1, m, true);
  GroupReport report{m, {}};
  const auto table = cayley_table(m);
  auto op = [&](int a, int b) { return table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)]; };
  const ShiftElement e = shift_identity(m);

  for (int a = 1; a <= m; ++a) {
    for (int b = 1; b <= m; ++b) {
      const int ab = op(a, b);
      if (ab < 1 || ab > m) report.violations.push_back({"closure", {a, b}});
      if (ab != op(b, a)) report.violations.push_back({"commutativity", {a, b}});
      for (int c = 1; c <= m; ++c)
        if (op(ab, c) != op(a, op(b, c))) report.violations.push_back({"associativity", {a, b, c}});
    }
    if (op(a, e.r) != a || op(e.r, a) != a) report.violations.push_back({"identity", {a}});
    const int inv = shift_inverse({a, m}).r;
    if (op(a, inv) != e.r || op(inv, a) != e.r) report.violations.push_back({"inverse", {a, inv}});
  }
  return report;
}

std::string emit_dot(const CircuitDecomposition& dec) {
  std::ostringstream out;
  out << "digraph cyclic_covering_m" << dec.m << "_r" << dec.r << " {\n";
  out << "  label=\"m=" << dec.m << ", r=" << dec.r << ", k=" << dec.k << "\";\n";
  out << "  layout=circo;\n";
  out << "  node [shape=circle];\n";
  for (std::size_t j = 0; j < dec.circuits.size(); ++j) {
    const char* color = kPalette[j % kPalette.size()];
    const char* style = kStyles[(j / kPalette.size()) % kStyles.size()];
    out << "  subgraph circuit_" << j + 1 << " {\n";
    for (int idx : dec.circuits[j])
      out << "    X" << idx << " [label=\"X_" << idx << "\", color=\"" << color << "\"];\n";
    for (int idx : dec.circuits[j])
      out << "    X" << idx << " -> X" << wrap_index(idx + dec.r, dec.m) << " [color=\"" << color << "\", style=" << style
          << "];\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace rcyclic
