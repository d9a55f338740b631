#pragma once

// Independent reference computations used by the tests. Nothing here calls into the
// library code under test except for plain data types.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline int gcd_by_subtraction(int a, int b) {
  while (a != b) {
    if (a > b)
      a -= b;
    else
      b -= a;
  }
  return a;
}

// Circuits by marking: walk 0-based positions with p -> (p + r) % m, report 1-based.
inline std::vector<std::vector<int>> circuits_by_walk(int m, int r) {
  std::vector<bool> seen(static_cast<std::size_t>(m), false);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < m; ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    std::vector<int> circuit;
    for (int p = start; !seen[static_cast<std::size_t>(p)]; p = (p + r) % m) {
      seen[static_cast<std::size_t>(p)] = true;
      circuit.push_back(p + 1);
    }
    out.push_back(circuit);
  }
  return out;
}

// Smallest N with c/(1-c) * d0 * c^(N-1) <= eps for a map with exact step ratio c.
inline int picard_steps_for_similarity(double d0, double c, double eps) {
  double step = d0;
  int n = 1;
  while (c / (1.0 - c) * step > eps) {
    step *= c;
    ++n;
  }
  return n;
}

inline double hypot2(double x, double y) { return std::sqrt(x * x + y * y); }

// Sector at the origin with 0 <= b < e <= 2 pi; strict interior test used away from edges.
inline bool in_sector(double x, double y, double radius, double b, double e) {
  const double two_pi = 2.0 * std::acos(-1.0);
  double t = std::atan2(y, x);
  if (t < 0) t += two_pi;
  return hypot2(x, y) <= radius && t >= b && t <= e;
}

// Seeded generator for hand-rolled property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace oracle
