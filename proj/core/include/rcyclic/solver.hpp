#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rcyclic/contraction.hpp"
#include "rcyclic/covering.hpp"
#include "rcyclic/decomposition.hpp"
#include "rcyclic/metric.hpp"
#include "rcyclic/self_map.hpp"

namespace rcyclic {

struct SolveOptions {
  double eps = 1e-9;
  int max_iter = 10000;
};

/// What happens when a runtime inequality from the convergence proofs fails.
/// Proved certificates make violations errors; sampled ones downgrade them to warnings.
enum class CheckPolicy { Throw, Warn };

CheckPolicy policy_for(const ContractionCertificate& cert);

enum class Termination { Converged, MaxIterations };

const char* to_string(Termination t);

struct TraceStep {
  int n;
  /// Set index of x_n along the index orbit; 0 when no covering is attached.
  int set_index;
  Point point;
  /// d(x_n, x_{n+1}); for the last step this is the residual d(f(x*), x*).
  double step_distance;
};

/// Picard orbit x_0, ..., x_N with its error bounds.
struct IterationTrace {
  Point start;
  double c;
  double eps;
  std::vector<TraceStep> steps;
  Point fixed_point;
  int iterations = 0;
  double a_priori_bound = 0.0;      // c^N / (1 - c) * d(x_0, x_1)
  double a_posteriori_bound = 0.0;  // c / (1 - c) * d(x_{N-1}, x_N)
  double residual = 0.0;            // d(f(x*), x*)
  Termination termination = Termination::MaxIterations;
  std::vector<std::string> warnings;

  bool converged() const noexcept { return termination == Termination::Converged; }
};

/// x_{n+1} = f(x_n) until c / (1 - c) * d(x_n, x_{n-1}) <= eps or max_iter steps.
/// Checks geometric step decay, the a-priori bound (retrospectively) and the residual bound
/// d(f(x*), x*) <= eps (1 + c). Throws ArgumentError if c is outside [0, 1) or eps <= 0.
IterationTrace picard(const MetricSpace& space, const SelfMap& f, const Point& x0, double c,
                      const SolveOptions& options = {}, CheckPolicy policy = CheckPolicy::Throw);

/// Unique fixed point of a synchronous r-cyclic contraction with gcd(m, r) = 1.
/// Throws ArgumentError when gcd(m, r) != 1 (use solve_synchronous_decomposed), when the
/// certificate is not a positive synchronous certificate for r, or DomainError when x0 is in
/// no set.
IterationTrace solve_synchronous(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                                 const ContractionCertificate& cert, const Point& x0,
                                 const SolveOptions& options = {});

enum class PartitionClass { PairwiseDisjoint, PartiallyOverlapping, CommonCore };

const char* to_string(PartitionClass p);

struct PartitionAnalysis {
  /// Absent when no circuit produced a fixed point.
  std::optional<PartitionClass> classification;
  /// Distinct fixed points after merging points closer than the merge distance.
  std::vector<Point> fixed_points;
  /// For each circuit, the index into fixed_points, or -1 when the circuit has none.
  std::vector<int> circuit_fixed_point;
  /// Circuit pairs (0-based, a < b) whose unions share a point.
  std::vector<std::pair<int, int>> overlapping_circuits;
  Evidence overlap_evidence = Evidence::Proved;
};

/// Classifies the fixed point invariant partition from per-circuit fixed points.
/// One distinct point: common-core; k distinct points: pairwise-disjoint; otherwise
/// partially-overlapping.
PartitionAnalysis classify_partition(const CircuitDecomposition& dec, const CyclicCovering& cov,
                                     const MetricSpace& space, std::span<const std::optional<Point>> fixed_points,
                                     double merge_distance, const SamplingOptions& sampling = {});

struct CircuitRun {
  int circuit;    // 0-based
  int start_set;  // set of the circuit holding the start point
  IterationTrace trace;
};

struct FixedPointReport {
  Mode mode = Mode::Synchronous;
  CircuitDecomposition decomposition;
  std::vector<CircuitRun> runs;
  PartitionAnalysis partition;

  bool all_converged() const;
};

/// One Picard run per circuit of a synchronous contraction with gcd(m, r) = k > 1.
/// `starts[j]` must lie in a set of circuit j. Fixed points closer than 2 eps are merged.
FixedPointReport solve_synchronous_decomposed(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f,
                                              int r, const ContractionCertificate& cert,
                                              std::span<const Point> starts, const SolveOptions& options = {});

struct AsyncResult {
  int start_set = 0;
  /// orbits[t] starts in X_{start_set + t}; orbits[0] is the primary orbit.
  std::vector<IterationTrace> orbits;
  Termination termination = Termination::MaxIterations;
  /// Largest pairwise distance between orbit limits.
  double limit_spread = 0.0;
  /// First n with d(x_n, x_{n+1}) <= eps on the primary orbit, if reached.
  std::optional<int> first_residual_iteration;
  /// ceil(log(eps (1 - c) / d(x_0, x_1)) / log c) for the primary orbit, when defined.
  std::optional<int> iteration_bound;
  std::vector<std::string> warnings;

  const Point& fixed_point() const { return orbits.front().fixed_point; }
  bool converged() const noexcept { return termination == Termination::Converged; }
  bool within_iteration_bound() const;
};

/// Advances r orbits started in consecutive sets X_s, ..., X_{s+r-1} in lockstep and checks
/// d(o_t[n], o_{t+1}[n]) <= c^n d(o_t[0], o_{t+1}[0]) and d(o_t[n], o_t[n+1]) <= c^n A_t,
/// where A_t is the length of the chain o_t[0], o_{t+1}[0], ..., o_{r-1}[0], o_0[1], ..., o_t[1].
/// Stops when c / (1 - c) times every orbit's current chain length is <= eps.
/// Throws ArgumentError when the starts are not in consecutive sets, and
/// CertificateInconsistencyError when a check fails under a proved certificate.
AsyncResult solve_asynchronous(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                               const ContractionCertificate& cert, int start_set, std::span<const Point> starts,
                               const SolveOptions& options = {});

}  // namespace rcyclic
