#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "rcyclic/covering.hpp"
#include "rcyclic/metric.hpp"
#include "rcyclic/self_map.hpp"

namespace rcyclic {

/// Synchronous: the contraction inequality is required for x in X_i, y in X_{i+r}.
/// Asynchronous: for x in X_i, y in X_{i+1}, while f still shifts sets by r.
enum class Mode { Synchronous, Asynchronous };

const char* to_string(Mode mode);

/// Set offset between the two points of an admissible pair.
int pair_offset(Mode mode, int r);

/// Slack allowed in d(f(x), f(y)) <= c d(x, y).
inline double contraction_tolerance(double d) { return 1e-12 * (1.0 + d); }

/// Pairs closer than this are treated as coincident: they are still checked against the
/// inequality but do not contribute ratios (shared boundary points computed twice differ
/// by rounding, and their ratio is noise).
inline constexpr double kCoincidenceDistance = 1e-12;

/// x in X_set_index, y in X_{set_index + offset}.
struct PairWitness {
  int set_index;
  Point x;
  Point y;
  double image_distance;  // d(f(x), f(y))
  double distance;        // d(x, y)
  double ratio;
};

struct CertifyOptions {
  SamplingOptions sampling;
  /// Upper bound on pairs tested per set pair on continuous coverings; larger products are
  /// thinned with a fixed stride. Finite coverings are always checked exhaustively.
  std::size_t pair_budget = 200000;
};

struct ContractionCertificate {
  Mode mode = Mode::Synchronous;
  int r = 0;
  double c = 0.0;
  Evidence evidence = Evidence::Proved;
  std::size_t pairs_checked = 0;
  /// Largest d(f(x), f(y)) / d(x, y) over tested pairs with d(x, y) > kCoincidenceDistance, or 0.
  double worst_ratio = 0.0;
  std::uint64_t seed = kDefaultSeed;
  /// First violating pair in canonical order; present iff the certificate is negative.
  std::optional<PairWitness> counterexample;

  bool positive() const noexcept { return !counterexample.has_value(); }
};

struct ConstantEstimate {
  double ratio;
  PairWitness pair;
  Evidence evidence;
  std::size_t pairs_checked;
  std::uint64_t seed;
};

/// Checks d(f(x), f(y)) <= c d(x, y) + tol over every admissible pair. Throws ArgumentError
/// when c is outside [0, 1) or r outside [1, m), PreconditionError when f is not r-cyclic on
/// the covering.
ContractionCertificate certify(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                               Mode mode, double c, const CertifyOptions& options = {});

/// Supremum of d(f(x), f(y)) / d(x, y) over the same pairs certify uses, skipping coincident
/// pairs. The first maximizing pair in canonical order is returned. Throws
/// DegenerateInstanceError if every pair is coincident.
ConstantEstimate estimate_constant(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                                   Mode mode, const CertifyOptions& options = {});

}  // namespace rcyclic
