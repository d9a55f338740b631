#include "rcyclic/solver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rcyclic/errors.hpp"

namespace rcyclic {

namespace {

double slack(double scale) { return 1e-12 * (1.0 + scale); }

void require_parameters(double c, const SolveOptions& options) {
  if (!(c >= 0.0 && c < 1.0)) throw ArgumentError("contraction constant must lie in [0, 1), got " + format_real(c));
  if (!(options.eps > 0.0)) throw ArgumentError("eps must be positive");
  if (options.max_iter < 1) throw ArgumentError("max_iter must be at least 1");
}

void require_certificate(const ContractionCertificate& cert, Mode mode, int r) {
  if (!cert.positive()) throw PreconditionError("the contraction certificate is negative");
  if (cert.mode != mode)
    throw ArgumentError(std::string("expected a ") + to_string(mode) + " certificate, got " + to_string(cert.mode));
  if (cert.r != r) throw ArgumentError("certificate was issued for r = " + std::to_string(cert.r));
}

class Checks {
 public:
  explicit Checks(CheckPolicy policy) : policy_(policy) {}

  void require(bool ok, const std::string& what) {
    if (ok) return;
    if (policy_ == CheckPolicy::Throw) throw CertificateInconsistencyError(what);
    if (warnings_.size() < 64) warnings_.push_back(what);
  }

  void append_to(std::vector<std::string>& out) {
    out.insert(out.end(), warnings_.begin(), warnings_.end());
    warnings_.clear();
  }

 private:
  CheckPolicy policy_;
  std::vector<std::string> warnings_;
};

std::string at_step(int n) { return " at n = " + std::to_string(n); }

// Trace of x_0..x_N. `set_indices` is empty or has one entry per point.
IterationTrace make_trace(const MetricSpace& space, const SelfMap& f, std::vector<Point> points, double c,
                          const SolveOptions& options, Termination termination, const std::vector<int>& set_indices) {
  const int last = static_cast<int>(points.size()) - 1;
  IterationTrace trace{.start = points.front(),
                       .c = c,
                       .eps = options.eps,
                       .steps = {},
                       .fixed_point = points.back(),
                       .iterations = last,
                       .termination = termination,
                       .warnings = {}};
  trace.steps.reserve(points.size());
  const Point image_of_last = f(points.back());
  for (int n = 0; n <= last; ++n) {
    const auto un = static_cast<std::size_t>(n);
    const double d = n < last ? space.distance(points[un], points[un + 1]) : space.distance(points[un], image_of_last);
    trace.steps.push_back({n, set_indices.empty() ? 0 : set_indices[un], std::move(points[un]), d});
  }
  trace.residual = trace.steps.back().step_distance;
  if (last >= 1) {
    const double d01 = trace.steps.front().step_distance;
    trace.a_priori_bound = std::pow(c, last) / (1.0 - c) * d01;
    trace.a_posteriori_bound = c / (1.0 - c) * trace.steps[static_cast<std::size_t>(last - 1)].step_distance;
  }
  return trace;
}

std::vector<Point> iterate_until_bound(const MetricSpace& space, const SelfMap& f, const Point& x0, double c,
                                       const SolveOptions& options, Termination& termination) {
  std::vector<Point> points{x0};
  termination = Termination::MaxIterations;
  for (int n = 1; n <= options.max_iter; ++n) {
    points.push_back(f(points.back()));
    const double step = space.distance(points[points.size() - 2], points.back());
    if (c / (1.0 - c) * step <= options.eps) {
      termination = Termination::Converged;
      break;
    }
  }
  return points;
}

// Geometric decay, retrospective a-priori bound with x* = x_N, and the residual bound.
void check_picard_bounds(const MetricSpace& space, const IterationTrace& trace, Checks& checks) {
  const double c = trace.c;
  for (std::size_t n = 0; n + 1 < trace.steps.size(); ++n) {
    const double prev = trace.steps[n].step_distance;
    const double next = trace.steps[n + 1].step_distance;
    checks.require(next <= c * prev + slack(prev), "geometric decay fails" + at_step(static_cast<int>(n) + 1) + ": " +
                                                       format_real(next) + " > c * " + format_real(prev));
  }
  const double d01 = trace.steps.front().step_distance;
  double cn = 1.0;
  for (const auto& step : trace.steps) {
    const double actual = space.distance(step.point, trace.fixed_point);
    const double bound = cn / (1.0 - c) * d01;
    checks.require(actual <= bound + slack(d01), "a-priori bound fails" + at_step(step.n) + ": d(x_n, x*) = " +
                                                     format_real(actual) + " > " + format_real(bound));
    cn *= c;
  }
  if (trace.converged())
    checks.require(trace.residual <= trace.eps * (1.0 + c) + slack(trace.eps),
                   "residual " + format_real(trace.residual) + " exceeds eps (1 + c)");
}

// Membership of x_n in its declared set, and coverage of every window of `circuit_length`
// consecutive indices.
void check_set_indices(const CyclicCovering& cov, const IterationTrace& trace, std::span<const int> circuit,
                       Checks& checks) {
  for (const auto& step : trace.steps)
    checks.require(cov.set(step.set_index).contains(step.point),
                   "x_n = " + step.point.to_string() + " is not in X_" + std::to_string(step.set_index) + at_step(step.n));
  const std::size_t window = circuit.size();
  for (std::size_t start = 0; start + window <= trace.steps.size(); ++start) {
    std::vector<int> seen;
    for (std::size_t t = start; t < start + window; ++t) seen.push_back(trace.steps[t].set_index);
    std::sort(seen.begin(), seen.end());
    std::vector<int> expected(circuit.begin(), circuit.end());
    std::sort(expected.begin(), expected.end());
    checks.require(seen == expected, "index window starting" + at_step(static_cast<int>(start)) +
                                         " does not visit every set of its circuit");
  }
}

// d(f^n(x_0), x*) <= c^n d(x_0, x*) with x* approximated within the a-posteriori bound.
void check_attraction(const MetricSpace& space, const IterationTrace& trace, Checks& checks) {
  const double err = trace.a_posteriori_bound;
  const double d0 = space.distance(trace.start, trace.fixed_point);
  double cn = 1.0;
  for (const auto& step : trace.steps) {
    const double actual = space.distance(step.point, trace.fixed_point);
    const double bound = cn * d0 + (1.0 + cn) * err;
    checks.require(actual <= bound + slack(d0), "attraction bound fails" + at_step(step.n) + ": " +
                                                    format_real(actual) + " > " + format_real(bound));
    cn *= trace.c;
  }
}

IterationTrace run_synchronous(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                               const ContractionCertificate& cert, const Point& x0, int start_set,
                               std::span<const int> circuit, const SolveOptions& options) {
  Checks checks(policy_for(cert));
  Termination termination{};
  auto points = iterate_until_bound(space, f, x0, cert.c, options, termination);
  const auto indices = orbit_indices(start_set, r, cov.m(), static_cast<int>(points.size()) - 1);
  auto trace = make_trace(space, f, std::move(points), cert.c, options, termination, indices);
  check_picard_bounds(space, trace, checks);
  check_set_indices(cov, trace, circuit, checks);
  if (trace.converged()) check_attraction(space, trace, checks);
  checks.append_to(trace.warnings);
  return trace;
}

}  // namespace

CheckPolicy policy_for(const ContractionCertificate& cert) {
  return cert.evidence == Evidence::Proved ? CheckPolicy::Throw : CheckPolicy::Warn;
}

const char* to_string(Termination t) { return t == Termination::Converged ? "converged" : "max-iterations"; }

const char* to_string(PartitionClass p) {
  switch (p) {
    case PartitionClass::PairwiseDisjoint: return "pairwise-disjoint";
    case PartitionClass::PartiallyOverlapping: return "partially-overlapping";
    case PartitionClass::CommonCore: return "common-core";
  }
  return "?";
}

IterationTrace picard(const MetricSpace& space, const SelfMap& f, const Point& x0, double c,
                      const SolveOptions& options, CheckPolicy policy) {
  require_parameters(c, options);
  if (!space.contains(x0)) throw DomainError("start point " + x0.to_string() + " is outside the space");
  Checks checks(policy);
  Termination termination{};
  auto points = iterate_until_bound(space, f, x0, c, options, termination);
  auto trace = make_trace(space, f, std::move(points), c, options, termination, {});
  check_picard_bounds(space, trace, checks);
  checks.append_to(trace.warnings);
  return trace;
}

IterationTrace solve_synchronous(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                                 const ContractionCertificate& cert, const Point& x0, const SolveOptions& options) {
  const int m = cov.m();
  if (r < 1 || r >= m) throw ArgumentError("r must lie in [1, m)");
  if (std::gcd(m, r) != 1)
    throw ArgumentError("gcd(m, r) = " + std::to_string(std::gcd(m, r)) +
                        " > 1: the orbit stays in one circuit; use solve_synchronous_decomposed");
  require_certificate(cert, Mode::Synchronous, r);
  require_parameters(cert.c, options);
  const auto holders = cov.sets_containing(x0);
  if (holders.empty()) throw DomainError("start point " + x0.to_string() + " lies in no set of the covering");
  const auto dec = decompose(m, r);
  return run_synchronous(space, cov, f, r, cert, x0, holders.front(), dec.circuits.front(), options);
}

PartitionAnalysis classify_partition(const CircuitDecomposition& dec, const CyclicCovering& cov,
                                     const MetricSpace& space, std::span<const std::optional<Point>> fixed_points,
                                     double merge_distance, const SamplingOptions& sampling) {
  if (fixed_points.size() != dec.circuits.size())
    throw ArgumentError("expected one fixed point slot per circuit");

  PartitionAnalysis out;
  for (const auto& p : fixed_points) {
    if (!p) {
      out.circuit_fixed_point.push_back(-1);
      continue;
    }
    int match = -1;
    for (std::size_t q = 0; q < out.fixed_points.size() && match < 0; ++q)
      if (space.distance(*p, out.fixed_points[q]) <= merge_distance) match = static_cast<int>(q);
    if (match < 0) {
      match = static_cast<int>(out.fixed_points.size());
      out.fixed_points.push_back(*p);
    }
    out.circuit_fixed_point.push_back(match);
  }

  // Y_a and Y_b overlap if a point of one lies in a set of the other.
  out.overlap_evidence = space.is_finite() && cov.is_finite() ? Evidence::Proved : Evidence::Sampled;
  std::vector<std::vector<Point>> members(dec.circuits.size());
  for (std::size_t j = 0; j < dec.circuits.size(); ++j)
    for (int idx : dec.circuits[j]) {
      auto pts = cov.evidence_points(idx, sampling);
      members[j].insert(members[j].end(), pts.begin(), pts.end());
    }
  auto hits = [&](std::size_t a, std::size_t b) {
    for (const auto& p : members[a])
      for (int idx : dec.circuits[b])
        if (cov.set(idx).contains(p)) return true;
    return false;
  };
  for (std::size_t a = 0; a < dec.circuits.size(); ++a)
    for (std::size_t b = a + 1; b < dec.circuits.size(); ++b)
      if (hits(a, b) || hits(b, a)) out.overlapping_circuits.emplace_back(static_cast<int>(a), static_cast<int>(b));

  const std::size_t distinct = out.fixed_points.size();
  if (distinct == 1)
    out.classification = PartitionClass::CommonCore;
  else if (distinct > 1 && distinct == dec.circuits.size())
    out.classification = PartitionClass::PairwiseDisjoint;
  else if (distinct > 1)
    out.classification = PartitionClass::PartiallyOverlapping;
  return out;
}

bool FixedPointReport::all_converged() const {
  return std::all_of(runs.begin(), runs.end(), [](const CircuitRun& run) { return run.trace.converged(); });
}

FixedPointReport solve_synchronous_decomposed(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f,
                                              int r, const ContractionCertificate& cert,
                                              std::span<const Point> starts, const SolveOptions& options) {
  const int m = cov.m();
  if (r < 1 || r >= m) throw ArgumentError("r must lie in [1, m)");
  require_certificate(cert, Mode::Synchronous, r);
  require_parameters(cert.c, options);
  auto dec = decompose(m, r);
  if (starts.size() != dec.circuits.size())
    throw ArgumentError("expected " + std::to_string(dec.k) + " start points, one per circuit, got " +
                        std::to_string(starts.size()));

  FixedPointReport report;
  report.mode = Mode::Synchronous;
  std::vector<std::optional<Point>> limits;
  for (std::size_t j = 0; j < dec.circuits.size(); ++j) {
    const auto& circuit = dec.circuits[j];
    auto holder = std::find_if(circuit.begin(), circuit.end(), [&](int idx) { return cov.set(idx).contains(starts[j]); });
    if (holder == circuit.end())
      throw ArgumentError("start point " + starts[j].to_string() + " is not in circuit " + std::to_string(j + 1));
    auto trace = run_synchronous(space, cov, f, r, cert, starts[j], *holder, circuit, options);
    if (trace.converged())
      limits.emplace_back(trace.fixed_point);
    else
      limits.emplace_back(std::nullopt);
    report.runs.push_back({static_cast<int>(j), *holder, std::move(trace)});
  }
  report.partition = classify_partition(dec, cov, space, limits, 2.0 * options.eps, {});
  report.decomposition = std::move(dec);
  return report;
}

bool AsyncResult::within_iteration_bound() const {
  if (!iteration_bound) return true;
  return first_residual_iteration && *first_residual_iteration <= *iteration_bound;
}

AsyncResult solve_asynchronous(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                               const ContractionCertificate& cert, int start_set, std::span<const Point> starts,
                               const SolveOptions& options) {
  const int m = cov.m();
  if (r < 1 || r >= m) throw ArgumentError("r must lie in [1, m)");
  require_certificate(cert, Mode::Asynchronous, r);
  const double c = cert.c;
  require_parameters(c, options);
  if (start_set < 1 || start_set > m) throw ArgumentError("start set must lie in [1, m]");
  const auto orbit_count = static_cast<std::size_t>(r);
  if (starts.size() != orbit_count)
    throw ArgumentError("expected " + std::to_string(r) + " start points in consecutive sets, got " +
                        std::to_string(starts.size()));
  for (std::size_t t = 0; t < orbit_count; ++t) {
    const int idx = wrap_index(start_set + static_cast<int>(t), m);
    if (!cov.set(idx).contains(starts[t]))
      throw ArgumentError("start point " + starts[t].to_string() + " is not in X_" + std::to_string(idx));
  }

  Checks checks(policy_for(cert));
  std::vector<std::vector<Point>> orbits(orbit_count);
  for (std::size_t t = 0; t < orbit_count; ++t) orbits[t].push_back(starts[t]);

  // Chain from orbit t at step n to orbit t at step n + 1 through consecutive sets.
  auto chain = [&](std::size_t t, std::size_t n) {
    double length = 0.0;
    const Point* prev = &orbits[t][n];
    for (std::size_t s = t + 1; s < orbit_count; ++s) {
      length += space.distance(*prev, orbits[s][n]);
      prev = &orbits[s][n];
    }
    for (std::size_t s = 0; s <= t; ++s) {
      length += space.distance(*prev, orbits[s][n + 1]);
      prev = &orbits[s][n + 1];
    }
    return length;
  };

  AsyncResult result;
  result.start_set = start_set;
  Termination termination = Termination::MaxIterations;
  std::vector<double> initial_chain(orbit_count);
  std::vector<double> last_chain(orbit_count);
  for (int n = 1; n <= options.max_iter; ++n) {
    for (auto& orbit : orbits) orbit.push_back(f(orbit.back()));
    double worst = 0.0;
    for (std::size_t t = 0; t < orbit_count; ++t) {
      last_chain[t] = chain(t, static_cast<std::size_t>(n - 1));
      if (n == 1) initial_chain[t] = last_chain[t];
      worst = std::max(worst, last_chain[t]);
    }
    if (c / (1.0 - c) * worst <= options.eps) {
      termination = Termination::Converged;
      break;
    }
  }
  result.termination = termination;

  // Inter-orbit contraction and the chain step bound, for every aligned step.
  const std::size_t last = orbits.front().size() - 1;
  double cn = 1.0;
  for (std::size_t n = 0; n <= last; ++n) {
    for (std::size_t t = 0; t + 1 < orbit_count; ++t) {
      const double d0 = space.distance(orbits[t][0], orbits[t + 1][0]);
      const double dn = space.distance(orbits[t][n], orbits[t + 1][n]);
      checks.require(dn <= cn * d0 + slack(d0), "inter-orbit bound fails for orbits " + std::to_string(t) + ", " +
                                                    std::to_string(t + 1) + at_step(static_cast<int>(n)) + ": " +
                                                    format_real(dn) + " > " + format_real(cn * d0));
    }
    if (n < last)
      for (std::size_t t = 0; t < orbit_count; ++t) {
        const double step = space.distance(orbits[t][n], orbits[t][n + 1]);
        checks.require(step <= cn * initial_chain[t] + slack(initial_chain[t]),
                       "step bound fails for orbit " + std::to_string(t) + at_step(static_cast<int>(n)) + ": " +
                           format_real(step) + " > " + format_real(cn * initial_chain[t]));
      }
    cn *= c;
  }

  for (std::size_t t = 0; t < orbit_count; ++t) {
    const int first = wrap_index(start_set + static_cast<int>(t), m);
    const auto indices = orbit_indices(first, r, m, static_cast<int>(last));
    auto trace = make_trace(space, f, std::move(orbits[t]), c, options, termination, indices);
    if (last >= 1) {
      trace.a_priori_bound = std::pow(c, static_cast<double>(last)) / (1.0 - c) * initial_chain[t];
      trace.a_posteriori_bound = c / (1.0 - c) * last_chain[t];
    }
    for (const auto& step : trace.steps)
      checks.require(cov.set(step.set_index).contains(step.point), "orbit " + std::to_string(t) + ": x_n = " +
                                                                      step.point.to_string() + " is not in X_" +
                                                                      std::to_string(step.set_index) + at_step(step.n));
    result.orbits.push_back(std::move(trace));
  }

  for (std::size_t a = 0; a < orbit_count; ++a)
    for (std::size_t b = a + 1; b < orbit_count; ++b)
      result.limit_spread = std::max(
          result.limit_spread, space.distance(result.orbits[a].fixed_point, result.orbits[b].fixed_point));
  if (result.converged())
    checks.require(result.limit_spread <= 2.0 * options.eps + slack(options.eps),
                   "orbit limits differ by " + format_real(result.limit_spread));

  const auto& primary = result.orbits.front();
  for (const auto& step : primary.steps)
    if (step.step_distance <= options.eps) {
      result.first_residual_iteration = step.n;
      break;
    }
  const double d01 = primary.steps.front().step_distance;
  if (c > 0.0 && d01 > 0.0) {
    const double ratio = options.eps * (1.0 - c) / d01;
    result.iteration_bound = ratio >= 1.0 ? 0 : static_cast<int>(std::ceil(std::log(ratio) / std::log(c)));
  }

  checks.append_to(result.warnings);
  return result;
}

}  // namespace rcyclic
