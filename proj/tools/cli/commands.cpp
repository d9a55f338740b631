#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <vector>

#include "rcyclic/contraction.hpp"
#include "rcyclic/covering.hpp"
#include "rcyclic/decomposition.hpp"
#include "rcyclic/errors.hpp"
#include "rcyclic/instances.hpp"
#include "rcyclic/solver.hpp"
#include "report.hpp"

namespace rcyclic::cli {

namespace {

constexpr std::size_t kAxiomSampleBudget = 16;
constexpr int kMaxGroupOrder = 64;

SamplingOptions to_options(const SamplingFlags& flags) { return {flags.grid, flags.random, flags.seed}; }

std::string index_list(const std::vector<int>& indices) {
  std::string out = "[";
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(indices[i]);
  }
  return out + "]";
}

std::string point_list(const std::vector<Point>& points) {
  std::string out;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i) out += ", ";
    out += points[i].to_string();
  }
  return out;
}

Point parse_point(const std::string& spec, const MetricSpace& space) {
  std::string text = spec;
  for (char& ch : text)
    if (ch == ',') ch = ' ';
  std::istringstream in(text);
  if (space.is_finite()) {
    std::string label;
    in >> label;
    Point p = Point::labeled(label);
    if (!space.contains(p)) throw ArgumentError("point '" + label + "' is not in the space");
    return p;
  }
  std::vector<double> coords;
  for (std::string token; in >> token;) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw ArgumentError("cannot parse coordinate '" + token + "'");
    coords.push_back(v);
  }
  Point p = Point::at(std::move(coords));
  if (!space.contains(p)) throw ArgumentError("point " + p.to_string() + " has the wrong dimension");
  return p;
}

std::vector<Point> parse_points(const std::string& spec, const MetricSpace& space) {
  std::vector<Point> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto semi = spec.find(';', pos);
    const std::string part = spec.substr(pos, semi == std::string::npos ? std::string::npos : semi - pos);
    if (part.find_first_not_of(" \t") != std::string::npos) out.push_back(parse_point(part, space));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return out;
}

// Default start inside a set: its last witness (a rim point for generated sectors).
const Point& default_start(const CyclicCovering& cov, int set_index) { return cov.set(set_index).witnesses().back(); }

void describe_instance(RunReport& report, const InstanceSpec& spec, const SamplingFlags& sampling) {
  report.section("instance");
  report.add("name", spec.name);
  report.add("m", spec.m());
  report.add("r", spec.r);
  report.add("space", spec.space.is_finite()
                          ? "finite, " + std::to_string(spec.space.finite()->size()) + " points"
                          : "euclidean, dimension " + std::to_string(spec.space.euclidean()->dimension()));
  report.add("map", spec.map.kind());
  report.add("declared c", spec.c ? format_real(*spec.c) : std::string("none"));
  report.add("assumptions", std::string(spec.assumptions.complete ? "complete" : "not-complete") + ", " +
                                (spec.assumptions.closed_sets ? "closed sets" : "sets not closed") + " (declared)");
  report.add("seed", std::to_string(sampling.seed));
}

void describe_certificate(RunReport& report, const ContractionCertificate& cert) {
  report.section("certificate");
  report.add("mode", to_string(cert.mode));
  report.add("c", format_real(cert.c));
  report.add("result", cert.positive() ? "positive" : "negative");
  report.add("evidence", to_string(cert.evidence));
  report.add("pairs checked", static_cast<long long>(cert.pairs_checked));
  report.add("worst ratio", format_real(cert.worst_ratio));
  if (cert.counterexample) {
    const auto& w = *cert.counterexample;
    report.add("counterexample", "i=" + std::to_string(w.set_index) + " x=" + w.x.to_string() + " y=" + w.y.to_string() +
                                     " ratio=" + format_real(w.ratio));
  }
}

void describe_trace(RunReport& report, const IterationTrace& trace) {
  report.add("start", trace.start.to_string());
  report.add("fixed point", trace.fixed_point.to_string());
  report.add("termination", to_string(trace.termination));
  report.add("iterations", trace.iterations);
  report.add("a-priori bound", format_real(trace.a_priori_bound));
  report.add("a-posteriori bound", format_real(trace.a_posteriori_bound));
  report.add("residual", format_real(trace.residual));
  report.add("warnings", static_cast<long long>(trace.warnings.size()));
  for (const auto& w : trace.warnings) report.note("  warning: " + w);
}

void write_trace(std::ostream& out, const IterationTrace& trace) {
  for (const auto& step : trace.steps) {
    out << step.n << ' ' << step.set_index;
    if (step.point.is_labeled())
      out << ' ' << step.point.label();
    else
      for (double v : step.point.coords()) out << ' ' << format_real(v);
    out << ' ' << format_real(step.step_distance) << '\n';
  }
}

struct TraceFile {
  std::optional<std::ofstream> stream;

  explicit TraceFile(const std::optional<std::string>& path) {
    if (!path) return;
    stream.emplace(*path);
    if (!*stream) throw std::runtime_error("cannot write trace file '" + *path + "'");
    *stream << "# rcyclic trace v1\n# n set_index point step_distance\n";
  }

  void add(const std::string& header, const IterationTrace& trace) {
    if (!stream) return;
    if (!header.empty()) *stream << "# " << header << '\n';
    write_trace(*stream, trace);
  }
};

struct Refused : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ContractionCertificate obtain_certificate(const InstanceSpec& spec, Mode mode, const CertifyOptions& options,
                                          RunReport& report) {
  double c = 0.0;
  if (spec.c) {
    c = *spec.c;
    report.add("constant source", "declared");
  } else {
    ConstantEstimate est = [&] {
      try {
        return estimate_constant(spec.space, spec.covering, spec.map, spec.r, mode, options);
      } catch (const DegenerateInstanceError& e) {
        throw Refused(std::string("certificate refused: ") + e.what());
      }
    }();
    report.add("constant source", "estimated (" + std::string(to_string(est.evidence)) + ")");
    report.add("estimated ratio", format_real(est.ratio));
    if (!(est.ratio < 1.0))
      throw Refused("certificate refused: worst contraction ratio " + format_real(est.ratio) + " is not below 1 (i=" +
                    std::to_string(est.pair.set_index) + " x=" + est.pair.x.to_string() + " y=" + est.pair.y.to_string() + ")");
    c = est.ratio;
  }
  auto cert = certify(spec.space, spec.covering, spec.map, spec.r, mode, c, options);
  describe_certificate(report, cert);
  if (!cert.positive()) throw Refused("certificate refused: contraction inequality fails at c = " + format_real(c));
  return cert;
}

}  // namespace

int cmd_validate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  std::optional<InstanceSpec> spec;
  try {
    spec = load_instance_file(args.instance_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    RunReport report;
    describe_instance(report, *spec, args.sampling);

    const auto axioms = check_metric_axioms(spec->space, kAxiomSampleBudget, args.sampling.seed);
    report.section("metric");
    report.add("axioms", axioms.ok() ? "ok" : "violated");
    report.add("evidence", axioms.exhaustive ? "PROVED" : "SAMPLED");
    report.add("points checked", static_cast<long long>(axioms.points_checked));
    for (const auto& v : axioms.violations)
      report.note(std::string("  violation: ") + to_string(v.axiom) + " " + point_list(v.witness) + " (" +
                  format_real(v.lhs) + " vs " + format_real(v.rhs) + ")");

    const auto validation = validate_r_cyclic(spec->space, spec->covering, spec->map, spec->r, to_options(args.sampling));
    report.section("covering");
    report.add("r-cyclic", validation.passed ? "PASS" : "FAIL");
    report.add("evidence", to_string(validation.evidence));
    report.add("points checked", static_cast<long long>(validation.points_checked));
    if (validation.witness) {
      const auto& w = *validation.witness;
      report.add("witness", "(" + std::to_string(w.set_index) + ", " + w.x.to_string() + ", " + w.image.to_string() +
                                ")");
      report.note("  f(" + w.x.to_string() + ") = " + w.image.to_string() + " is not in X_" +
                  std::to_string(wrap_index(w.set_index + spec->r, spec->m())));
    }
    report.add("uncovered points", validation.uncovered.empty() ? "none" : point_list(validation.uncovered));
    std::string duplicates;
    for (const auto& [i, j] : validation.duplicate_sets)
      duplicates += (duplicates.empty() ? "" : ", ") + std::string("X_") + std::to_string(i) + " = X_" + std::to_string(j);
    report.add("identical sets", duplicates.empty() ? "none" : duplicates);

    const bool ok = axioms.ok() && validation.passed;
    report.section("result");
    report.add("status", ok ? "valid" : "invalid");
    out << report.render();
    return ok ? kSuccess : kNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

int cmd_decompose(const DecomposeArgs& args, std::ostream& out, std::ostream& err) {
  int m = 0;
  int r = 0;
  try {
    if (args.instance_path) {
      if (args.m || args.r) throw ArgumentError("give either an instance file or --m/--r, not both");
      const auto spec = load_instance_file(*args.instance_path);
      m = spec.m();
      r = spec.r;
    } else {
      if (!args.m || !args.r) throw ArgumentError("--m and --r are required without an instance file");
      m = *args.m;
      r = *args.r;
    }
    if (m < 2 || r < 1 || r > m) throw ArgumentError("need m >= 2 and 1 <= r <= m");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (r == m) {
    err << "error: no decomposition for r = m = " << m << ": every set is mapped into itself, so each X_i is "
        << "already invariant and circuits are not defined\n";
    return kNegative;
  }

  const auto dec = decompose(m, r);
  RunReport report;
  report.section("decomposition");
  report.add("m", m);
  report.add("r", r);
  report.add("k", dec.k);
  report.add("circuit length", m / dec.k);
  for (std::size_t j = 0; j < dec.circuits.size(); ++j)
    report.add("circuit " + std::to_string(j + 1), index_list(dec.circuits[j]));
  if (args.dot_path) {
    std::ofstream dot(*args.dot_path);
    if (!dot) {
      err << "error: cannot write '" << *args.dot_path << "'\n";
      return kUsage;
    }
    dot << emit_dot(dec);
    report.add("dot", *args.dot_path);
  }
  out << report.render();
  return kSuccess;
}

int cmd_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  const auto started = std::chrono::steady_clock::now();
  std::optional<InstanceSpec> spec;
  try {
    spec = load_instance_file(args.instance_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  RunReport report;
  int status = kSuccess;
  try {
    Mode mode = spec->mode;
    if (args.mode) {
      if (*args.mode == "sync")
        mode = Mode::Synchronous;
      else if (*args.mode == "async")
        mode = Mode::Asynchronous;
      else
        throw ArgumentError("--mode must be 'sync' or 'async'");
    }
    SolveOptions solve_options{args.eps, args.max_iter};
    if (!(args.eps > 0.0) || args.max_iter < 1) throw ArgumentError("--eps must be positive and --max-iter at least 1");
    const int m = spec->m();
    const int r = spec->r;
    if (r >= m) throw ArgumentError("solving needs 1 <= r < m");

    describe_instance(report, *spec, args.sampling);
    const CertifyOptions certify_options{to_options(args.sampling)};
    const auto validation = validate_r_cyclic(spec->space, spec->covering, spec->map, r, certify_options.sampling);
    report.section("validation");
    report.add("r-cyclic", validation.passed ? "PASS" : "FAIL");
    report.add("evidence", to_string(validation.evidence));
    if (!validation.passed) throw Refused("instance is not " + std::to_string(r) + "-cyclic");

    report.section("constant");
    const auto cert = obtain_certificate(*spec, mode, certify_options, report);
    TraceFile trace_file(args.trace_path);
    const int k = std::gcd(m, r);

    report.section("solve");
    report.add("mode", to_string(mode));
    report.add("k", k);
    report.add("eps", format_real(args.eps));
    report.add("max iterations", args.max_iter);
    if (mode == Mode::Synchronous && k == 1) {
      const Point x0 = args.x0 ? parse_point(*args.x0, spec->space) : default_start(spec->covering, 1);
      const auto trace = solve_synchronous(spec->space, spec->covering, spec->map, r, cert, x0, solve_options);
      report.add("solver", "synchronous (unique fixed point)");
      describe_trace(report, trace);
      trace_file.add("", trace);
      report.section("fixed points");
      report.add("count", trace.converged() ? 1 : 0);
      if (trace.converged()) report.add("fixed point 1", trace.fixed_point.to_string());
      status = trace.converged() ? kSuccess : kNegative;
    } else if (mode == Mode::Synchronous) {
      const auto dec = decompose(m, r);
      std::vector<Point> starts;
      if (args.starts)
        starts = parse_points(*args.starts, spec->space);
      else
        for (const auto& circuit : dec.circuits) starts.push_back(default_start(spec->covering, circuit.front()));
      const auto result = solve_synchronous_decomposed(spec->space, spec->covering, spec->map, r, cert, starts, solve_options);
      report.add("solver", "synchronous, decomposed into circuits");
      for (const auto& run : result.runs) {
        report.section("circuit " + std::to_string(run.circuit + 1));
        report.add("sets", index_list(result.decomposition.circuits[static_cast<std::size_t>(run.circuit)]));
        report.add("start set", run.start_set);
        describe_trace(report, run.trace);
        trace_file.add("circuit " + std::to_string(run.circuit + 1), run.trace);
      }
      report.section("fixed points");
      report.add("count", static_cast<long long>(result.partition.fixed_points.size()));
      for (std::size_t i = 0; i < result.partition.fixed_points.size(); ++i)
        report.add("fixed point " + std::to_string(i + 1), result.partition.fixed_points[i].to_string());
      std::string mapping;
      for (std::size_t j = 0; j < result.partition.circuit_fixed_point.size(); ++j) {
        const int fp = result.partition.circuit_fixed_point[j];
        mapping += (j ? ", " : "") + std::string("Y_") + std::to_string(j + 1) + " -> " +
                   (fp < 0 ? std::string("none") : std::to_string(fp + 1));
      }
      report.add("circuit fixed points", mapping);
      std::string overlaps;
      for (const auto& [a, b] : result.partition.overlapping_circuits)
        overlaps += (overlaps.empty() ? "" : ", ") + std::string("Y_") + std::to_string(a + 1) + "/Y_" + std::to_string(b + 1);
      report.add("overlapping circuits", (overlaps.empty() ? std::string("none") : overlaps) + " (" +
                                             to_string(result.partition.overlap_evidence) + ")");
      report.add("partition", result.partition.classification ? to_string(*result.partition.classification)
                                                              : "undetermined");
      status = result.all_converged() ? kSuccess : kNegative;
    } else {
      const int start_set = args.start_set.value_or(1);
      if (start_set < 1 || start_set > m) throw ArgumentError("--start-set must lie in [1, m]");
      std::vector<Point> starts;
      if (args.starts)
        starts = parse_points(*args.starts, spec->space);
      else
        for (int t = 0; t < r; ++t) starts.push_back(default_start(spec->covering, wrap_index(start_set + t, m)));
      const auto result = solve_asynchronous(spec->space, spec->covering, spec->map, r, cert, start_set, starts, solve_options);
      report.add("solver", "asynchronous, " + std::to_string(r) + " lockstep orbits");
      report.add("start set", start_set);
      for (std::size_t t = 0; t < result.orbits.size(); ++t) {
        report.section("orbit " + std::to_string(t));
        describe_trace(report, result.orbits[t]);
        trace_file.add("orbit " + std::to_string(t), result.orbits[t]);
      }
      report.section("fixed points");
      report.add("count", result.converged() ? 1 : 0);
      report.add("fixed point 1", result.fixed_point().to_string());
      report.add("limit spread", format_real(result.limit_spread));
      report.add("first residual iteration",
                 result.first_residual_iteration ? std::to_string(*result.first_residual_iteration) : "not reached");
      report.add("iteration bound", result.iteration_bound ? std::to_string(*result.iteration_bound) : "undefined");
      report.add("within iteration bound", result.within_iteration_bound() ? "yes" : "no");
      report.add("warnings", static_cast<long long>(result.warnings.size()));
      for (const auto& w : result.warnings) report.note("  warning: " + w);
      status = result.converged() ? kSuccess : kNegative;
    }
  } catch (const Refused& e) {
    out << report.render();
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CertificateInconsistencyError& e) {
    out << report.render();
    err << "error: certificate inconsistency: " << e.what() << '\n';
    return kNegative;
  } catch (const std::exception& e) {
    out << report.render();
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  report.section("result");
  report.add("status", status == kSuccess ? "converged" : "not converged");
  if (args.timing) {
    const auto elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    report.add("elapsed seconds", format_real(elapsed));
  }
  out << report.render();
  return status;
}

int cmd_group(const GroupArgs& args, std::ostream& out, std::ostream& err) {
  if (args.m < 2 || args.m > kMaxGroupOrder) {
    err << "error: --m must lie in [2, " << kMaxGroupOrder << "], got " << args.m << '\n';
    return kUsage;
  }
  const int m = args.m;
  const auto table = cayley_table(m);
  const int width = static_cast<int>(std::to_string(m).size()) + 1;
  out << "[cayley table]\n";
  out << "shift composition f_a o f_b = f_{wrap(a + b)}, m = " << m << "\n";
  out << std::setw(width) << "o" << " |";
  for (int b = 1; b <= m; ++b) {
    out << std::setw(width) << b;
  }
  out << '\n' << std::string(static_cast<std::size_t>(width + 2 + width * m), '-') << '\n';
  for (int a = 1; a <= m; ++a) {
    out << std::setw(width) << a << " |";
    for (int b = 1; b <= m; ++b) {
      out << std::setw(width) << table[static_cast<std::size_t>(a - 1)][static_cast<std::size_t>(b - 1)];
    }
    out << '\n';
  }

  const auto axioms = verify_group_axioms(m);
  RunReport report;
  report.section("group axioms");
  report.add("m", m);
  report.add("identity", "f_" + std::to_string(m));
  report.add("inverse", "f_r -> f_{m-r}");
  report.add("violations", static_cast<long long>(axioms.violations.size()));
  for (const auto& v : axioms.violations) report.note("  " + v.axiom + " " + index_list(v.elements));
  report.add("result", axioms.ok() ? "abelian group" : "not a group");
  out << '\n' << report.render();
  return axioms.ok() ? kSuccess : kNegative;
}

int cmd_generate(const GenerateArgs& args, std::ostream& out, std::ostream& err) {
  std::string text;
  try {
    if (args.family == "finite-shift")
      text = serialize(gen_finite_shift(args.m, args.r));
    else if (args.family == "sector-rotation")
      text = serialize(gen_sector_rotation(args.m, args.r, args.scale, args.disks));
    else
      throw ArgumentError("unknown family '" + args.family + "' (expected finite-shift or sector-rotation)");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (!args.output_path) {
    out << text;
    return kSuccess;
  }
  std::ofstream file(*args.output_path, std::ios::binary);
  if (!file) {
    err << "error: cannot write '" << *args.output_path << "'\n";
    return kUsage;
  }
  file << text;
  return kSuccess;
}

}  // namespace rcyclic::cli
