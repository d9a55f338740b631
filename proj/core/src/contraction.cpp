#include "rcyclic/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "rcyclic/errors.hpp"

namespace rcyclic {

namespace {

void require_contraction_shift(int r, int m) {
  if (r < 1 || r >= m)
    throw ArgumentError("contraction conditions need 1 <= r < m, got r = " + std::to_string(r) +
                        ", m = " + std::to_string(m));
}

struct EvidenceSet {
  std::vector<Point> points;
  std::vector<Point> images;
};

// Calls visit(i, x, y, fx, fy) for every admissible pair in canonical order
// (set index, then x, then y). Returns the number of pairs visited.
template <class Visit>
std::size_t for_each_pair(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r, Mode mode,
                          const CertifyOptions& options, Visit&& visit) {
  const int m = cov.m();
  std::vector<EvidenceSet> sets(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    auto& s = sets[static_cast<std::size_t>(i - 1)];
    s.points = cov.evidence_points(i, options.sampling);
    s.images.reserve(s.points.size());
    for (const auto& x : s.points) s.images.push_back(f(x));
  }

  const bool exhaustive = space.is_finite() && cov.is_finite();
  const std::size_t per_set_pair = std::max<std::size_t>(1, options.pair_budget / static_cast<std::size_t>(m));
  const int offset = pair_offset(mode, r);
  std::size_t visited = 0;
  for (int i = 1; i <= m; ++i) {
    const auto& a = sets[static_cast<std::size_t>(i - 1)];
    const auto& b = sets[static_cast<std::size_t>(wrap_index(i + offset, m) - 1)];
    const std::size_t total = a.points.size() * b.points.size();
    const std::size_t stride =
        exhaustive || total <= per_set_pair ? 1 : (total + per_set_pair - 1) / per_set_pair;
    for (std::size_t flat = 0; flat < total; flat += stride) {
      const std::size_t xi = flat / b.points.size();
      const std::size_t yi = flat % b.points.size();
      ++visited;
      visit(i, a.points[xi], b.points[yi], a.images[xi], b.images[yi]);
    }
  }
  return visited;
}

void require_r_cyclic(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                      const SamplingOptions& sampling) {
  const auto report = validate_r_cyclic(space, cov, f, r, sampling);
  if (!report.passed) {
    std::string why = report.witness ? "f(" + report.witness->x.to_string() + ") = " +
                                           report.witness->image.to_string() + " leaves X_" +
                                           std::to_string(wrap_index(report.witness->set_index + r, cov.m()))
                                     : std::string("the sets do not cover the space");
    throw PreconditionError("f is not " + std::to_string(r) + "-cyclic on the covering: " + why);
  }
}

}  // namespace

const char* to_string(Mode mode) { return mode == Mode::Synchronous ? "synchronous" : "asynchronous"; }

int pair_offset(Mode mode, int r) { return mode == Mode::Synchronous ? r : 1; }

ContractionCertificate certify(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                               Mode mode, double c, const CertifyOptions& options) {
  if (!(c >= 0.0 && c < 1.0)) throw ArgumentError("contraction constant must lie in [0, 1), got " + format_real(c));
  require_contraction_shift(r, cov.m());
  require_r_cyclic(space, cov, f, r, options.sampling);

  ContractionCertificate cert;
  cert.mode = mode;
  cert.r = r;
  cert.c = c;
  cert.evidence = space.is_finite() && cov.is_finite() ? Evidence::Proved : Evidence::Sampled;
  cert.seed = options.sampling.seed;
  cert.pairs_checked = for_each_pair(space, cov, f, r, mode, options,
                                     [&](int i, const Point& x, const Point& y, const Point& fx, const Point& fy) {
                                       const double d = space.distance(x, y);
                                       const double df = space.distance(fx, fy);
                                       if (d > kCoincidenceDistance) cert.worst_ratio = std::max(cert.worst_ratio, df / d);
                                       if (!cert.counterexample && df > c * d + contraction_tolerance(d))
                                         cert.counterexample = PairWitness{i, x, y, df, d, d > 0.0 ? df / d : INFINITY};
                                     });
  return cert;
}

ConstantEstimate estimate_constant(const MetricSpace& space, const CyclicCovering& cov, const SelfMap& f, int r,
                                   Mode mode, const CertifyOptions& options) {
  require_contraction_shift(r, cov.m());
  require_r_cyclic(space, cov, f, r, options.sampling);

  std::optional<PairWitness> best;
  const std::size_t pairs = for_each_pair(space, cov, f, r, mode, options,
                                          [&](int i, const Point& x, const Point& y, const Point& fx, const Point& fy) {
                                            const double d = space.distance(x, y);
                                            if (d <= kCoincidenceDistance) return;
                                            const double df = space.distance(fx, fy);
                                            const double ratio = df / d;
                                            if (!best || ratio > best->ratio) best = PairWitness{i, x, y, df, d, ratio};
                                          });
  if (!best) throw DegenerateInstanceError("every admissible pair is coincident, so no ratio is defined");
  return ConstantEstimate{best->ratio, *best,
                          space.is_finite() && cov.is_finite() ? Evidence::Proved : Evidence::Sampled, pairs,
                          options.sampling.seed};
}

}  // namespace rcyclic
