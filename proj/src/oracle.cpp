#include "tetmedial/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace tetmedial::oracle {

namespace {

constexpr int kResampleBudget = 10000;
constexpr double kVolumeFloorRel = 1e-3;

double clamped_sqrt(double value) { return std::sqrt(std::max(value, 0.0)); }

}  // namespace

bool SweepSummary::operator==(const SweepSummary& o) const {
  if (seed != o.seed || count != o.count || comparisons != o.comparisons ||
      bounds != o.bounds || tolerance != o.tolerance ||
      max_rel_error != o.max_rel_error || failures.size() != o.failures.size()) {
    return false;
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    const auto& l = failures[i];
    const auto& r = o.failures[i];
    if (!(l.lengths == r.lengths && l.pair == r.pair &&
          l.formula_area == r.formula_area && l.oracle_area == r.oracle_area &&
          l.rel_error == r.rel_error && l.pass == r.pass)) {
      return false;
    }
  }
  return true;
}

// splitmix64 (Steele, Lea, Flood 2014); reimplemented locally so sweeps
// reproduce bit-for-bit on every platform.
std::uint64_t next_u64(RngState& rng) {
  rng.state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = rng.state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double next_unit(RngState& rng) {
  return static_cast<double>(next_u64(rng) >> 11) * 0x1.0p-53;
}

double next_symmetric(RngState& rng, double bounds) {
  return bounds * (2.0 * next_unit(rng) - 1.0);
}

double point_volume(const FourPoints& points) {
  const Vec3 u = points.p1 - points.p0;
  const Vec3 v = points.p2 - points.p0;
  const Vec3 w = points.p3 - points.p0;
  return std::abs(dot(cross(u, v), w)) / 6.0;
}

FourPoints embed_reference(const SixEdgeLengths& lengths) {
  const auto report = validate_edge_lengths(lengths);
  if (report.status == Status::NotRealizable) {
    throw NotRealizable("lengths are not realizable; no embedding exists");
  }

  const double aa = lengths.a * lengths.a;
  const double bb = lengths.b * lengths.b;
  const double cc = lengths.c * lengths.c;
  const double dd = lengths.d * lengths.d;
  const double ee = lengths.e * lengths.e;
  const double ff = lengths.f * lengths.f;
  const double d = lengths.d;

  FourPoints pts;
  pts.p1 = {0.0, 0.0, 0.0};
  pts.p2 = {0.0, d, 0.0};

  // Base triangle p1 p2 p3 by trilateration; x > 0 by convention.
  const double p3y = (ff - cc + dd) / (2.0 * d);
  const double p3x = clamped_sqrt(ff - p3y * p3y);
  pts.p3 = {p3x, p3y, 0.0};

  // Apex from its three distances; z >= 0 by convention.
  const double p0y = (aa - bb + dd) / (2.0 * d);
  const double p0x = (aa + ff - ee - 2.0 * p0y * p3y) / (2.0 * p3x);
  const double p0z = clamped_sqrt(aa - p0x * p0x - p0y * p0y);
  pts.p0 = {p0x, p0y, p0z};
  return pts;
}

SixEdgeLengths edge_lengths_of(const FourPoints& points) {
  return {distance(points.p0, points.p1), distance(points.p0, points.p2),
          distance(points.p2, points.p3), distance(points.p1, points.p2),
          distance(points.p0, points.p3), distance(points.p1, points.p3)};
}

double direct_medial_area(const FourPoints& points, OppositePair pair) {
  // One midpoint plus its two neighbours along the parallelogram boundary.
  Point3 corner, adj1, adj2;
  switch (pair) {
    case OppositePair::DE:
      corner = midpoint(points.p0, points.p1);
      adj1 = midpoint(points.p0, points.p2);
      adj2 = midpoint(points.p1, points.p3);
      break;
    case OppositePair::AC:
      corner = midpoint(points.p0, points.p2);
      adj1 = midpoint(points.p1, points.p2);
      adj2 = midpoint(points.p0, points.p3);
      break;
    case OppositePair::BF:
      corner = midpoint(points.p0, points.p1);
      adj1 = midpoint(points.p1, points.p2);
      adj2 = midpoint(points.p0, points.p3);
      break;
  }
  return norm(cross(adj1 - corner, adj2 - corner));
}

FourPoints random_tetrahedron(RngState& rng, double bounds) {
  if (!(bounds > 0.0)) {
    throw GeometryError("bounds must be positive");
  }
  const double floor = kVolumeFloorRel * bounds * bounds * bounds;
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    FourPoints pts;
    for (Point3* p : {&pts.p0, &pts.p1, &pts.p2, &pts.p3}) {
      p->x = next_symmetric(rng, bounds);
      p->y = next_symmetric(rng, bounds);
      p->z = next_symmetric(rng, bounds);
    }
    if (point_volume(pts) > floor) return pts;
  }
  throw ResamplingExhausted("no tetrahedron above the volume floor after " +
                            std::to_string(kResampleBudget) + " attempts");
}

ComparisonRecord compare_formula_vs_oracle(const SixEdgeLengths& lengths,
                                           OppositePair pair, double tolerance) {
  ComparisonRecord record;
  record.lengths = lengths;
  record.pair = pair;
  // Embed first: realizability failures surface as NotRealizable before the
  // formula's radicand backstop can fire.
  record.oracle_area = direct_medial_area(embed_reference(lengths), pair);
  record.formula_area = medial_area(lengths, pair);
  record.rel_error = std::abs(record.formula_area - record.oracle_area) /
                     std::max(record.oracle_area, tol::kRelErrorFloor);
  record.pass = record.rel_error <= tolerance;
  return record;
}

SweepSummary run_sweep(std::uint64_t seed, int n, double bounds, double tolerance) {
  if (n < 1) {
    throw GeometryError("sweep size must be at least 1");
  }
  SweepSummary summary;
  summary.seed = seed;
  summary.count = n;
  summary.bounds = bounds;
  summary.tolerance = tolerance;

  RngState rng{seed};
  for (int i = 0; i < n; ++i) {
    const FourPoints pts = random_tetrahedron(rng, bounds);
    const SixEdgeLengths lengths = edge_lengths_of(pts);
    for (OppositePair pair : kAllPairs) {
      const ComparisonRecord record = compare_formula_vs_oracle(lengths, pair, tolerance);
      summary.max_rel_error = std::max(summary.max_rel_error, record.rel_error);
      if (!record.pass) summary.failures.push_back(record);
      ++summary.comparisons;
    }
  }
  return summary;
}

}  // namespace tetmedial::oracle
