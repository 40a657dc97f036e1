#pragma once

#include <cstdint>
#include <vector>

#include "tetmedial/geometry.hpp"
#include "tetmedial/types.hpp"

namespace tetmedial::oracle {

/// Retry budget exhausted while rejection-sampling a well-conditioned
/// tetrahedron; statistically unreachable with the default volume floor.
struct ResamplingExhausted : GeometryError {
  using GeometryError::GeometryError;
};

/// Four vertices with roles matching the edge labeling: p0 is the apex
/// incident to a, b, e.
struct FourPoints {
  Point3 p0, p1, p2, p3;

  constexpr bool operator==(const FourPoints&) const = default;
};

/// Deterministic 64-bit generator state (splitmix64). Advancing is explicit;
/// the same seed yields the same sequence on every platform because the
/// update is pure integer arithmetic.
struct RngState {
  std::uint64_t state = 0;
};

std::uint64_t next_u64(RngState& rng);

/// Uniform double in [0, 1), 53 mantissa bits.
double next_unit(RngState& rng);

/// Uniform double in [-bounds, bounds).
double next_symmetric(RngState& rng, double bounds);

/// One formula-vs-oracle comparison.
struct ComparisonRecord {
  SixEdgeLengths lengths;
  OppositePair pair = OppositePair::DE;
  double formula_area = 0.0;
  double oracle_area = 0.0;
  double rel_error = 0.0;  // |formula - oracle| / max(oracle, floor)
  bool pass = false;
};

struct SweepSummary {
  std::uint64_t seed = 0;
  int count = 0;        // tetrahedra sampled
  int comparisons = 0;  // 3 per tetrahedron
  double bounds = 0.0;
  double tolerance = 0.0;
  double max_rel_error = 0.0;
  std::vector<ComparisonRecord> failures;

  bool operator==(const SweepSummary&) const;
};

/// Coordinate volume |det(p1-p0, p2-p0, p3-p0)| / 6.
double point_volume(const FourPoints& points);

/// Trilateration embedding, independent of the canonical frame: p1 at the
/// origin, p2 at (0,d,0), p3 in the xy-plane with positive x, p0 with z >= 0.
/// Throws NotRealizable when a face triple or the Cayley-Menger determinant
/// rules the lengths out.
FourPoints embed_reference(const SixEdgeLengths& lengths);

/// The six pairwise distances under the fixed labeling.
SixEdgeLengths edge_lengths_of(const FourPoints& points);

/// Coordinate-based medial area: midpoints of the four non-chosen edges,
/// cross product of two adjacent side vectors. Works in any frame and never
/// throws; degenerate input returns a degenerate area.
double direct_medial_area(const FourPoints& points, OppositePair pair);

/// Four points uniform in [-bounds, bounds]^3, resampled until the
/// coordinate volume exceeds 1e-3 * bounds^3. Advances rng in place.
FourPoints random_tetrahedron(RngState& rng, double bounds);

/// Closed-form medial_area vs direct_medial_area on the reference embedding.
ComparisonRecord compare_formula_vs_oracle(const SixEdgeLengths& lengths,
                                           OppositePair pair, double tolerance);

/// n random tetrahedra, all three pairs compared each. Deterministic in
/// (seed, n, bounds); failures are collected, not thrown.
SweepSummary run_sweep(std::uint64_t seed, int n, double bounds, double tolerance);

}  // namespace tetmedial::oracle
