#pragma once

#include <array>

#include "tetmedial/types.hpp"

namespace tetmedial {

enum class Status { Realizable, Degenerate, NotRealizable };

constexpr const char* to_string(Status s) {
  switch (s) {
    case Status::Realizable: return "Realizable";
    case Status::Degenerate: return "Degenerate";
    case Status::NotRealizable: return "NotRealizable";
  }
  return "?";
}

/// Face edge triples in report order, as indices into
/// SixEdgeLengths::as_array() (a=0 .. f=5).
inline constexpr std::array<std::array<int, 3>, 4> kFaceTriples = {{
    {0, 1, 3},  // {a, b, d}
    {0, 4, 5},  // {a, e, f}
    {1, 2, 4},  // {b, c, e}
    {2, 3, 5},  // {c, d, f}
}};

inline constexpr std::array<const char*, 4> kFaceKeys = {"abd", "aef", "bce", "cdf"};

/// Outcome of checking whether six lengths belong to an actual tetrahedron.
struct RealizabilityReport {
  /// Strict triangle inequality per face, in kFaceTriples order.
  std::array<bool, 4> face_ok = {false, false, false, false};
  /// 5x5 Cayley-Menger determinant of the squared lengths (length^6 units).
  double cm_value = 0.0;
  /// sqrt(cm_value / 288); NaN when cm_value < -tolerance, 0 when flat.
  double volume = 0.0;
  Status status = Status::NotRealizable;

  bool all_faces_ok() const {
    return face_ok[0] && face_ok[1] && face_ok[2] && face_ok[3];
  }
};

/// The canonical coordinate placement: apex P0 on the positive z-axis, base
/// in the xy-plane with edge d parallel to the y-axis.
///
///   P0 = (0, 0, z)   P1 = (x, y, 0)   P2 = (x, y+d, 0)   P3 = (xi, upsilon, 0)
struct EmbeddedTet {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  double xi = 0.0;
  double upsilon = 0.0;
  SixEdgeLengths lengths;

  std::array<Point3, 4> vertices() const {
    return {Point3{0.0, 0.0, z}, Point3{x, y, 0.0}, Point3{x, y + lengths.d, 0.0},
            Point3{xi, upsilon, 0.0}};
  }
};

/// The parallelogram whose vertices are the midpoints of the four edges not
/// in the chosen opposite pair. Vertices are in cyclic order; consecutive
/// vertices are midpoints of edges sharing a face. The parallelogram is
/// spanned by u and v from vertices[3]: vertices[0] = vertices[3] + v and
/// vertices[2] = vertices[3] + u.
struct MedialParallelogram {
  std::array<Point3, 4> vertices;
  Vec3 u;  // half of one chosen edge
  Vec3 v;  // half of the other chosen edge, reversed

  Point3 center() const {
    return {0.25 * (vertices[0].x + vertices[1].x + vertices[2].x + vertices[3].x),
            0.25 * (vertices[0].y + vertices[1].y + vertices[2].y + vertices[3].y),
            0.25 * (vertices[0].z + vertices[1].z + vertices[2].z + vertices[3].z)};
  }
};

/// Medial areas for the three opposite pairs.
struct MedialAreas {
  double de = 0.0;
  double ac = 0.0;
  double bf = 0.0;

  double operator[](OppositePair pair) const {
    switch (pair) {
      case OppositePair::DE: return de;
      case OppositePair::AC: return ac;
      case OppositePair::BF: return bf;
    }
    return 0.0;
  }
};

/// Checks positivity, the four face triangle inequalities, and the
/// Cayley-Menger determinant. Throws NonPositiveLength for zero, negative,
/// or non-finite inputs; every other outcome is data in the report.
RealizabilityReport validate_edge_lengths(const SixEdgeLengths& lengths);

/// Triangle area from three side lengths, evaluated in the ordered
/// cancellation-safe form. Degenerate triples within tolerance give 0;
/// worse violations throw NotATriangle.
double heron_face_area(double l1, double l2, double l3);

/// Areas of the four faces in kFaceTriples order.
std::array<double, 4> face_areas(const SixEdgeLengths& lengths);

/// Closed-form medial parallelogram area for the chosen pair:
///
///   area(d,e) = (1/8) * sqrt(4 d^2 e^2 - ((b^2+f^2) - (a^2+c^2))^2)
///
/// and the label-permuted analogues for (a,c) and (b,f). Radicands within
/// the clamp window below zero are treated as 0; anything lower throws
/// NegativeRadicand.
double medial_area(const SixEdgeLengths& lengths, OppositePair pair);

/// medial_area for all three pairs.
MedialAreas medial_area_all(const SixEdgeLengths& lengths);

/// Cosine of the angle between the lines carrying the chosen opposite pair,
/// |bracket| / (2 * product), clamped into [0, 1]. The medial area equals
/// (product/4) * sqrt(1 - cos^2).
double opposite_edge_cosine(const SixEdgeLengths& lengths, OppositePair pair);

/// Solves the canonical coordinates from the six lengths. Requires a
/// strictly positive volume; flat inputs throw DegenerateFrame and
/// unrealizable ones NotRealizable. Sign conventions: z > 0 and
/// x - xi = +sqrt(f^2 - (y-upsilon)^2).
EmbeddedTet embed_canonical(const SixEdgeLengths& lengths);

/// Midpoint parallelogram of the four non-chosen edges of an embedded
/// tetrahedron.
MedialParallelogram medial_parallelogram(const EmbeddedTet& embedded, OppositePair pair);

/// Tetrahedron volume via the Cayley-Menger determinant, sqrt(CM/288).
/// CM values within the clamp window below zero count as 0; anything lower
/// throws NotRealizable.
double cayley_menger_volume(const SixEdgeLengths& lengths);

namespace detail {

/// The 5x5 bordered Cayley-Menger determinant of the squared lengths.
double cayley_menger_value(const SixEdgeLengths& lengths);

/// Chosen pair product p*q and the bracket whose square completes the
/// radicand, grouped so that every label swap fixing the pair is bitwise
/// neutral: bracket(d,e) = (b^2+f^2) - (a^2+c^2), etc.
struct PairTerms {
  double product;   // p * q
  double bracket;   // difference of the two non-chosen opposite-pair square sums
  double radicand;  // 4 p^2 q^2 - bracket^2
};
PairTerms pair_terms(const SixEdgeLengths& lengths, OppositePair pair);

}  // namespace detail

}  // namespace tetmedial
