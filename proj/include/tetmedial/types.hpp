#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

namespace tetmedial {

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An edge length is zero, negative, or not finite.
struct NonPositiveLength : GeometryError {
  using GeometryError::GeometryError;
};

/// Three lengths violate the triangle inequality beyond tolerance.
struct NotATriangle : GeometryError {
  using GeometryError::GeometryError;
};

/// A medial-area radicand is negative beyond tolerance; the six lengths do
/// not belong to any tetrahedron.
struct NegativeRadicand : GeometryError {
  using GeometryError::GeometryError;
};

/// The canonical coordinate frame is ill-conditioned for this input
/// (flat tetrahedron or vanishing reference edge).
struct DegenerateFrame : GeometryError {
  using GeometryError::GeometryError;
};

/// The six lengths cannot be realized by any tetrahedron in 3-space.
struct NotRealizable : GeometryError {
  using GeometryError::GeometryError;
};

// ---------------------------------------------------------------------------
// Vectors
// ---------------------------------------------------------------------------

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  constexpr bool operator==(const Vec3& o) const = default;
};

using Point3 = Vec3;

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

constexpr double dot(const Vec3& u, const Vec3& v) {
  return u.x * v.x + u.y * v.y + u.z * v.z;
}

constexpr Vec3 cross(const Vec3& u, const Vec3& v) {
  return {u.y * v.z - u.z * v.y, u.z * v.x - u.x * v.z, u.x * v.y - u.y * v.x};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double distance(const Point3& p, const Point3& q) { return norm(p - q); }

constexpr Point3 midpoint(const Point3& p, const Point3& q) {
  return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y), 0.5 * (p.z + q.z)};
}

// ---------------------------------------------------------------------------
// Edge lengths
// ---------------------------------------------------------------------------

/// The six edge lengths of a tetrahedron P0 P1 P2 P3, labeled
///
///   a = |P0P1|   b = |P0P2|   c = |P2P3|
///   d = |P1P2|   e = |P0P3|   f = |P1P3|
///
/// Opposite (non-incident) pairs are exactly (d,e), (a,c), (b,f); the four
/// faces carry the edge triples {a,b,d}, {a,e,f}, {b,c,e}, {c,d,f}.
struct SixEdgeLengths {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double d = 0.0;
  double e = 0.0;
  double f = 0.0;

  constexpr std::array<double, 6> as_array() const { return {a, b, c, d, e, f}; }

  constexpr SixEdgeLengths scaled(double lambda) const {
    return {lambda * a, lambda * b, lambda * c, lambda * d, lambda * e, lambda * f};
  }

  /// Largest edge; the natural length unit for tolerance scaling.
  constexpr double max_edge() const {
    double m = a;
    for (double v : {b, c, d, e, f}) m = v > m ? v : m;
    return m;
  }

  constexpr bool operator==(const SixEdgeLengths& o) const = default;
};

/// Selects one of the three pairs of opposite edges.
enum class OppositePair { DE, AC, BF };

inline constexpr std::array<OppositePair, 3> kAllPairs = {
    OppositePair::DE, OppositePair::AC, OppositePair::BF};

constexpr const char* to_string(OppositePair pair) {
  switch (pair) {
    case OppositePair::DE: return "de";
    case OppositePair::AC: return "ac";
    case OppositePair::BF: return "bf";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Tolerances
// ---------------------------------------------------------------------------
// All clamp windows scale with the natural unit of the quantity they guard:
// the medial-area radicand carries length^4, the Cayley-Menger determinant
// length^6.

namespace tol {

/// Relative tolerance for formula-vs-oracle comparisons on well-conditioned
/// inputs.
inline constexpr double kCompareRel = 1e-9;

/// Relaxed comparison tolerance near degeneracy.
inline constexpr double kCompareRelDegenerate = 1e-6;

/// Coefficient of the clamp window for the medial-area radicand
/// (times max_edge^4) and the Cayley-Menger value (times max_edge^6).
inline constexpr double kClampRel = 1e-12;

/// Denominator floor when forming relative errors against a possibly zero
/// oracle value.
inline constexpr double kRelErrorFloor = 1e-30;

}  // namespace tol

}  // namespace tetmedial
