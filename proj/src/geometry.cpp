#include "tetmedial/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace tetmedial {

namespace {

constexpr std::array<const char*, 6> kEdgeNames = {"a", "b", "c", "d", "e", "f"};

void require_positive_finite(const SixEdgeLengths& lengths) {
  const auto values = lengths.as_array();
  for (int i = 0; i < 6; ++i) {
    if (!(std::isfinite(values[i]) && values[i] > 0.0)) {
      throw NonPositiveLength("edge " + std::string(kEdgeNames[i]) + " = " +
                              std::to_string(values[i]) + " must be a positive finite length");
    }
  }
}

// 5x5 determinant by Gaussian elimination with partial pivoting.
double det5(std::array<std::array<double, 5>, 5> m) {
  double det = 1.0;
  for (int col = 0; col < 5; ++col) {
    int pivot = col;
    for (int row = col + 1; row < 5; ++row) {
      if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
    }
    if (m[pivot][col] == 0.0) return 0.0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < 5; ++row) {
      const double factor = m[row][col] / m[col][col];
      for (int k = col; k < 5; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace

namespace detail {

double cayley_menger_value(const SixEdgeLengths& lengths) {
  const double aa = lengths.a * lengths.a;
  const double bb = lengths.b * lengths.b;
  const double cc = lengths.c * lengths.c;
  const double dd = lengths.d * lengths.d;
  const double ee = lengths.e * lengths.e;
  const double ff = lengths.f * lengths.f;
  // Bordered matrix over vertices P0..P3: entry (i+1, j+1) is |PiPj|^2.
  return det5({{
      {0.0, 1.0, 1.0, 1.0, 1.0},
      {1.0, 0.0, aa, bb, ee},
      {1.0, aa, 0.0, dd, ff},
      {1.0, bb, dd, 0.0, cc},
      {1.0, ee, ff, cc, 0.0},
  }});
}

PairTerms pair_terms(const SixEdgeLengths& lengths, OppositePair pair) {
  const double aa = lengths.a * lengths.a;
  const double bb = lengths.b * lengths.b;
  const double cc = lengths.c * lengths.c;
  const double dd = lengths.d * lengths.d;
  const double ee = lengths.e * lengths.e;
  const double ff = lengths.f * lengths.f;
  PairTerms t{};
  double p2q2 = 0.0;
  switch (pair) {
    case OppositePair::DE:
      t.product = lengths.d * lengths.e;
      t.bracket = (bb + ff) - (aa + cc);
      p2q2 = dd * ee;
      break;
    case OppositePair::AC:
      t.product = lengths.a * lengths.c;
      t.bracket = (bb + ff) - (dd + ee);
      p2q2 = aa * cc;
      break;
    case OppositePair::BF:
      t.product = lengths.b * lengths.f;
      t.bracket = (aa + cc) - (dd + ee);
      p2q2 = bb * ff;
      break;
  }
  t.radicand = 4.0 * p2q2 - t.bracket * t.bracket;
  return t;
}

}  // namespace detail

RealizabilityReport validate_edge_lengths(const SixEdgeLengths& lengths) {
  require_positive_finite(lengths);

  RealizabilityReport report;
  const auto values = lengths.as_array();
  for (int i = 0; i < 4; ++i) {
    const auto& [u, v, w] = kFaceTriples[i];
    report.face_ok[i] = values[u] + values[v] > values[w] &&
                        values[u] + values[w] > values[v] &&
                        values[v] + values[w] > values[u];
  }

  report.cm_value = detail::cayley_menger_value(lengths);
  const double scale = lengths.max_edge();
  const double tol_degenerate = tol::kClampRel * std::pow(scale, 6);

  if (report.cm_value >= -tol_degenerate) {
    report.volume = std::sqrt(std::max(report.cm_value, 0.0) / 288.0);
  } else {
    report.volume = std::numeric_limits<double>::quiet_NaN();
  }

  if (!report.all_faces_ok()) {
    report.status = Status::NotRealizable;
  } else if (report.cm_value > tol_degenerate) {
    report.status = Status::Realizable;
  } else if (report.cm_value >= -tol_degenerate) {
    report.status = Status::Degenerate;
  } else {
    report.status = Status::NotRealizable;
  }
  return report;
}

double heron_face_area(double l1, double l2, double l3) {
  for (double v : {l1, l2, l3}) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw NonPositiveLength("side " + std::to_string(v) + " must be a positive finite length");
    }
  }
  // Kahan's ordered form: with x >= y >= z the factor z - (x - y) carries
  // the whole cancellation risk and is computed directly.
  double x = l1, y = l2, z = l3;
  if (x < y) std::swap(x, y);
  if (y < z) std::swap(y, z);
  if (x < y) std::swap(x, y);

  const double deficit = z - (x - y);
  if (deficit <= 0.0) {
    if (deficit < -tol::kClampRel * x) {
      throw NotATriangle("sides (" + std::to_string(l1) + ", " + std::to_string(l2) + ", " +
                         std::to_string(l3) + ") violate the triangle inequality");
    }
    return 0.0;
  }
  return 0.25 * std::sqrt((x + (y + z)) * deficit * (z + (x - y)) * (x + (y - z)));
}

std::array<double, 4> face_areas(const SixEdgeLengths& lengths) {
  const auto values = lengths.as_array();
  std::array<double, 4> areas{};
  for (int i = 0; i < 4; ++i) {
    const auto& [u, v, w] = kFaceTriples[i];
    areas[i] = heron_face_area(values[u], values[v], values[w]);
  }
  return areas;
}

double medial_area(const SixEdgeLengths& lengths, OppositePair pair) {
  require_positive_finite(lengths);
  const auto terms = detail::pair_terms(lengths, pair);
  double radicand = terms.radicand;
  if (radicand < 0.0) {
    const double scale = lengths.max_edge();
    if (radicand < -tol::kClampRel * std::pow(scale, 4)) {
      throw NegativeRadicand("pair " + std::string(to_string(pair)) + ": radicand " +
                             std::to_string(radicand) +
                             " is negative; lengths are not realizable");
    }
    radicand = 0.0;
  }
  return 0.125 * std::sqrt(radicand);
}

MedialAreas medial_area_all(const SixEdgeLengths& lengths) {
  return {medial_area(lengths, OppositePair::DE), medial_area(lengths, OppositePair::AC),
          medial_area(lengths, OppositePair::BF)};
}

double opposite_edge_cosine(const SixEdgeLengths& lengths, OppositePair pair) {
  require_positive_finite(lengths);
  const auto terms = detail::pair_terms(lengths, pair);
  if (terms.radicand < 0.0) {
    // cos > 1 and the radicand going negative are the same condition; use
    // the same backstop as medial_area so the two operations agree.
    const double scale = lengths.max_edge();
    if (terms.radicand < -tol::kClampRel * std::pow(scale, 4)) {
      throw NegativeRadicand("pair " + std::string(to_string(pair)) +
                             ": |cosine| exceeds 1; lengths are not realizable");
    }
    return 1.0;
  }
  return std::min(std::abs(terms.bracket) / (2.0 * terms.product), 1.0);
}

EmbeddedTet embed_canonical(const SixEdgeLengths& lengths) {
  const auto report = validate_edge_lengths(lengths);
  if (report.status == Status::NotRealizable) {
    throw NotRealizable("lengths are not realizable; no embedding exists");
  }
  if (report.status == Status::Degenerate) {
    throw DegenerateFrame("flat tetrahedron: the canonical frame needs z > 0");
  }

  const double scale = lengths.max_edge();
  if (lengths.d <= tol::kClampRel * scale) {
    throw DegenerateFrame("edge d is too short to anchor the frame");
  }

  const double aa = lengths.a * lengths.a;
  const double bb = lengths.b * lengths.b;
  const double cc = lengths.c * lengths.c;
  const double ee = lengths.e * lengths.e;
  const double ff = lengths.f * lengths.f;
  const double dd = lengths.d * lengths.d;

  EmbeddedTet tet;
  tet.lengths = lengths;
  tet.y = (bb - aa - dd) / (2.0 * lengths.d);
  tet.upsilon = ((bb + ff) - (aa + cc)) / (2.0 * lengths.d);

  // Residual system in (x, xi, z):
  //   x^2  + z^2 = a^2 - y^2        =: ca
  //   xi^2 + z^2 = e^2 - upsilon^2  =: ce
  //   (x - xi)^2 = f^2 - (y - upsilon)^2 =: cf
  const double ca = aa - tet.y * tet.y;
  const double ce = ee - tet.upsilon * tet.upsilon;
  const double dy = tet.y - tet.upsilon;
  const double cf = ff - dy * dy;
  if (cf <= tol::kClampRel * scale * scale) {
    // The base triangle collapses onto the frame's y-line; a positive-volume
    // input never lands here.
    throw DegenerateFrame("base triangle is collinear in the canonical frame");
  }

  const double gap = std::sqrt(cf);  // x - xi, positive root
  tet.x = (cf + (ca - ce)) / (2.0 * gap);
  tet.xi = ((ca - ce) - cf) / (2.0 * gap);

  const double zz = ca - tet.x * tet.x;
  if (zz <= 1e-14 * scale * scale) {
    throw DegenerateFrame("apex height vanishes: the tetrahedron is numerically flat");
  }
  tet.z = std::sqrt(zz);
  return tet;
}

MedialParallelogram medial_parallelogram(const EmbeddedTet& embedded, OppositePair pair) {
  const auto p = embedded.vertices();
  const Point3& p0 = p[0];
  const Point3& p1 = p[1];
  const Point3& p2 = p[2];
  const Point3& p3 = p[3];

  // Midpoints of the four non-chosen edges, cyclically ordered so that
  // consecutive vertices are midpoints of edges sharing a face.
  MedialParallelogram mp;
  switch (pair) {
    case OppositePair::DE:
      mp.vertices = {midpoint(p0, p1), midpoint(p0, p2), midpoint(p2, p3), midpoint(p1, p3)};
      break;
    case OppositePair::AC:
      mp.vertices = {midpoint(p0, p2), midpoint(p1, p2), midpoint(p1, p3), midpoint(p0, p3)};
      break;
    case OppositePair::BF:
      mp.vertices = {midpoint(p0, p1), midpoint(p1, p2), midpoint(p2, p3), midpoint(p0, p3)};
      break;
  }
  mp.u = mp.vertices[1] - mp.vertices[0];
  mp.v = mp.vertices[0] - mp.vertices[3];
  return mp;
}

double cayley_menger_volume(const SixEdgeLengths& lengths) {
  require_positive_finite(lengths);
  const double cm = detail::cayley_menger_value(lengths);
  const double scale = lengths.max_edge();
  if (cm < -tol::kClampRel * std::pow(scale, 6)) {
    throw NotRealizable("Cayley-Menger determinant " + std::to_string(cm) + " is negative");
  }
  return std::sqrt(std::max(cm, 0.0) / 288.0);
}

}  // namespace tetmedial
