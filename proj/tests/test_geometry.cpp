#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>

#include "doctest.h"
#include "tetmedial/geometry.hpp"
#include "tetmedial/oracle.hpp"

using namespace tetmedial;

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kSqrt3 = std::sqrt(3.0);

const SixEdgeLengths kRegular{1, 1, 1, 1, 1, 1};
// Corner tetrahedron P1=(0,0,0), P2=(0,1,0), P3=(1,0,0), P0=(0,0,1).
const SixEdgeLengths kCorner{1, kSqrt2, kSqrt2, 1, kSqrt2, 1};
// Skew example P1=(0,0,0), P2=(1,0,0), P3=(1,1,0), P0=(0,0,1).
const SixEdgeLengths kSkew{1, kSqrt2, 1, 1, kSqrt3, kSqrt2};
// Flat example from coplanar P1=(0,0,0), P2=(0,1,0), P3=(1,0,0), P0=(1,1,0).
const SixEdgeLengths kFlat{kSqrt2, 1, kSqrt2, 1, 1, 1};

doctest::Approx near(double value, double rel = 1e-12) {
  return doctest::Approx(value).epsilon(rel);
}

// Test-only oracle: 5x5 determinant by Leibniz expansion over all 120
// permutations, independent of the elimination used by the library.
double det5_leibniz(const std::array<std::array<double, 5>, 5>& m) {
  std::array<int, 5> perm = {0, 1, 2, 3, 4};
  double total = 0.0;
  // Heap's algorithm, tracking parity.
  std::array<int, 5> counters = {0, 0, 0, 0, 0};
  int sign = 1;
  auto add_term = [&]() {
    double term = sign;
    for (int i = 0; i < 5; ++i) term *= m[i][perm[i]];
    total += term;
  };
  add_term();
  int i = 0;
  while (i < 5) {
    if (counters[i] < i) {
      std::swap(perm[i % 2 == 0 ? 0 : counters[i]], perm[i]);
      sign = -sign;
      add_term();
      ++counters[i];
      i = 0;
    } else {
      counters[i] = 0;
      ++i;
    }
  }
  return total;
}

double cm_leibniz(const SixEdgeLengths& l) {
  const double aa = l.a * l.a, bb = l.b * l.b, cc = l.c * l.c;
  const double dd = l.d * l.d, ee = l.e * l.e, ff = l.f * l.f;
  return det5_leibniz({{
      {0, 1, 1, 1, 1},
      {1, 0, aa, bb, ee},
      {1, aa, 0, dd, ff},
      {1, bb, dd, 0, cc},
      {1, ee, ff, cc, 0},
  }});
}

}  // namespace

TEST_CASE("heron_face_area on known triangles") {
  CHECK(heron_face_area(1, 1, 1) == near(0.4330127018922193));
  CHECK(heron_face_area(3, 4, 5) == near(6.0));
  CHECK(heron_face_area(1, 1, 2) == 0.0);  // collinear
  CHECK(heron_face_area(2, 1, 1) == 0.0);
  CHECK_THROWS_AS(heron_face_area(1, 1, 10), NotATriangle);
  CHECK_THROWS_AS(heron_face_area(0, 1, 1), NonPositiveLength);
  CHECK_THROWS_AS(heron_face_area(-1, 2, 2), NonPositiveLength);
  CHECK_THROWS_AS(heron_face_area(1, std::nan(""), 1), NonPositiveLength);
}

TEST_CASE("heron_face_area is permutation invariant bit for bit") {
  const double sides[3] = {0.31, 0.47, 0.64999};
  const double reference = heron_face_area(sides[0], sides[1], sides[2]);
  const int orders[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& o : orders) {
    CHECK(heron_face_area(sides[o[0]], sides[o[1]], sides[o[2]]) == reference);
  }
}

TEST_CASE("validate_edge_lengths classifies the hand cases") {
  SUBCASE("regular tetrahedron is realizable") {
    const auto report = validate_edge_lengths(kRegular);
    CHECK(report.status == Status::Realizable);
    CHECK(report.all_faces_ok());
    CHECK(report.cm_value == near(4.0));
    CHECK(report.volume == near(0.11785113019775793));  // sqrt(2)/12
  }
  SUBCASE("coplanar input is degenerate with volume 0") {
    const auto report = validate_edge_lengths(kFlat);
    CHECK(report.status == Status::Degenerate);
    CHECK(report.all_faces_ok());
    CHECK(report.volume == 0.0);
    CHECK(std::abs(report.cm_value) <= 1e-12 * std::pow(kSqrt2, 6));
  }
  SUBCASE("broken face triple is not realizable") {
    const auto report = validate_edge_lengths({1, 1, 1, 1, 1, 10});
    CHECK(report.status == Status::NotRealizable);
    // f = 10 breaks both faces containing it: {a,e,f} and {c,d,f}.
    CHECK(report.face_ok == std::array<bool, 4>{true, false, true, false});
  }
  SUBCASE("face-valid but negative Cayley-Menger is not realizable") {
    const auto report = validate_edge_lengths({1, 1, 1, 1, 1, 1.9});
    CHECK(report.all_faces_ok());
    CHECK(report.cm_value < 0.0);
    CHECK(report.status == Status::NotRealizable);
    CHECK(std::isnan(report.volume));
  }
  SUBCASE("non-positive and non-finite lengths throw") {
    CHECK_THROWS_AS(validate_edge_lengths({0, 1, 1, 1, 1, 1}), NonPositiveLength);
    CHECK_THROWS_AS(validate_edge_lengths({1, 1, 1, -2, 1, 1}), NonPositiveLength);
    CHECK_THROWS_AS(validate_edge_lengths({1, 1, 1, 1, std::nan(""), 1}), NonPositiveLength);
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(validate_edge_lengths({1, 1, 1, 1, 1, inf}), NonPositiveLength);
  }
}

TEST_CASE("cayley_menger_volume matches frozen hand values") {
  CHECK(cayley_menger_volume(kRegular) == near(0.11785113019775793));
  CHECK(cayley_menger_volume(kCorner) == near(1.0 / 6.0));
  CHECK(cayley_menger_volume(kSkew) == near(1.0 / 6.0));
  CHECK(cayley_menger_volume(kFlat) == 0.0);
  CHECK_THROWS_AS(cayley_menger_volume({1, 1, 1, 1, 1, 1.9}), NotRealizable);
  CHECK_THROWS_AS(cayley_menger_volume({1, 1, 0, 1, 1, 1}), NonPositiveLength);
}

TEST_CASE("Cayley-Menger elimination agrees with the Leibniz expansion") {
  oracle::RngState rng{2024};
  for (int i = 0; i < 50; ++i) {
    const auto lengths = oracle::edge_lengths_of(oracle::random_tetrahedron(rng, 1.0));
    const double viaElimination = detail::cayley_menger_value(lengths);
    const double viaLeibniz = cm_leibniz(lengths);
    const double scale6 = std::pow(lengths.max_edge(), 6);
    CHECK(std::abs(viaElimination - viaLeibniz) <= 1e-11 * scale6);
  }
  CHECK(detail::cayley_menger_value(kRegular) == near(4.0));
  CHECK(detail::cayley_menger_value(kCorner) == near(8.0));
  CHECK(detail::cayley_menger_value(kSkew) == near(8.0));
}

TEST_CASE("volume scales with the cube of the edge scale") {
  oracle::RngState rng{11};
  for (int i = 0; i < 20; ++i) {
    const auto lengths = oracle::edge_lengths_of(oracle::random_tetrahedron(rng, 1.0));
    const double v = cayley_menger_volume(lengths);
    CHECK(cayley_menger_volume(lengths.scaled(3.0)) == near(27.0 * v, 1e-11));
  }
}

TEST_CASE("medial_area on the hand cases") {
  SUBCASE("regular tetrahedron gives exactly 1/4") {
    CHECK(medial_area(kRegular, OppositePair::DE) == 0.25);
    CHECK(medial_area(kRegular, OppositePair::AC) == 0.25);
    CHECK(medial_area(kRegular, OppositePair::BF) == 0.25);
  }
  SUBCASE("corner tetrahedron gives sqrt(2)/4 for every pair") {
    for (OppositePair pair : kAllPairs) {
      CHECK(medial_area(kCorner, pair) == near(0.3535533905932738));
    }
  }
  SUBCASE("skew example per pair") {
    CHECK(medial_area(kSkew, OppositePair::DE) == near(0.3535533905932738));
    CHECK(medial_area(kSkew, OppositePair::AC) == near(0.25));
    CHECK(medial_area(kSkew, OppositePair::BF) == near(0.4330127018922193));
  }
  SUBCASE("doubling every edge quadruples the area exactly") {
    CHECK(medial_area({2, 2, 2, 2, 2, 2}, OppositePair::DE) == 1.0);
    CHECK(medial_area({2, 2, 2, 2, 2, 2}, OppositePair::BF) == 1.0);
  }
  SUBCASE("flat input keeps a defined (possibly zero) area") {
    CHECK(medial_area(kFlat, OppositePair::DE) == 0.0);
    CHECK(medial_area(kFlat, OppositePair::AC) == near(0.5));
    CHECK(medial_area(kFlat, OppositePair::BF) == 0.0);
  }
  SUBCASE("unrealizable lengths trip the radicand backstop") {
    CHECK_THROWS_AS(medial_area({1, 1, 1, 1, 1, 3}, OppositePair::DE), NegativeRadicand);
    CHECK_THROWS_AS(medial_area({1, 1, 1, 1, 1, 0}, OppositePair::DE), NonPositiveLength);
  }
}

TEST_CASE("medial_area_all matches per-pair calls") {
  for (const auto& lengths : {kRegular, kCorner, kSkew}) {
    const auto all = medial_area_all(lengths);
    CHECK(all.de == medial_area(lengths, OppositePair::DE));
    CHECK(all.ac == medial_area(lengths, OppositePair::AC));
    CHECK(all.bf == medial_area(lengths, OppositePair::BF));
  }
  const auto doubled = medial_area_all({2, 2, 2, 2, 2, 2});
  CHECK(doubled.de == 1.0);
  CHECK(doubled.ac == 1.0);
  CHECK(doubled.bf == 1.0);
}

TEST_CASE("opposite_edge_cosine") {
  CHECK(opposite_edge_cosine(kRegular, OppositePair::DE) == 0.0);
  CHECK(opposite_edge_cosine(kSkew, OppositePair::DE) == near(0.5773502691896258));  // 1/sqrt(3)
  CHECK(opposite_edge_cosine(kCorner, OppositePair::AC) == 0.0);
  CHECK(opposite_edge_cosine(kFlat, OppositePair::DE) == 1.0);
  CHECK_THROWS_AS(opposite_edge_cosine({1, 1, 1, 1, 1, 3}, OppositePair::DE), NegativeRadicand);

  SUBCASE("area equals (product/4) sin(theta)") {
    for (const auto& lengths : {kRegular, kCorner, kSkew}) {
      for (OppositePair pair : kAllPairs) {
        const auto terms = detail::pair_terms(lengths, pair);
        const double cosine = opposite_edge_cosine(lengths, pair);
        const double viaSine = 0.25 * terms.product * std::sqrt(1.0 - cosine * cosine);
        CHECK(std::abs(medial_area(lengths, pair) - viaSine) <= 1e-9 * 0.25 * terms.product);
      }
    }
  }
}

TEST_CASE("embed_canonical solves the frame coordinates") {
  SUBCASE("regular tetrahedron") {
    const auto tet = embed_canonical(kRegular);
    CHECK(tet.y == -0.5);  // (b^2 - a^2 - d^2) / (2d), exact in doubles
    CHECK(tet.upsilon == 0.0);
    CHECK(tet.x == near(0.2886751345948129));
    CHECK(tet.z == near(0.816496580927726));
    CHECK(tet.xi == near(-0.5773502691896258));
  }
  SUBCASE("corner tetrahedron") {
    const auto tet = embed_canonical(kCorner);
    CHECK(std::abs(tet.y) <= 1e-15);
    CHECK(std::abs(tet.upsilon) <= 1e-15);
    CHECK(tet.z == near(1.0));
    CHECK(tet.xi == near(-1.0));
  }
  SUBCASE("length relations hold by substitution") {
    for (const auto& lengths : {kRegular, kCorner, kSkew}) {
      const auto t = embed_canonical(lengths);
      const double dy = t.y - t.upsilon;
      CHECK((t.x - t.xi) * (t.x - t.xi) + dy * dy ==
            near(lengths.f * lengths.f, 1e-11));
      const double dyd = t.y + lengths.d - t.upsilon;
      CHECK((t.x - t.xi) * (t.x - t.xi) + dyd * dyd ==
            near(lengths.c * lengths.c, 1e-11));
      CHECK(t.x * t.x + t.y * t.y + t.z * t.z == near(lengths.a * lengths.a, 1e-11));
      const double yd = t.y + lengths.d;
      CHECK(t.x * t.x + yd * yd + t.z * t.z == near(lengths.b * lengths.b, 1e-11));
      CHECK(t.xi * t.xi + t.upsilon * t.upsilon + t.z * t.z ==
            near(lengths.e * lengths.e, 1e-11));
      CHECK(t.z > 0.0);
      CHECK(t.x - t.xi > 0.0);
    }
  }
  SUBCASE("round trip through the vertices") {
    oracle::RngState rng{99};
    for (int i = 0; i < 100; ++i) {
      const auto lengths = oracle::edge_lengths_of(oracle::random_tetrahedron(rng, 1.0));
      const auto p = embed_canonical(lengths).vertices();
      const SixEdgeLengths back{distance(p[0], p[1]), distance(p[0], p[2]),
                                distance(p[2], p[3]), distance(p[1], p[2]),
                                distance(p[0], p[3]), distance(p[1], p[3])};
      const auto in = lengths.as_array();
      const auto out = back.as_array();
      for (int k = 0; k < 6; ++k) CHECK(out[k] == near(in[k], 1e-9));
    }
  }
  SUBCASE("flat and unrealizable inputs are rejected") {
    CHECK_THROWS_AS(embed_canonical(kFlat), DegenerateFrame);
    CHECK_THROWS_AS(embed_canonical({1, 1, 1, 1, 1, 10}), NotRealizable);
    CHECK_THROWS_AS(embed_canonical({1, 1, 1, 1, 1, 1.9}), NotRealizable);
  }
}

TEST_CASE("medial_parallelogram vertices and spans") {
  SUBCASE("corner frame, DE pair: the spec'd midpoints") {
    // Same corner tetrahedron placed with P3 = (1,0,0); a valid canonical
    // frame (x - xi < 0 is allowed for hand-built frames).
    const EmbeddedTet tet{0.0, 0.0, 1.0, 1.0, 0.0, kCorner};
    const auto mp = medial_parallelogram(tet, OppositePair::DE);
    CHECK(mp.vertices[0] == Point3{0.0, 0.0, 0.5});
    CHECK(mp.vertices[1] == Point3{0.0, 0.5, 0.5});
    CHECK(mp.vertices[2] == Point3{0.5, 0.5, 0.0});
    CHECK(mp.vertices[3] == Point3{0.5, 0.0, 0.0});
    CHECK(mp.u == Vec3{0.0, 0.5, 0.0});         // (0, d/2, 0)
    CHECK(mp.v == Vec3{-0.5, 0.0, 0.5});        // (-xi/2, -upsilon/2, z/2)
    CHECK(norm(cross(mp.u, mp.v)) == near(0.3535533905932738));
  }
  SUBCASE("regular tetrahedron: a planar square of side 1/2") {
    const auto mp = medial_parallelogram(embed_canonical(kRegular), OppositePair::DE);
    for (int i = 0; i < 4; ++i) {
      const Vec3 side = mp.vertices[(i + 1) % 4] - mp.vertices[i];
      CHECK(norm(side) == near(0.5, 1e-12));
    }
    CHECK(std::abs(dot(mp.u, mp.v)) <= 1e-12);
    CHECK(norm(cross(mp.u, mp.v)) == near(0.25, 1e-12));
  }
  SUBCASE("parallelogram identities on random inputs") {
    oracle::RngState rng{5};
    for (int i = 0; i < 50; ++i) {
      const auto lengths = oracle::edge_lengths_of(oracle::random_tetrahedron(rng, 1.0));
      const auto tet = embed_canonical(lengths);
      const double scale = lengths.max_edge();
      const Point3 vc = {0.25 * (tet.vertices()[0].x + tet.vertices()[1].x +
                                 tet.vertices()[2].x + tet.vertices()[3].x),
                         0.25 * (tet.vertices()[0].y + tet.vertices()[1].y +
                                 tet.vertices()[2].y + tet.vertices()[3].y),
                         0.25 * (tet.vertices()[0].z + tet.vertices()[1].z +
                                 tet.vertices()[2].z + tet.vertices()[3].z)};
      for (OppositePair pair : kAllPairs) {
        const auto mp = medial_parallelogram(tet, pair);
        // Opposite sides are equal (midpoint identity).
        const Vec3 s01 = mp.vertices[1] - mp.vertices[0];
        const Vec3 s32 = mp.vertices[2] - mp.vertices[3];
        CHECK(norm(s01 - s32) <= 1e-12 * scale);
        const Vec3 s03 = mp.vertices[3] - mp.vertices[0];
        const Vec3 s12 = mp.vertices[2] - mp.vertices[1];
        CHECK(norm(s03 - s12) <= 1e-12 * scale);
        // Sides halve the chosen pair.
        const auto terms = detail::pair_terms(lengths, pair);
        CHECK(norm(mp.u) * norm(mp.v) == near(0.25 * terms.product, 1e-9));
        // Coplanar vertex set.
        const double triple = dot(cross(s01, s03), mp.vertices[2] - mp.vertices[0]);
        CHECK(std::abs(triple) <= 1e-12 * scale * scale * scale);
        // All three parallelograms share the vertex centroid.
        CHECK(norm(mp.center() - vc) <= 1e-12 * scale);
        // Cross-product area agrees with the closed form.
        CHECK(norm(cross(mp.u, mp.v)) == near(medial_area(lengths, pair), 1e-9));
      }
    }
  }
}

TEST_CASE("relabelings that fix a pair leave its area bit-identical") {
  oracle::RngState rng{77};
  for (int i = 0; i < 200; ++i) {
    const auto l = oracle::edge_lengths_of(oracle::random_tetrahedron(rng, 1.0));

    const double de = medial_area(l, OppositePair::DE);
    CHECK(medial_area({l.a, l.b, l.c, l.e, l.d, l.f}, OppositePair::DE) == de);  // d<->e
    CHECK(medial_area({l.c, l.b, l.a, l.d, l.e, l.f}, OppositePair::DE) == de);  // a<->c
    CHECK(medial_area({l.a, l.f, l.c, l.d, l.e, l.b}, OppositePair::DE) == de);  // b<->f
    CHECK(medial_area({l.b, l.a, l.f, l.d, l.e, l.c}, OppositePair::DE) == de);  // (a,c)<->(b,f)

    const double ac = medial_area(l, OppositePair::AC);
    CHECK(medial_area({l.c, l.b, l.a, l.d, l.e, l.f}, OppositePair::AC) == ac);  // a<->c
    CHECK(medial_area({l.a, l.b, l.c, l.e, l.d, l.f}, OppositePair::AC) == ac);  // d<->e
    CHECK(medial_area({l.a, l.f, l.c, l.d, l.e, l.b}, OppositePair::AC) == ac);  // b<->f
    CHECK(medial_area({l.a, l.d, l.c, l.b, l.f, l.e}, OppositePair::AC) == ac);  // (d,e)<->(b,f)

    const double bf = medial_area(l, OppositePair::BF);
    CHECK(medial_area({l.a, l.f, l.c, l.d, l.e, l.b}, OppositePair::BF) == bf);  // b<->f
    CHECK(medial_area({l.c, l.b, l.a, l.d, l.e, l.f}, OppositePair::BF) == bf);  // a<->c
    CHECK(medial_area({l.a, l.b, l.c, l.e, l.d, l.f}, OppositePair::BF) == bf);  // d<->e
    CHECK(medial_area({l.d, l.b, l.e, l.a, l.c, l.f}, OppositePair::BF) == bf);  // (a,c)<->(d,e)
  }
}

TEST_CASE("medial area scale covariance and upper bound") {
  oracle::RngState rng{31337};
  for (int i = 0; i < 100; ++i) {
    const auto lengths = oracle::edge_lengths_of(oracle::random_tetrahedron(rng, 1.0));
    for (OppositePair pair : kAllPairs) {
      const double area = medial_area(lengths, pair);
      const auto terms = detail::pair_terms(lengths, pair);
      CHECK(area <= 0.25 * terms.product * (1.0 + 1e-12));
      for (double lambda : {0.01, 1.0, 137.0}) {
        const double scaled = medial_area(lengths.scaled(lambda), pair);
        CHECK(scaled == near(lambda * lambda * area, 1e-12));
      }
    }
  }
}
