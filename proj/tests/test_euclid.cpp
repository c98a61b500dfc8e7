#include <Eigen/Dense>

#include "diskgeom/euclid.hpp"
#include "test_util.hpp"

using namespace diskgeom;
using testutil::C;

namespace {

// Solves a + s(b − a) = c + t(d − c) as a real 2×2 system.
C lis_oracle(C a, C b, C c, C d) {
  Eigen::Matrix2d m;
  m << (b - a).real(), -(d - c).real(), (b - a).imag(), -(d - c).imag();
  const Eigen::Vector2d rhs((c - a).real(), (c - a).imag());
  const Eigen::Vector2d st = m.fullPivLu().solve(rhs);
  return a + st(0) * (b - a);
}

// Equidistance conditions 2 Re(conj(p − a) z) = |p|² − |a|² for p = b, c.
C circumcenter_oracle(C a, C b, C c) {
  Eigen::Matrix2d m;
  m << 2 * (b - a).real(), 2 * (b - a).imag(), 2 * (c - a).real(), 2 * (c - a).imag();
  const Eigen::Vector2d rhs(std::norm(b) - std::norm(a), std::norm(c) - std::norm(a));
  const Eigen::Vector2d z = m.fullPivLu().solve(rhs);
  return {z(0), z(1)};
}

// Residual of the implicit equation (ā − b̄)z − (a − b)z̄ − (āb − ab̄) of L[a,b].
double line_residual(C a, C b, C z) {
  return std::abs((std::conj(a) - std::conj(b)) * z - (a - b) * std::conj(z) - (std::conj(a) * b - a * std::conj(b)));
}

}  // namespace

TEST(LineIntersection, Examples) {
  EXPECT_NEAR_C(line_intersection(C(1), C(-1), C(0, 1), C(0, -1)), C(0), 1e-15);
  EXPECT_NEAR_C(line_intersection(C(0), C(1, 1), C(1), C(0, 1)), C(0.5, 0.5), 1e-15);
  const C a = 0.5, b = std::polar(0.7, 1.0);
  EXPECT_NEAR_C(line_intersection(a, 1.0 / std::conj(b), b, 1.0 / std::conj(a)), C(0.613, 0.503), 2e-3);
}

TEST(LineIntersection, Errors) {
  EXPECT_GEOMETRY_ERROR(line_intersection(C(0), C(1), C(0, 1), C(1, 1)), ErrorKind::ParallelLines);
  EXPECT_GEOMETRY_ERROR(line_intersection(C(1), C(1), C(0, 1), C(1, 1)), ErrorKind::DegenerateInput);
  EXPECT_GEOMETRY_ERROR(line_intersection(C(0), C(1), C(2), C(2)), ErrorKind::DegenerateInput);
}

TEST(LineIntersection, MatchesLinearSolveAndLiesOnBothLines) {
  testutil::Gen gen(11);
  for (int i = 0; i < 10000; ++i) {
    const C a = gen.in_box(3), b = gen.in_box(3), c = gen.in_box(3), d = gen.in_box(3);
    if (std::abs((std::conj(b - a) * (d - c)).imag()) < 1e-3 * std::abs(b - a) * std::abs(d - c)) continue;
    const C z = line_intersection(a, b, c, d);
    const double scale = std::max({1.0, std::abs(a), std::abs(b), std::abs(c), std::abs(d), std::abs(z)});
    EXPECT_LE(std::abs(z - lis_oracle(a, b, c, d)), 1e-9 * scale);
    EXPECT_LE(line_residual(a, b, z), 1e-9 * scale * scale);
    EXPECT_LE(line_residual(c, d, z), 1e-9 * scale * scale);
  }
}

TEST(LisInversePairs, Examples) {
  EXPECT_NEAR_C(lis_inverse_pairs(InversePairs::reflected_chords, C(0.5), C(0, 0.25)), C(2.5, -1), 1e-12);
  EXPECT_NEAR_C(lis_inverse_pairs(InversePairs::reflected_cross, C(0.5), std::polar(0.7, 1.0)), C(0.613, 0.503), 2e-3);
  EXPECT_GEOMETRY_ERROR(lis_inverse_pairs(InversePairs::antipodal_chords, C(0.5), C(0, 0.5)), ErrorKind::DegenerateModuli);
  EXPECT_GEOMETRY_ERROR(lis_inverse_pairs(InversePairs::reflected_cross, C(2), C(0, 0.5)), ErrorKind::DegenerateModuli);
}

TEST(LisInversePairs, AgreesWithGenericLis) {
  testutil::Gen gen(12);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const C a = gen.in_box(2), b = gen.in_box(2);
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma < 0.05 || mb < 0.05 || std::abs(ma - mb) < 0.05 || std::abs(ma * mb - 1) < 0.05) continue;
    if (std::abs((std::conj(a) * b).imag()) < 0.05 * ma * mb) continue;
    const C ra = 1.0 / std::conj(a), rb = 1.0 / std::conj(b);
    const std::pair<InversePairs, C> cases[] = {
        {InversePairs::antipodal_chords, lis_oracle(a, b, -ra, -rb)},
        {InversePairs::reflected_chords, lis_oracle(a, b, ra, rb)},
        {InversePairs::reflected_cross, lis_oracle(a, rb, b, ra)},
        {InversePairs::antipodal_cross, lis_oracle(a, -rb, b, -ra)},
    };
    for (const auto& [which, expected] : cases) {
      const C z = lis_inverse_pairs(which, a, b);
      EXPECT_LE(std::abs(z - expected), 1e-9 * std::max(1.0, std::abs(expected)));
    }
    ++checked;
  }
  EXPECT_GT(checked, 1000);
}

TEST(ReflectInLine, Examples) {
  EXPECT_NEAR_C(reflect_in_line(C(0, 1), Line<double>{C(0), C(1)}), C(0, -1), 1e-15);
  EXPECT_NEAR_C(reflect_in_line(C(2, 1), Line<double>{C(0), C(1, 1)}), C(1, 2), 1e-15);
  EXPECT_NEAR_C(reflect_in_line(C(3, 3), Line<double>{C(0), C(1, 1)}), C(3, 3), 1e-15);
  EXPECT_GEOMETRY_ERROR(reflect_in_line(C(1), Line<double>{C(1, 1), C(1, 1)}), ErrorKind::DegenerateInput);
}

TEST(ReflectInLine, InvolutionMidpointAndPerpendicular) {
  testutil::Gen gen(13);
  for (int i = 0; i < 10000; ++i) {
    const Line<double> line{gen.in_box(2), gen.in_box(2)};
    const C x = gen.in_box(2);
    const C y = reflect_in_line(x, line);
    EXPECT_LE(std::abs(reflect_in_line(y, line) - x), 1e-12 * std::max(1.0, std::abs(x)) * 10);
    EXPECT_LE(distance_to(line, 0.5 * (x + y)), 1e-12 * 10);
    EXPECT_LE(std::abs(dot(y - x, line.q - line.p)), 1e-12 * 10 * std::abs(line.q - line.p));
  }
}

TEST(UnitChordEndpoints, Examples) {
  const auto [a1, b1] = unit_chord_endpoints(C(0.3, 0.1), C(0.3, -0.1));
  EXPECT_NEAR_C(a1, C(0.3, std::sqrt(0.91)), 1e-12);
  EXPECT_NEAR_C(b1, C(0.3, -std::sqrt(0.91)), 1e-12);
  // x + y = 1/2 meets S¹ at x = (1 ± √7)/4.
  const double x = (1 + std::sqrt(7.0)) / 4;
  const auto [p, q] = unit_chord_endpoints(C(0.5), C(0, 0.5));
  EXPECT_NEAR_C(p, C(x, 0.5 - x), 1e-12);
  EXPECT_NEAR_C(q, C(0.5 - x, x), 1e-12);
  EXPECT_GEOMETRY_ERROR(unit_chord_endpoints(C(0.3), C(0.6)), ErrorKind::CollinearWithOrigin);
}

TEST(UnitChordEndpoints, OnCircleOnChordAndOrdered) {
  testutil::Gen gen(14);
  for (int i = 0; i < 10000; ++i) {
    const auto [a, b] = gen.disk_pair();
    const auto [a1, b1] = unit_chord_endpoints(a, b);
    EXPECT_NEAR(std::abs(a1), 1.0, 1e-12);
    EXPECT_NEAR(std::abs(b1), 1.0, 1e-12);
    EXPECT_LE(distance_to(Line<double>{a, b}, a1), 1e-9);
    EXPECT_LE(distance_to(Line<double>{a, b}, b1), 1e-9);
    EXPECT_LT(std::abs(a1 - a), std::abs(a1 - b));
  }
}

TEST(Circumcenter, Examples) {
  EXPECT_NEAR_C(circumcenter(C(1), C(0, 1), C(-1)), C(0), 1e-15);
  EXPECT_NEAR_C(circumcenter(C(0), C(1), C(0, 1)), C(0.5, 0.5), 1e-15);
  EXPECT_GEOMETRY_ERROR(circumcenter(C(0), C(1), C(2)), ErrorKind::CollinearPoints);
  const C a = 0.5, b = std::polar(0.6, 1.0);
  EXPECT_NEAR_C(circumcenter(a, 1.0 / std::conj(a), b), circumcenter_with_inversion(a, b, Inversion::reflection), 1e-12);
}

TEST(Circumcenter, MatchesLinearSolveAndIsSymmetric) {
  testutil::Gen gen(15);
  for (int i = 0; i < 10000; ++i) {
    const C a = gen.in_box(2), b = gen.in_box(2), c = gen.in_box(2);
    if (std::abs((std::conj(b - a) * (c - a)).imag()) < 1e-2 * std::abs(b - a) * std::abs(c - a)) continue;
    const C m = circumcenter(a, b, c);
    const double scale = std::max({1.0, std::abs(m), std::abs(a - m)});
    EXPECT_LE(std::abs(m - circumcenter_oracle(a, b, c)), 1e-9 * scale);
    EXPECT_LE(std::abs(std::abs(a - m) - std::abs(b - m)), 1e-9 * scale);
    EXPECT_LE(std::abs(std::abs(a - m) - std::abs(c - m)), 1e-9 * scale);
    for (const C& p : {circumcenter(b, c, a), circumcenter(c, a, b), circumcenter(b, a, c)})
      EXPECT_LE(std::abs(p - m), 1e-12 * scale * 100);
  }
}

TEST(CircumcenterWithInversion, Examples) {
  const C a = 0.5;
  const C c = circumcenter_with_inversion(a, std::polar(0.6, 1.0), Inversion::antipodal);
  EXPECT_NEAR_C(c, C(-0.75, -0.152), 1e-3);
  // Radius frozen from the independent formula |a − b||1 + a b̄| / |a b̄ − ā b|.
  const C b = std::polar(0.6, 1.0);
  const double r = std::abs(a - b) * std::abs(1.0 + a * std::conj(b)) / std::abs(a * std::conj(b) - std::conj(a) * b);
  EXPECT_NEAR(std::abs(a - c), r, 1e-12);
  EXPECT_NEAR(r, 1.259237, 1e-6);
  const C v = circumcenter_with_inversion(a, std::polar(0.7, 1.0), Inversion::reflection);
  EXPECT_NEAR_C(v, C(1.25, 0.462), 2e-3);
  EXPECT_NEAR(std::abs(a - v), 0.880, 2e-3);
  EXPECT_GEOMETRY_ERROR(circumcenter_with_inversion(C(0.3), C(0.6), Inversion::reflection), ErrorKind::CollinearWithOrigin);
}

TEST(CircumcenterWithInversion, OrthogonalAndGreatCircles) {
  testutil::Gen gen(16);
  for (int i = 0; i < 10000; ++i) {
    const auto [a, b] = gen.disk_pair();
    const C v = circumcenter_with_inversion(a, b, Inversion::reflection);
    const double rv = std::abs(a - v);
    EXPECT_NEAR(std::abs(b - v), rv, 1e-9 * std::max(1.0, rv));
    EXPECT_NEAR(std::norm(v) - rv * rv, 1.0, 1e-9 * std::max(1.0, std::norm(v)));
    const C g = circumcenter_with_inversion(a, b, Inversion::antipodal);
    EXPECT_LE(std::abs(g - circumcenter_oracle(a, b, -1.0 / std::conj(a))), 1e-9 * std::max(1.0, std::abs(g)));
  }
}

TEST(ChordConjugateIntersection, ExamplesAndLisAgreement) {
  EXPECT_NEAR_C(chord_conjugate_intersection(C(1), C(0, 1), C(-1), C(0, -1)), C(0), 1e-15);
  const C a = std::polar(1.0, -0.1), b = std::polar(1.0, 0.5), c = std::polar(1.0, 1.5), d = std::polar(1.0, 3.3);
  EXPECT_NEAR_C(chord_conjugate_intersection(a, b, c, d), C(0.589, 0.381), 2e-3);
  EXPECT_GEOMETRY_ERROR(chord_conjugate_intersection(C(2), C(0, 1), C(-1), C(0, -1)), ErrorKind::NotOnUnitCircle);
  testutil::Gen gen(17);
  for (int i = 0; i < 10000; ++i) {
    const auto q = gen.quadruple();
    const C f = chord_conjugate_intersection(q[0], q[1], q[2], q[3]);
    EXPECT_LE(std::abs(f - lis_oracle(q[0], q[2], q[1], q[3])), 1e-9);
  }
}

TEST(ChordConjugateIntersection, ParallelChords) {
  // a c = b d = i: the chords L[1, i] and L[−i, −1] are parallel.
  EXPECT_GEOMETRY_ERROR(chord_conjugate_intersection(C(1), C(0, -1), C(0, 1), C(-1)), ErrorKind::ParallelChords);
}

TEST(CircleCircleIntersection, Examples) {
  const Circle<double> unit{C(0), 1};
  const auto lens = circle_circle_intersection(unit, Circle<double>{C(1), 1});
  ASSERT_TRUE(lens);
  const double y = std::sqrt(3.0) / 2;
  EXPECT_NEAR(lens->first.real(), 0.5, 1e-15);
  EXPECT_NEAR(lens->second.real(), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(lens->first.imag()), y, 1e-15);
  EXPECT_NEAR(lens->first.imag(), -lens->second.imag(), 1e-15);
  EXPECT_FALSE(circle_circle_intersection(unit, Circle<double>{C(5), 1}));
  const auto tangent = circle_circle_intersection(unit, Circle<double>{C(2), 1});
  ASSERT_TRUE(tangent);
  EXPECT_NEAR_C(tangent->first, C(1), 1e-12);
  EXPECT_NEAR_C(tangent->second, C(1), 1e-12);
  EXPECT_GEOMETRY_ERROR(circle_circle_intersection(unit, Circle<double>{C(0), 2}), ErrorKind::ConcentricCircles);
}

TEST(CircleCircleIntersection, PointsOnBothCircles) {
  testutil::Gen gen(18);
  int hits = 0;
  for (int i = 0; i < 10000; ++i) {
    const Circle<double> c1{gen.in_box(2), gen.uniform(0.1, 2)}, c2{gen.in_box(2), gen.uniform(0.1, 2)};
    const auto r = circle_circle_intersection(c1, c2);
    if (!r) continue;
    ++hits;
    for (const C& z : {r->first, r->second}) {
      EXPECT_LE(distance_to(c1, z), 1e-9 * 4);
      EXPECT_LE(distance_to(c2, z), 1e-9 * 4);
    }
  }
  EXPECT_GT(hits, 1000);
}

TEST(LineCircleIntersection, Diameter) {
  const auto r = line_circle_intersection(Line<double>{C(-1), C(1)}, Circle<double>{C(0), 1});
  ASSERT_TRUE(r);
  EXPECT_NEAR(std::abs(r->first.real()), 1.0, 1e-15);
  EXPECT_NEAR(r->first.real(), -r->second.real(), 1e-15);
  EXPECT_FALSE(line_circle_intersection(Line<double>{C(0, 2), C(1, 2)}, Circle<double>{C(0), 1}));
}
