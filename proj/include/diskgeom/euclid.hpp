#ifndef DISKGEOM_EUCLID_HPP
#define DISKGEOM_EUCLID_HPP

#include <optional>
#include <utility>
#include <variant>

#include "diskgeom/core.hpp"

namespace diskgeom {

/// Euclidean line L[p, q] through two distinct finite points.
template <typename Scalar>
struct Line {
  Complex<Scalar> p;
  Complex<Scalar> q;
};

template <typename Scalar>
struct Circle {
  Complex<Scalar> center;
  Scalar radius;
};

/// Line or circle; the class of curves closed under Möbius maps.
template <typename Scalar>
using GenCircle = std::variant<Line<Scalar>, Circle<Scalar>>;

template <typename Scalar>
inline bool is_line(const GenCircle<Scalar>& g) {
  return std::holds_alternative<Line<Scalar>>(g);
}

/// Euclidean distance from z to the line.
template <typename Scalar>
Scalar distance_to(const Line<Scalar>& line, const Complex<Scalar>& z) {
  const Complex<Scalar> dir = line.q - line.p;
  return std::abs(cross(dir, z - line.p)) / std::abs(dir);
}

template <typename Scalar>
Scalar distance_to(const Circle<Scalar>& circle, const Complex<Scalar>& z) {
  return std::abs(std::abs(z - circle.center) - circle.radius);
}

template <typename Scalar>
Scalar distance_to(const GenCircle<Scalar>& g, const Complex<Scalar>& z) {
  return std::visit([&](const auto& curve) { return distance_to(curve, z); }, g);
}

/// LIS[a,b,c,d]: intersection of L[a,b] and L[c,d].
template <typename Scalar>
Complex<Scalar> line_intersection(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                  const Complex<Scalar>& c, const Complex<Scalar>& d,
                                  Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b, c, d}, "line_intersection");
  if (a == b || c == d) fail(ErrorKind::DegenerateInput, "line_intersection: coincident defining points");
  const Complex<Scalar> ab = a - b;
  const Complex<Scalar> cd = c - d;
  // conj(ab) * cd - conj(cd) * ab is purely imaginary: 2i * cross(ab, cd).
  const Complex<Scalar> den = std::conj(ab) * cd - std::conj(cd) * ab;
  if (std::abs(den) <= Scalar(2) * eps * std::abs(ab) * std::abs(cd))
    fail(ErrorKind::ParallelLines, "line_intersection: lines are parallel");
  const Complex<Scalar> num = (std::conj(a) * b - a * std::conj(b)) * cd -
                              (std::conj(c) * d - c * std::conj(d)) * ab;
  return num / den;
}

template <typename Scalar>
Complex<Scalar> line_intersection(const Line<Scalar>& l1, const Line<Scalar>& l2,
                                  Scalar eps = Tolerance<Scalar>::degenerate) {
  return line_intersection(l1.p, l1.q, l2.p, l2.q, eps);
}

/// The four inverse-point quadruples with closed-form intersections.
enum class InversePairs {
  antipodal_chords = 1,   // LIS[a, b, -1/conj(a), -1/conj(b)]
  reflected_chords = 2,   // LIS[a, b, 1/conj(a), 1/conj(b)]
  reflected_cross = 3,    // LIS[a, 1/conj(b), b, 1/conj(a)]
  antipodal_cross = 4,    // LIS[a, -1/conj(b), b, -1/conj(a)]
};

template <typename Scalar>
Complex<Scalar> lis_inverse_pairs(InversePairs which, const Complex<Scalar>& a,
                                  const Complex<Scalar>& b,
                                  Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "lis_inverse_pairs");
  if (a == Complex<Scalar>{} || b == Complex<Scalar>{})
    fail(ErrorKind::DegenerateInput, "lis_inverse_pairs: zero point has no inverse");
  const Scalar a2 = norm2(a);
  const Scalar b2 = norm2(b);
  switch (which) {
    case InversePairs::antipodal_chords:
    case InversePairs::reflected_chords: {
      const Scalar den = a2 - b2;
      if (std::abs(den) <= eps * std::max({Scalar(1), a2, b2}))
        fail(ErrorKind::DegenerateModuli, "lis_inverse_pairs: |a| = |b|");
      if (which == InversePairs::antipodal_chords)
        return (b * (Scalar(1) + a2) - a * (Scalar(1) + b2)) / den;
      return (a * (Scalar(1) - b2) - b * (Scalar(1) - a2)) / den;
    }
    case InversePairs::reflected_cross:
    case InversePairs::antipodal_cross: {
      const Scalar den = Scalar(1) - a2 * b2;
      if (std::abs(den) <= eps * std::max(Scalar(1), a2 * b2))
        fail(ErrorKind::DegenerateModuli, "lis_inverse_pairs: |a||b| = 1");
      if (which == InversePairs::reflected_cross)
        return (a * (Scalar(1) - b2) + b * (Scalar(1) - a2)) / den;
      return (a * (Scalar(1) + b2) + b * (Scalar(1) + a2)) / den;
    }
  }
  fail(ErrorKind::DegenerateInput, "lis_inverse_pairs: unknown case");
}

/// Mirror image of x in the line.
template <typename Scalar>
Complex<Scalar> reflect_in_line(const Complex<Scalar>& x, const Line<Scalar>& line) {
  require_finite({x, line.p, line.q}, "reflect_in_line");
  const Complex<Scalar>& a = line.p;
  const Complex<Scalar>& b = line.q;
  if (a == b) fail(ErrorKind::DegenerateInput, "reflect_in_line: line endpoints coincide");
  const Complex<Scalar> den = std::conj(a) - std::conj(b);
  return (a - b) / den * std::conj(x) - (a * std::conj(b) - std::conj(a) * b) / den;
}

/// L[a,b] ∩ S¹ = {a1, b1}, ordered so that |a1 - a| < |a1 - b|.
template <typename Scalar>
std::pair<Complex<Scalar>, Complex<Scalar>> unit_chord_endpoints(
    const Complex<Scalar>& a, const Complex<Scalar>& b, Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "unit_chord_endpoints");
  require_in_disk({a, b}, "unit_chord_endpoints");
  const Complex<Scalar> i(0, 1);
  // Foot of the perpendicular from the origin.
  const Complex<Scalar> c = line_intersection(a, b, Complex<Scalar>{}, i * (a - b), eps);
  const Scalar rc = std::abs(c);
  if (rc <= eps * scale_of({a, b}) || collinear_with_origin(a, b, eps))
    fail(ErrorKind::CollinearWithOrigin, "unit_chord_endpoints: chord passes through the origin");
  if (rc >= Scalar(1) - eps) fail(ErrorKind::ChordOutsideDisk, "unit_chord_endpoints: chord misses the open disk");
  const Complex<Scalar> offset = i * (c / rc) * std::sqrt((Scalar(1) - rc) * (Scalar(1) + rc));
  Complex<Scalar> a1 = c - offset;
  Complex<Scalar> b1 = c + offset;
  if (!(std::abs(a1 - a) < std::abs(a1 - b))) std::swap(a1, b1);
  return {a1, b1};
}

/// m(a,b,c): center of the circle through three non-collinear points.
template <typename Scalar>
Complex<Scalar> circumcenter(const Complex<Scalar>& a, const Complex<Scalar>& b, const Complex<Scalar>& c,
                             Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b, c}, "circumcenter");
  if (std::abs(cross(b - a, c - a)) <= eps * std::abs(b - a) * std::abs(c - a))
    fail(ErrorKind::CollinearPoints, "circumcenter: points are collinear or coincide");
  const Complex<Scalar> num = norm2(a) * (b - c) + norm2(b) * (c - a) + norm2(c) * (a - b);
  const Complex<Scalar> den = a * (std::conj(c) - std::conj(b)) + b * (std::conj(a) - std::conj(c)) +
                              c * (std::conj(b) - std::conj(a));
  return num / den;
}

/// Which inverse of a is the third point in m(a, ±1/conj(a), b).
enum class Inversion {
  reflection,  // +: circle through a, b orthogonal to S¹
  antipodal,   // -: projection of the great circle through a, b
};

template <typename Scalar>
Complex<Scalar> circumcenter_with_inversion(const Complex<Scalar>& a, const Complex<Scalar>& b, Inversion kind,
                                            Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "circumcenter_with_inversion");
  const Complex<Scalar> d = b * std::conj(a) - a * std::conj(b);
  if (a == Complex<Scalar>{} || collinear_with_origin(a, b, eps))
    fail(ErrorKind::CollinearWithOrigin, "circumcenter_with_inversion: a, b, 0 collinear");
  const Complex<Scalar> tail = a * b * (std::conj(a) - std::conj(b));
  return kind == Inversion::reflection ? (b - a + tail) / d : (a - b + tail) / d;
}

/// Intersection f of the chords L[a,c] and L[b,d] of S¹ via conj(f) = (a+c-b-d)/(ac-bd).
template <typename Scalar>
Complex<Scalar> chord_conjugate_intersection(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                             const Complex<Scalar>& c, const Complex<Scalar>& d,
                                             Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b, c, d}, "chord_conjugate_intersection");
  for (const auto& z : {a, b, c, d})
    if (std::abs(std::abs(z) - Scalar(1)) > eps)
      fail(ErrorKind::NotOnUnitCircle, "chord_conjugate_intersection: point not on S¹");
  const Complex<Scalar> den = a * c - b * d;
  if (std::abs(den) <= eps) fail(ErrorKind::ParallelChords, "chord_conjugate_intersection: chords are parallel");
  return std::conj((a + c - b - d) / den);
}

/// Zero or two (possibly equal) intersection points of two circles.
template <typename Scalar>
std::optional<std::pair<Complex<Scalar>, Complex<Scalar>>> circle_circle_intersection(
    const Circle<Scalar>& c1, const Circle<Scalar>& c2, Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({c1.center, c2.center}, "circle_circle_intersection");
  if (!(c1.radius > 0) || !(c2.radius > 0) || !std::isfinite(c1.radius) || !std::isfinite(c2.radius))
    fail(ErrorKind::DegenerateInput, "circle_circle_intersection: radius must be positive");
  const Complex<Scalar> delta = c2.center - c1.center;
  const Scalar dist = std::abs(delta);
  const Scalar scale = std::max({Scalar(1), c1.radius, c2.radius});
  if (dist <= eps * scale) {
    if (std::abs(c1.radius - c2.radius) <= eps * scale)
      fail(ErrorKind::DegenerateInput, "circle_circle_intersection: identical circles");
    fail(ErrorKind::ConcentricCircles, "circle_circle_intersection: concentric circles");
  }
  // Foot of the common chord along the center line, then half-chord height.
  const Scalar x = (dist * dist + (c1.radius - c2.radius) * (c1.radius + c2.radius)) / (Scalar(2) * dist);
  Scalar h2 = (c1.radius - x) * (c1.radius + x);
  if (h2 < Scalar(0)) {
    if (h2 < -eps * scale * scale) return std::nullopt;
    h2 = Scalar(0);
  }
  const Complex<Scalar> e = delta / dist;
  const Complex<Scalar> foot = c1.center + x * e;
  const Complex<Scalar> up = Complex<Scalar>(0, std::sqrt(h2)) * e;
  return std::make_pair(foot + up, foot - up);
}

/// Zero or two (possibly equal) intersection points of a line and a circle.
template <typename Scalar>
std::optional<std::pair<Complex<Scalar>, Complex<Scalar>>> line_circle_intersection(
    const Line<Scalar>& line, const Circle<Scalar>& circle, Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({line.p, line.q, circle.center}, "line_circle_intersection");
  if (line.p == line.q) fail(ErrorKind::DegenerateInput, "line_circle_intersection: degenerate line");
  const Complex<Scalar> dir = (line.q - line.p) / std::abs(line.q - line.p);
  // Closest point of the line to the center, then half-chord length.
  const Complex<Scalar> foot = line.p + dot(dir, circle.center - line.p) * dir;
  const Scalar off = std::abs(cross(dir, circle.center - line.p));
  Scalar h2 = (circle.radius - off) * (circle.radius + off);
  if (h2 < Scalar(0)) {
    const Scalar scale = std::max(Scalar(1), circle.radius);
    if (h2 < -eps * scale * scale) return std::nullopt;
    h2 = Scalar(0);
  }
  const Scalar h = std::sqrt(h2);
  return std::make_pair(foot - h * dir, foot + h * dir);
}

}  // namespace diskgeom

#endif  // DISKGEOM_EUCLID_HPP
