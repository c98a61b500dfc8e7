#ifndef DISKGEOM_SPHERICAL_HPP
#define DISKGEOM_SPHERICAL_HPP

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <array>
#include <utility>

#include "diskgeom/euclid.hpp"

namespace diskgeom {

/// (ξ, η, ζ) on the Riemann sphere of center (0,0,1/2) and radius 1/2.
template <typename Scalar>
using SpherePoint = Eigen::Matrix<Scalar, 3, 1>;

template <typename Scalar>
inline SpherePoint<Scalar> sphere_center() {
  return SpherePoint<Scalar>(Scalar(0), Scalar(0), Scalar(0.5));
}

/// Stereographic projection onto the Riemann sphere; ∞ goes to the north pole.
template <typename Scalar>
SpherePoint<Scalar> to_sphere(const ExtendedPoint<Scalar>& p) {
  if (p.is_infinite()) return SpherePoint<Scalar>(Scalar(0), Scalar(0), Scalar(1));
  const Complex<Scalar>& z = p.finite();
  const Scalar r2 = norm2(z);
  const Scalar inv = Scalar(1) / (Scalar(1) + r2);
  return SpherePoint<Scalar>(z.real() * inv, z.imag() * inv, r2 * inv);
}

/// Inverse projection. Uses z = ζ / conj(ξ + iη) in the northern hemisphere,
/// where 1 - ζ has lost most of its digits.
template <typename Scalar>
ExtendedPoint<Scalar> from_sphere(const SpherePoint<Scalar>& p) {
  const Complex<Scalar> w(p.x(), p.y());
  if (p.z() >= Scalar(1)) return ExtendedPoint<Scalar>::infinity();
  if (p.z() > Scalar(0.5)) {
    if (w == Complex<Scalar>{}) return ExtendedPoint<Scalar>::infinity();
    return Complex<Scalar>(p.z() / std::conj(w));
  }
  return Complex<Scalar>(w / (Scalar(1) - p.z()));
}

/// Chordal metric q(x, y) = |π(x) − π(y)|, in [0, 1].
template <typename Scalar>
Scalar chordal_distance(const ExtendedPoint<Scalar>& x, const ExtendedPoint<Scalar>& y) {
  if (x.is_infinite() && y.is_infinite()) return Scalar(0);
  if (x.is_infinite() || y.is_infinite()) {
    const Complex<Scalar>& z = x.is_infinite() ? y.finite() : x.finite();
    return Scalar(1) / std::sqrt(Scalar(1) + norm2(z));
  }
  const Complex<Scalar>& u = x.finite();
  const Complex<Scalar>& v = y.finite();
  return std::abs(u - v) / (std::sqrt(Scalar(1) + norm2(u)) * std::sqrt(Scalar(1) + norm2(v)));
}

/// ã = −1/conj(a), with 0 and ∞ exchanged.
template <typename Scalar>
ExtendedPoint<Scalar> antipodal(const ExtendedPoint<Scalar>& a) {
  if (a.is_infinite()) return Complex<Scalar>{};
  const Complex<Scalar>& z = a.finite();
  if (z == Complex<Scalar>{}) return ExtendedPoint<Scalar>::infinity();
  return Complex<Scalar>(Scalar(-1) / std::conj(z));
}

/// |det[p1 − o, p2 − o, p3 − o]| / (|p1 − o||p2 − o||p3 − o|), o the sphere center.
template <typename Scalar>
Scalar coplanarity_with_center(const SpherePoint<Scalar>& p1, const SpherePoint<Scalar>& p2,
                               const SpherePoint<Scalar>& p3) {
  const SpherePoint<Scalar> o = sphere_center<Scalar>();
  const SpherePoint<Scalar> u = p1 - o, v = p2 - o, w = p3 - o;
  return std::abs(u.cross(v).dot(w)) / (u.norm() * v.norm() * w.norm());
}

/// Plane projection of the great circle through π(a), π(b): a line when
/// a, b, 0 are collinear, otherwise the circle centered at m(a, −1/conj(a), b).
template <typename Scalar>
GenCircle<Scalar> great_circle_projection(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                          Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "great_circle_projection");
  if (a == b) fail(ErrorKind::CoincidentPoints, "great_circle_projection: a = b");
  if (a == Complex<Scalar>{} || b == Complex<Scalar>{} || collinear_with_origin(a, b, eps))
    return Line<Scalar>{a, b};
  const Complex<Scalar> ab = a * std::conj(b);
  const Complex<Scalar> d = b * std::conj(a) - ab;
  const Complex<Scalar> center = (a * (Scalar(1) - norm2(b)) - b * (Scalar(1) - norm2(a))) / d;
  const Scalar radius = std::abs(a - b) * std::abs(Scalar(1) + ab) / std::abs(d);
  return Circle<Scalar>{center, radius};
}

/// Coefficients (z², z, 1) of F(z; a, b, c, d), whose zeros are the
/// intersections of the projected great circles through (a, b) and (c, d).
template <typename Scalar>
std::array<Complex<Scalar>, 3> gcis_coefficients(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                                 const Complex<Scalar>& c, const Complex<Scalar>& d) {
  const Complex<Scalar> A = std::conj(a), B = std::conj(b), C = std::conj(c), D = std::conj(d);
  const Complex<Scalar> one(1);
  const Complex<Scalar> q2 =
      (A * B * (a - b) + A - B) * (c * D - C * d) - (a * B - A * b) * (C * D * (c - d) + C - D);
  const Complex<Scalar> q1 = -(one - A * B * c * d) * (a - b) * (C - D) +
                             (one - a * b * C * D) * (A - B) * (c - d) +
                             (a - b) * (c - d) * (A * B - C * D) - (A - B) * (C - D) * (a * b - c * d);
  const Complex<Scalar> q0 =
      -(c * D - C * d) * (a * b * (A - B) + (a - b)) + (a * B - A * b) * (c * d * (C - D) + (c - d));
  return {q2, q1, q0};
}

/// Both roots of q2 z² + q1 z + q0, using the cancellation-free pair q/q2, q0/q.
/// A vanishing leading coefficient yields an infinite first root.
template <typename Scalar>
std::pair<Complex<Scalar>, Complex<Scalar>> quadratic_roots(const Complex<Scalar>& q2, const Complex<Scalar>& q1,
                                                            const Complex<Scalar>& q0) {
  const Complex<Scalar> s = aligned_sqrt(q1 * q1 - Scalar(4) * q2 * q0, q1);
  const Complex<Scalar> q = Scalar(-0.5) * (q1 + s);
  const Scalar inf = std::numeric_limits<Scalar>::infinity();
  const Complex<Scalar> r1 = q2 == Complex<Scalar>{} ? Complex<Scalar>(inf, inf) : q / q2;
  const Complex<Scalar> r2 = q == Complex<Scalar>{} ? Complex<Scalar>(inf, inf) : q0 / q;
  return {r1, r2};
}

/// Intersections of the two projected great circles, ordered (inner, outer):
/// the first has |z| <= 1 up to tolerance. When both lie on S¹ the one
/// nearer LIS[a,b,c,d] comes first.
template <typename Scalar>
std::pair<Complex<Scalar>, Complex<Scalar>> order_great_circle_roots(
    Complex<Scalar> r1, Complex<Scalar> r2, const Complex<Scalar>& a, const Complex<Scalar>& b,
    const Complex<Scalar>& c, const Complex<Scalar>& d, Scalar eps = Tolerance<Scalar>::degenerate) {
  const Scalar one(1);
  const bool in1 = is_finite(r1) && std::abs(r1) <= one + eps;
  const bool in2 = is_finite(r2) && std::abs(r2) <= one + eps;
  if (!in1 && !in2) fail(ErrorKind::NoRealIntersection, "gcis: no intersection in the closed disk");
  if (in1 && in2) {
    Complex<Scalar> hint = r1;
    try {
      hint = line_intersection(a, b, c, d);
    } catch (const GeometryError&) {
    }
    if (std::abs(r2 - hint) < std::abs(r1 - hint)) std::swap(r1, r2);
    return {r1, r2};
  }
  if (in2) std::swap(r1, r2);
  return {r1, r2};
}

template <typename Scalar>
void check_gcis_pairs(const Complex<Scalar>& a, const Complex<Scalar>& b, const Complex<Scalar>& c,
                      const Complex<Scalar>& d, Scalar eps) {
  require_finite({a, b, c, d}, "gcis");
  if (a == b || c == d) fail(ErrorKind::CoincidentPoints, "gcis: generating pair coincides");
  if (a == Complex<Scalar>{} || b == Complex<Scalar>{} || c == Complex<Scalar>{} || d == Complex<Scalar>{} ||
      collinear_with_origin(a, b, eps) || collinear_with_origin(c, d, eps))
    fail(ErrorKind::CollinearWithOrigin, "gcis: generating pair collinear with the origin");
  // Same great circle iff π(c), π(d) lie in the plane of π(a), π(b) and the center.
  const SpherePoint<Scalar> o = sphere_center<Scalar>();
  const SpherePoint<Scalar> pa = to_sphere<Scalar>(a) - o, pb = to_sphere<Scalar>(b) - o;
  const SpherePoint<Scalar> pc = to_sphere<Scalar>(c) - o, pd = to_sphere<Scalar>(d) - o;
  const SpherePoint<Scalar> n = pa.cross(pb);
  const Scalar tol = eps * n.norm();
  if (std::abs(n.dot(pc)) <= tol && std::abs(n.dot(pd)) <= tol)
    fail(ErrorKind::IdenticalGreatCircles, "gcis: both pairs span the same great circle");
}

/// Both zeros of F(z; a, b, c, d), ordered (closed-disk root, exterior root).
template <typename Scalar>
std::pair<Complex<Scalar>, Complex<Scalar>> gcis_roots(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                                       const Complex<Scalar>& c, const Complex<Scalar>& d,
                                                       Scalar eps = Tolerance<Scalar>::degenerate) {
  check_gcis_pairs(a, b, c, d, eps);
  const auto [q2, q1, q0] = gcis_coefficients(a, b, c, d);
  const auto [r1, r2] = quadratic_roots(q2, q1, q0);
  return order_great_circle_roots(r1, r2, a, b, c, d, eps);
}

/// GCIS[a,b,c,d]: the zero of F in the closed unit disk.
template <typename Scalar>
Complex<Scalar> gcis(const Complex<Scalar>& a, const Complex<Scalar>& b, const Complex<Scalar>& c,
                     const Complex<Scalar>& d, Scalar eps = Tolerance<Scalar>::degenerate) {
  return gcis_roots(a, b, c, d, eps).first;
}

/// conj(H) z² + 2 R z − H = 0. Both roots are real multiples of H.
template <typename Scalar>
struct GcisQuadratic {
  Complex<Scalar> H;
  Scalar R;
};

/// Real multipliers (inner, outer) with z = M·H. The inner root has |z| <= 1;
/// for R = 0 the inner root is +H/|H|.
template <typename Scalar>
std::pair<Scalar, Scalar> gcis_quadratic_multipliers(const GcisQuadratic<Scalar>& qd) {
  const Scalar h2 = norm2(qd.H);
  if (!(h2 > Scalar(0))) fail(ErrorKind::DegenerateInput, "gcis_quadratic: H = 0");
  const Scalar s = std::sqrt(qd.R * qd.R + h2);
  // M = (−R ± s)/|H|²; the small root in cancellation-free form.
  const Scalar inner = qd.R >= Scalar(0) ? Scalar(1) / (qd.R + s) : Scalar(-1) / (s - qd.R);
  const Scalar outer = Scalar(-1) / (h2 * inner);
  return {inner, outer};
}

template <typename Scalar>
Complex<Scalar> gcis_quadratic_solve(const GcisQuadratic<Scalar>& qd) {
  return gcis_quadratic_multipliers(qd).first * qd.H;
}

template <typename Scalar>
std::pair<Complex<Scalar>, Complex<Scalar>> gcis_quadratic_roots(const GcisQuadratic<Scalar>& qd) {
  const auto [inner, outer] = gcis_quadratic_multipliers(qd);
  return {inner * qd.H, outer * qd.H};
}

/// Plane point whose sphere image bisects the minor arc between π(a) and π(b).
template <typename Scalar>
Complex<Scalar> chordal_midpoint(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                 Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "chordal_midpoint");
  require_in_disk({a, b}, "chordal_midpoint");
  const Scalar a2 = norm2(a), b2 = norm2(b);
  const Scalar bracket = std::abs(Scalar(1) + a * std::conj(b));
  if (bracket <= eps) fail(ErrorKind::AntipodalPair, "chordal_midpoint: a is antipodal to b");
  const Scalar den = bracket * std::sqrt((Scalar(1) + a2) * (Scalar(1) + b2)) - a2 * b2 + Scalar(1);
  return (a * (Scalar(1) + b2) + b * (Scalar(1) + a2)) / den;
}

/// Projection of the great circle through π(chordal_midpoint(a,b)) orthogonal
/// to the great circle through π(a), π(b).
template <typename Scalar>
Circle<Scalar> orthogonal_great_circle(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                       Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "orthogonal_great_circle");
  const Scalar a2 = norm2(a), b2 = norm2(b);
  const Scalar den = a2 - b2;
  if (std::abs(den) <= eps * std::max({Scalar(1), a2, b2}))
    fail(ErrorKind::EqualModuli, "orthogonal_great_circle: |a| = |b|");
  const Complex<Scalar> center = (b * (Scalar(1) + a2) - a * (Scalar(1) + b2)) / den;
  const Scalar radius = std::abs(a - b) * std::sqrt((Scalar(1) + a2) * (Scalar(1) + b2)) / std::abs(den);
  return {center, radius};
}

}  // namespace diskgeom

#endif  // DISKGEOM_SPHERICAL_HPP
