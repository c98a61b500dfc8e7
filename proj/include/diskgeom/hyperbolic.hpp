#ifndef DISKGEOM_HYPERBOLIC_HPP
#define DISKGEOM_HYPERBOLIC_HPP

#include <array>
#include <numbers>
#include <utility>

#include "diskgeom/euclid.hpp"
#include "diskgeom/spherical.hpp"

namespace diskgeom {

/// Hyperbolic line J*[a,b]: a diameter (Line) or a circle orthogonal to S¹.
template <typename Scalar>
struct Geodesic {
  GenCircle<Scalar> curve;
  Complex<Scalar> a;
  Complex<Scalar> b;
};

/// A[x, y] = |1 − x conj(y)|.
template <typename Scalar>
Scalar ahlfors_bracket(const Complex<Scalar>& x, const Complex<Scalar>& y) {
  return std::abs(Scalar(1) - x * std::conj(y));
}

/// Hyperbolic distance in the unit disk, from th(ρ/2) = |x − y| / A[x, y].
template <typename Scalar>
Scalar rho(const Complex<Scalar>& x, const Complex<Scalar>& y) {
  require_finite({x, y}, "rho");
  require_in_disk({x, y}, "rho");
  return Scalar(2) * std::atanh(std::abs(x - y) / ahlfors_bracket(x, y));
}

/// T_a(z) = (z − a) / (1 − conj(a) z). a = 0 gives the identity.
template <typename Scalar>
Complex<Scalar> mobius_T(const Complex<Scalar>& a, const Complex<Scalar>& z) {
  require_finite({a, z}, "mobius_T");
  require_in_disk({a}, "mobius_T");
  const Complex<Scalar> den = Scalar(1) - std::conj(a) * z;
  if (std::abs(den) <= Scalar(1e-15)) fail(ErrorKind::PoleHit, "mobius_T: z is the pole 1/conj(a)");
  return (z - a) / den;
}

/// |a, b, c, d| = q(a,c) q(b,d) / (q(a,b) q(c,d)) on the extended plane.
template <typename Scalar>
Scalar absolute_ratio(const ExtendedPoint<Scalar>& a, const ExtendedPoint<Scalar>& b,
                      const ExtendedPoint<Scalar>& c, const ExtendedPoint<Scalar>& d) {
  const std::array<ExtendedPoint<Scalar>, 4> pts{a, b, c, d};
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = i + 1; j < 4; ++j)
      if (chordal_distance(pts[i], pts[j]) == Scalar(0))
        fail(ErrorKind::CoincidentPoints, "absolute_ratio: points must be distinct");
  return chordal_distance(a, c) * chordal_distance(b, d) / (chordal_distance(a, b) * chordal_distance(c, d));
}

/// ep(a, b) = T_{−b}(T_b(a) / |T_b(a)|): endpoint of J*[a,b] beyond a.
template <typename Scalar>
Complex<Scalar> geodesic_endpoint_by_composition(const Complex<Scalar>& a, const Complex<Scalar>& b) {
  const Complex<Scalar> w = mobius_T(b, a);
  if (w == Complex<Scalar>{}) fail(ErrorKind::CoincidentPoints, "geodesic_endpoint_by_composition: a = b");
  return mobius_T(Complex<Scalar>(-b), w / std::abs(w));
}

/// (a_*, b_*): the ends of J*[a,b] on S¹ nearer a and b respectively.
template <typename Scalar>
std::pair<Complex<Scalar>, Complex<Scalar>> geodesic_endpoints(const Complex<Scalar>& a,
                                                               const Complex<Scalar>& b) {
  require_finite({a, b}, "geodesic_endpoints");
  require_in_disk({a, b}, "geodesic_endpoints");
  if (a == b) fail(ErrorKind::CoincidentPoints, "geodesic_endpoints: a = b");
  const Scalar m_ab = std::abs(a - b);
  const Scalar m_1 = std::abs(Scalar(1) - a * std::conj(b));
  const Complex<Scalar> one_ab = Scalar(1) - a * std::conj(b);
  const Complex<Scalar> one_ba = Scalar(1) - std::conj(a) * b;
  const Complex<Scalar> a_end =
      (b * one_ab * m_ab + (a - b) * m_1) / (one_ab * m_ab + std::conj(b) * (a - b) * m_1);
  const Complex<Scalar> b_end =
      (a * one_ba * m_ab + (b - a) * m_1) / (one_ba * m_ab + std::conj(a) * (b - a) * m_1);
  return {a_end, b_end};
}

template <typename Scalar>
Geodesic<Scalar> hyperbolic_line(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                 Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "hyperbolic_line");
  require_in_disk({a, b}, "hyperbolic_line");
  if (a == b) fail(ErrorKind::CoincidentPoints, "hyperbolic_line: a = b");
  const Complex<Scalar> zero{};
  if (a == zero || b == zero || collinear_with_origin(a, b, eps)) {
    const Complex<Scalar> far = std::abs(a) >= std::abs(b) ? a : b;
    const Complex<Scalar> dir = far / std::abs(far);
    return {Line<Scalar>{-dir, dir}, a, b};
  }
  const Complex<Scalar> center = circumcenter_with_inversion(a, b, Inversion::reflection, eps);
  return {Circle<Scalar>{center, std::abs(a - center)}, a, b};
}

/// Closed-form hyperbolic midpoint.
template <typename Scalar>
Complex<Scalar> hyperbolic_midpoint(const Complex<Scalar>& x, const Complex<Scalar>& y) {
  require_finite({x, y}, "hyperbolic_midpoint");
  require_in_disk({x, y}, "hyperbolic_midpoint");
  if (x == y) return x;
  const Scalar x2 = norm2(x), y2 = norm2(y);
  const Scalar den =
      Scalar(1) - x2 * y2 + ahlfors_bracket(x, y) * std::sqrt((Scalar(1) - x2) * (Scalar(1) - y2));
  return (y * (Scalar(1) - x2) + x * (Scalar(1) - y2)) / den;
}

/// Throws unless a, b, c, d are on S¹ and met in this order counterclockwise.
template <typename Scalar>
void check_cyclic_order(const Complex<Scalar>& a, const Complex<Scalar>& b, const Complex<Scalar>& c,
                        const Complex<Scalar>& d, Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b, c, d}, "check_cyclic_order");
  for (const auto& z : {a, b, c, d})
    if (std::abs(std::abs(z) - Scalar(1)) > eps) fail(ErrorKind::NotOnUnitCircle, "point not on S¹");
  constexpr Scalar two_pi = Scalar(2) * std::numbers::pi_v<Scalar>;
  auto angle_from_a = [&](const Complex<Scalar>& z) {
    Scalar t = std::arg(z * std::conj(a));
    return t < Scalar(0) ? t + two_pi : t;
  };
  const Scalar tb = angle_from_a(b), tc = angle_from_a(c), td = angle_from_a(d);
  if (!(Scalar(0) < tb && tb < tc && tc < td && td < two_pi))
    fail(ErrorKind::InvalidOrdering, "points are not in positive cyclic order");
}

/// J*[a,c] ∩ J*[b,d] for a, b, c, d on S¹ in cyclic order.
///
/// The two candidates ((ac − bd) ± √P) / (a − b + c − d) have product
/// (abc − abd + acd − bcd) / (a − b + c − d), so the in-disk one is evaluated
/// as (abc − abd + acd − bcd) / N with N the larger numerator. This stays
/// finite when a − b + c − d vanishes.
template <typename Scalar>
Complex<Scalar> geodesic_intersection_on_circle(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                                const Complex<Scalar>& c, const Complex<Scalar>& d,
                                                Scalar eps = Tolerance<Scalar>::degenerate) {
  check_cyclic_order(a, b, c, d, eps);
  const Complex<Scalar> den = a - b + c - d;
  const Complex<Scalar> p = (a - b) * (b - c) * (c - d) * (d - a);
  const Complex<Scalar> base = a * c - b * d;
  const Complex<Scalar> s = aligned_sqrt(p, base);
  const Complex<Scalar> big = base + s;
  if (std::abs(big) <= eps) fail(ErrorKind::DegenerateDenominator, "geodesic_intersection_on_circle: 0/0");
  const Complex<Scalar> g = a * b * c - a * b * d + a * c * d - b * c * d;
  const Complex<Scalar> inner = g / big;
  const Scalar one(1);
  const bool inner_ok = std::abs(inner) < one - eps;
  bool outer_ok = false;
  if (std::abs(den) > eps * std::abs(big)) outer_ok = std::abs(big / den) < one - eps;
  if (inner_ok == outer_ok) fail(ErrorKind::NoInDiskRoot, "geodesic_intersection_on_circle: ambiguous root");
  return inner_ok ? inner : big / den;
}

/// Intersection of the altitudes of a triangle.
template <typename Scalar>
Complex<Scalar> orthocenter(const Complex<Scalar>& p1, const Complex<Scalar>& p2, const Complex<Scalar>& p3,
                            Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({p1, p2, p3}, "orthocenter");
  if (std::abs(cross(p2 - p1, p3 - p1)) <= eps * std::abs(p2 - p1) * std::abs(p3 - p1))
    fail(ErrorKind::CollinearPoints, "orthocenter: degenerate triangle");
  const Complex<Scalar> i(0, 1);
  return line_intersection<Scalar>(p1, p1 + i * (p3 - p2), p2, p2 + i * (p3 - p1), eps);
}

namespace detail {

template <typename Scalar>
Complex<Scalar> in_disk_point(const std::optional<std::pair<Complex<Scalar>, Complex<Scalar>>>& hits,
                              const char* where) {
  if (!hits) fail(ErrorKind::NoRealIntersection, std::string(where) + ": curves do not meet");
  return std::abs(hits->first) <= std::abs(hits->second) ? hits->first : hits->second;
}

}  // namespace detail

/// Midpoint from the lens construction: the diameter [−u, u] through the
/// intersections of S¹ with the great circle through a and 1/conj(b) cuts
/// J*[a,b] at the midpoint.
template <typename Scalar>
Complex<Scalar> midpoint_via_lens(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                  Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "midpoint_via_lens");
  require_in_disk({a, b}, "midpoint_via_lens");
  if (a == Complex<Scalar>{} || b == Complex<Scalar>{} || collinear_with_origin(a, b, eps))
    fail(ErrorKind::CollinearWithOrigin, "midpoint_via_lens: a, b, 0 collinear");
  const Complex<Scalar> b_star = Scalar(1) / std::conj(b);
  const Complex<Scalar> c = circumcenter_with_inversion(a, b_star, Inversion::antipodal, eps);
  const auto ends = circle_circle_intersection(Circle<Scalar>{{}, Scalar(1)}, Circle<Scalar>{c, std::abs(a - c)}, eps);
  if (!ends) fail(ErrorKind::NoRealIntersection, "midpoint_via_lens: great circle misses S¹");
  const Complex<Scalar> u = ends->first;
  const Complex<Scalar> v = circumcenter(a, b, Scalar(1) / std::conj(a), eps);
  const Circle<Scalar> geodesic{v, std::abs(a - v)};
  return detail::in_disk_point(line_circle_intersection(Line<Scalar>{-u, u}, geodesic, eps), "midpoint_via_lens");
}

/// Midpoint from the inversion construction: J*[a,b] ∩ S¹(c, √(|c|² − 1))
/// with c = LIS[a, b, a_*, b_*].
template <typename Scalar>
Complex<Scalar> midpoint_via_inversion(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                       Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "midpoint_via_inversion");
  require_in_disk({a, b}, "midpoint_via_inversion");
  if (a == Complex<Scalar>{} || b == Complex<Scalar>{} || collinear_with_origin(a, b, eps))
    fail(ErrorKind::CollinearWithOrigin, "midpoint_via_inversion: a, b, 0 collinear");
  if (std::abs(std::abs(a) - std::abs(b)) <= eps)
    fail(ErrorKind::EqualModuli, "midpoint_via_inversion: |a| = |b|, L[a,b] parallel to L[a_*,b_*]");
  const auto [a_end, b_end] = geodesic_endpoints(a, b);
  const Complex<Scalar> c = line_intersection(a, b, a_end, b_end, eps);
  const Scalar r2 = norm2(c) - Scalar(1);
  if (!(r2 > Scalar(0))) fail(ErrorKind::DegenerateInput, "midpoint_via_inversion: center inside the disk");
  const Complex<Scalar> v = circumcenter_with_inversion(a, b, Inversion::reflection, eps);
  const auto hits = circle_circle_intersection(Circle<Scalar>{v, std::abs(a - v)}, Circle<Scalar>{c, std::sqrt(r2)}, eps);
  return detail::in_disk_point(hits, "midpoint_via_inversion");
}

/// c = LIS[a, b, a_*, b_*], the center of the inversion circle.
template <typename Scalar>
Complex<Scalar> inversion_center(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                 Scalar eps = Tolerance<Scalar>::degenerate) {
  const auto [a_end, b_end] = geodesic_endpoints(a, b);
  return line_intersection(a, b, a_end, b_end, eps);
}

template <typename Scalar>
struct ChordAndGeodesic {
  Complex<Scalar> f;  // L[a,c] ∩ L[b,d]
  Complex<Scalar> m;  // J*[a,c] ∩ J*[b,d]
};

template <typename Scalar>
ChordAndGeodesic<Scalar> chord_vs_geodesic_midpoint(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                                    const Complex<Scalar>& c, const Complex<Scalar>& d,
                                                    Scalar eps = Tolerance<Scalar>::degenerate) {
  check_cyclic_order(a, b, c, d, eps);
  const Complex<Scalar> f = line_intersection(a, c, b, d, eps);
  if (std::abs(f) <= eps) fail(ErrorKind::OriginIntersection, "chord_vs_geodesic_midpoint: f = 0");
  return {f, geodesic_intersection_on_circle(a, b, c, d, eps)};
}

}  // namespace diskgeom

#endif  // DISKGEOM_HYPERBOLIC_HPP
