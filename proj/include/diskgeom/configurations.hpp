#ifndef DISKGEOM_CONFIGURATIONS_HPP
#define DISKGEOM_CONFIGURATIONS_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "diskgeom/euclid.hpp"
#include "diskgeom/hyperbolic.hpp"
#include "diskgeom/spherical.hpp"

namespace diskgeom {

/// Six-point configuration built from two points of the punctured disk.
template <typename Scalar>
struct DiskConfig {
  Complex<Scalar> a, b;
  Complex<Scalar> a_star, b_star;  // 1/conj(a), 1/conj(b)
  Complex<Scalar> a_end, b_end;    // ends of J*[a,b] nearer a and b
};

template <typename Scalar>
DiskConfig<Scalar> build_config(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                Scalar eps = Tolerance<Scalar>::degenerate) {
  require_finite({a, b}, "build_config");
  if (a == Complex<Scalar>{} || b == Complex<Scalar>{}) fail(ErrorKind::ZeroPoint, "build_config: a and b must be nonzero");
  require_in_disk({a, b}, "build_config");
  if (a == b) fail(ErrorKind::CoincidentPoints, "build_config: a = b");
  if (collinear_with_origin(a, b, eps)) fail(ErrorKind::CollinearWithOrigin, "build_config: a, b, 0 collinear");
  const auto [a_end, b_end] = geodesic_endpoints(a, b);
  return {a, b, Scalar(1) / std::conj(a), Scalar(1) / std::conj(b), a_end, b_end};
}

/// H = a(1 − |b|²) + b(1 − |a|²), the common direction of the eleven points.
template <typename Scalar>
Complex<Scalar> h_vector(const DiskConfig<Scalar>& cfg) {
  return cfg.a * (Scalar(1) - norm2(cfg.b)) + cfg.b * (Scalar(1) - norm2(cfg.a));
}

/// Conj of Q: b(1 − |a|²)² + a|a − b|(|1 − conj(a) b| − |a − b|), the direction of p, q, p_c, q_c.
template <typename Scalar>
Complex<Scalar> q_direction(const DiskConfig<Scalar>& cfg) {
  const Scalar one_a = Scalar(1) - norm2(cfg.a);
  const Scalar m_ab = std::abs(cfg.a - cfg.b);
  const Scalar m_1 = std::abs(Scalar(1) - std::conj(cfg.a) * cfg.b);
  return cfg.b * one_a * one_a + cfg.a * m_ab * (m_1 - m_ab);
}

/// Intersection-point definitions (synthetic) vs closed forms / quadratics.
enum class Path { synthetic, closed_form };

/// One member of a point family; degenerate members carry the reason.
template <typename Scalar>
struct FamilyPoint {
  Complex<Scalar> value{};
  std::optional<ErrorKind> failure;

  bool ok() const { return !failure.has_value(); }

  const Complex<Scalar>& get() const {
    if (failure) fail(*failure, "degenerate family member");
    return value;
  }
};

template <typename Scalar>
FamilyPoint<Scalar> evaluate_member(const std::function<Complex<Scalar>()>& fn) {
  try {
    const Complex<Scalar> z = fn();
    if (!is_finite(z)) return {{}, ErrorKind::DegenerateDenominator};
    return {z, std::nullopt};
  } catch (const GeometryError& e) {
    return {{}, e.kind()};
  }
}

template <typename Scalar>
using NamedMember = std::pair<const char*, FamilyPoint<Scalar>>;

/// k, s, t, u, v of the Euclidean-line family.
template <typename Scalar>
struct EuclidFive {
  FamilyPoint<Scalar> k, s, t, u, v;

  std::array<NamedMember<Scalar>, 5> named() const {
    return {{{"k", k}, {"s", s}, {"t", t}, {"u", u}, {"v", v}}};
  }
};

/// k_c, s_c, t_c, u_c, v_c of the great-circle family.
template <typename Scalar>
struct ChordalFive {
  FamilyPoint<Scalar> kc, sc, tc, uc, vc;

  std::array<NamedMember<Scalar>, 5> named() const {
    return {{{"k_c", kc}, {"s_c", sc}, {"t_c", tc}, {"u_c", uc}, {"v_c", vc}}};
  }
};

template <typename Scalar>
struct PQFamily {
  FamilyPoint<Scalar> p, q, pc, qc;

  std::array<NamedMember<Scalar>, 4> named() const {
    return {{{"p", p}, {"q", q}, {"p_c", pc}, {"q_c", qc}}};
  }
};

namespace detail {

template <typename Scalar>
Complex<Scalar> scaled(const Complex<Scalar>& h, Scalar num, Scalar den, Scalar magnitude, const char* what) {
  if (std::abs(den) <= Tolerance<Scalar>::degenerate * std::max(Scalar(1), magnitude))
    fail(ErrorKind::DegenerateDenominator, what);
  return h * (num / den);
}

template <typename Scalar>
struct Moduli {
  Scalar a2, b2, ab2, m_ab, m_1, re_ab;
  explicit Moduli(const DiskConfig<Scalar>& cfg)
      : a2(norm2(cfg.a)),
        b2(norm2(cfg.b)),
        ab2(a2 * b2),
        m_ab(std::abs(cfg.a - cfg.b)),
        m_1(std::abs(Scalar(1) - std::conj(cfg.a) * cfg.b)),
        re_ab(dot(cfg.b, cfg.a)) {}
};

}  // namespace detail

/// Table of the real constants c_j with point = c_j·H, in the order k, s, t, u, v, m.
template <typename Scalar>
std::array<FamilyPoint<Scalar>, 6> table1_constants(const DiskConfig<Scalar>& cfg) {
  const detail::Moduli<Scalar> md(cfg);
  const Complex<Scalar> one(1);
  auto c = [&](Scalar num, Scalar den, Scalar mag) {
    return evaluate_member<Scalar>([&] { return detail::scaled(one, num, den, mag, "table1 constant"); });
  };
  const Scalar k_den = (Scalar(1) - md.ab2) * md.m_ab + (Scalar(2) * md.ab2 - (md.a2 + md.b2)) * md.m_1;
  const Scalar s_den = Scalar(2) - Scalar(2) * md.re_ab - md.m_ab * md.m_1;
  const Scalar t_den = Scalar(2) * md.re_ab - Scalar(2) * md.ab2 + md.m_ab * md.m_1;
  const Scalar u_den = Scalar(1) - md.ab2;
  const Scalar v_den = (Scalar(2) - (md.a2 + md.b2)) * md.m_1 - (Scalar(1) - md.ab2) * md.m_ab;
  const Scalar m_den = Scalar(1) - md.ab2 + md.m_1 * std::sqrt((Scalar(1) - md.a2) * (Scalar(1) - md.b2));
  return {c(md.m_ab - md.m_1, k_den, Scalar(2)),
          c(Scalar(1), s_den, Scalar(2)),
          c(Scalar(1), t_den, Scalar(2)),
          c(Scalar(1), u_den, Scalar(1)),
          c(md.m_1 - md.m_ab, v_den, Scalar(2)),
          c(Scalar(1), m_den, Scalar(2))};
}

template <typename Scalar>
EuclidFive<Scalar> five_points_euclid(const DiskConfig<Scalar>& cfg, Path path) {
  const auto& [a, b, as, bs, ae, be] = cfg;
  if (path == Path::synthetic) {
    auto lis = [](Complex<Scalar> p1, Complex<Scalar> p2, Complex<Scalar> p3, Complex<Scalar> p4) {
      return evaluate_member<Scalar>([&] { return line_intersection(p1, p2, p3, p4); });
    };
    return {lis(ae, as, be, bs), lis(a, be, b, ae), lis(ae, bs, be, as), lis(a, bs, b, as), lis(a, ae, b, be)};
  }
  const Complex<Scalar> h = h_vector(cfg);
  const auto c = table1_constants(cfg);
  auto times_h = [&](const FamilyPoint<Scalar>& cj) {
    return cj.ok() ? FamilyPoint<Scalar>{cj.value.real() * h, std::nullopt} : cj;
  };
  return {times_h(c[0]), times_h(c[1]), times_h(c[2]), times_h(c[3]), times_h(c[4])};
}

/// Coefficients R of H̄z² + 2Rz − H = 0 for k_c, s_c, t_c, u_c, v_c.
template <typename Scalar>
std::array<FamilyPoint<Scalar>, 5> table2_coefficients(const DiskConfig<Scalar>& cfg,
                                                       Scalar near_boundary = Scalar(1e-10)) {
  const detail::Moduli<Scalar> md(cfg);
  const Scalar gap = md.m_1 - md.m_ab;
  const Scalar p = (Scalar(1) - md.a2) * (Scalar(1) - md.b2) * md.m_1;
  auto coefficient = [&](Scalar r) { return FamilyPoint<Scalar>{Complex<Scalar>(r), std::nullopt}; };
  const FamilyPoint<Scalar> boundary{{}, ErrorKind::NearBoundary};
  const bool near = std::abs(gap) <= near_boundary;
  return {near ? boundary : coefficient(-p / gap), coefficient(md.m_1 * gap), coefficient(-md.m_1 * gap),
          coefficient(Scalar(0)), near ? boundary : coefficient(p / gap)};
}

template <typename Scalar>
ChordalFive<Scalar> five_points_chordal(const DiskConfig<Scalar>& cfg, Path path) {
  const auto& [a, b, as, bs, ae, be] = cfg;
  if (path == Path::synthetic) {
    auto g = [](Complex<Scalar> p1, Complex<Scalar> p2, Complex<Scalar> p3, Complex<Scalar> p4) {
      return evaluate_member<Scalar>([&] { return gcis(p1, p2, p3, p4); });
    };
    return {g(ae, as, be, bs), g(a, be, b, ae), g(ae, bs, be, as), g(a, bs, b, as), g(a, ae, b, be)};
  }
  const Complex<Scalar> h = h_vector(cfg);
  const auto r = table2_coefficients(cfg);
  auto solve = [&](const FamilyPoint<Scalar>& rj) {
    if (!rj.ok()) return rj;
    return evaluate_member<Scalar>([&] { return gcis_quadratic_solve(GcisQuadratic<Scalar>{h, rj.value.real()}); });
  };
  return {solve(r[0]), solve(r[1]), solve(r[2]), solve(r[3]), solve(r[4])};
}

/// Coefficients of the p_c / q_c quadratics: Q z² ∓ R z − conj(Q) = 0.
template <typename Scalar>
std::pair<Complex<Scalar>, Scalar> pq_quadratic(const DiskConfig<Scalar>& cfg) {
  const detail::Moduli<Scalar> md(cfg);
  const Scalar r = (Scalar(1) - md.a2) * md.m_1 * (md.m_ab - md.m_1);
  return {std::conj(q_direction(cfg)), r};
}

/// p = LIS[a,b_*,a*,b], q = LIS[a,b*,a*,b_*] and their great-circle versions.
/// p_c is the closed-disk intersection, q_c the exterior one; both lie on the
/// ray from 0 through conj(Q), like p and q.
template <typename Scalar>
PQFamily<Scalar> pq_family(const DiskConfig<Scalar>& cfg, Path path) {
  const auto& [a, b, as, bs, ae, be] = cfg;
  if (path == Path::synthetic) {
    return {evaluate_member<Scalar>([&] { return line_intersection(a, be, as, b); }),
            evaluate_member<Scalar>([&] { return line_intersection(a, bs, as, be); }),
            evaluate_member<Scalar>([&] { return gcis(a, be, as, b); }),
            evaluate_member<Scalar>([&] { return gcis_roots(a, bs, as, be).second; })};
  }
  const detail::Moduli<Scalar> md(cfg);
  const Complex<Scalar> dir = q_direction(cfg);
  const Scalar one_a = Scalar(1) - md.a2;
  const Scalar tail = md.m_ab * (md.m_1 - md.m_ab);
  auto ratio = [&](Scalar den, const char* what) {
    return evaluate_member<Scalar>([&] { return detail::scaled(dir, Scalar(1), den, Scalar(1), what); });
  };
  const FamilyPoint<Scalar> p = ratio(one_a * one_a + md.a2 * tail, "p denominator");
  const FamilyPoint<Scalar> q = ratio(md.b2 * one_a * one_a + tail, "q denominator");
  const auto [Q, R] = pq_quadratic(cfg);
  const Scalar q2 = norm2(Q);
  const Scalar s = std::sqrt(R * R + Scalar(4) * q2);
  // Positive roots M of |Q|² M² ∓ R M − 1 = 0, each in cancellation-free form.
  auto positive_root = [&](Scalar r) {
    return evaluate_member<Scalar>([&] {
      if (!(q2 > Scalar(0))) fail(ErrorKind::DegenerateDenominator, "pq_family: Q = 0");
      const Scalar m = r >= Scalar(0) ? (r + s) / (Scalar(2) * q2) : Scalar(2) / (s - r);
      return m * dir;
    });
  };
  return {p, q, positive_root(R), positive_root(-R)};
}

/// Max over pairs of |Im(z_i conj(z_j))| / max(1, |z_i||z_j|) after
/// translating by the first point. Zero for exactly collinear points.
template <typename Scalar>
Scalar collinearity_residual(std::span<const Complex<Scalar>> points) {
  if (points.size() < 2) fail(ErrorKind::DegenerateInput, "collinearity_residual: need at least two points");
  const Complex<Scalar> origin = points.front();
  Scalar worst(0);
  for (std::size_t i = 1; i < points.size(); ++i) {
    const Complex<Scalar> zi = points[i] - origin;
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      const Complex<Scalar> zj = points[j] - origin;
      const Scalar r = std::abs(cross(zj, zi)) / std::max(Scalar(1), std::abs(zi) * std::abs(zj));
      worst = std::max(worst, r);
    }
  }
  return worst;
}

template <typename Scalar>
Scalar collinearity_residual(std::initializer_list<Complex<Scalar>> points) {
  return collinearity_residual(std::span<const Complex<Scalar>>(points.begin(), points.size()));
}

/// |Im(z conj(dir))| / (|z||dir|): zero when z is a real multiple of dir.
template <typename Scalar>
Scalar real_multiple_residual(const Complex<Scalar>& z, const Complex<Scalar>& dir) {
  const Scalar n = std::abs(z) * std::abs(dir);
  return n == Scalar(0) ? Scalar(0) : std::abs(cross(dir, z)) / n;
}

/// All named points of one configuration.
template <typename Scalar>
struct PointFamily {
  EuclidFive<Scalar> euclid;
  FamilyPoint<Scalar> m;
  ChordalFive<Scalar> chordal;
  PQFamily<Scalar> pq;

  /// Keys in output order: k, s, t, u, v, m, k_c, ..., v_c, p, q, p_c, q_c.
  std::vector<NamedMember<Scalar>> named() const {
    std::vector<NamedMember<Scalar>> out;
    for (const auto& e : euclid.named()) out.push_back(e);
    out.emplace_back("m", m);
    for (const auto& e : chordal.named()) out.push_back(e);
    for (const auto& e : pq.named()) out.push_back(e);
    return out;
  }

  /// k, m, s, t, u, v, k_c, s_c, t_c, u_c, v_c
  std::array<FamilyPoint<Scalar>, 11> eleven() const {
    return {euclid.k, m, euclid.s, euclid.t, euclid.u, euclid.v,
            chordal.kc, chordal.sc, chordal.tc, chordal.uc, chordal.vc};
  }
};

template <typename Scalar>
PointFamily<Scalar> point_family(const DiskConfig<Scalar>& cfg, Path path) {
  return {five_points_euclid(cfg, path),
          evaluate_member<Scalar>([&] { return hyperbolic_midpoint(cfg.a, cfg.b); }),
          five_points_chordal(cfg, path), pq_family(cfg, path)};
}

template <typename Scalar>
struct ElevenPoints {
  DiskConfig<Scalar> config;
  PointFamily<Scalar> family;
  Scalar residual;  // collinearity of the eleven points and the origin
};

/// Builds the configuration, evaluates every family member and the
/// collinearity residual of the eleven H-family points with the origin.
/// A degenerate member among the eleven is rethrown.
template <typename Scalar>
ElevenPoints<Scalar> eleven_points(const Complex<Scalar>& a, const Complex<Scalar>& b,
                                   Path path = Path::synthetic) {
  const DiskConfig<Scalar> cfg = build_config(a, b);
  PointFamily<Scalar> family = point_family(cfg, path);
  std::vector<Complex<Scalar>> pts{Complex<Scalar>{}};
  for (const auto& member : family.eleven()) pts.push_back(member.get());
  const Scalar residual = collinearity_residual(std::span<const Complex<Scalar>>(pts));
  return {cfg, std::move(family), residual};
}

}  // namespace diskgeom

#endif  // DISKGEOM_CONFIGURATIONS_HPP
