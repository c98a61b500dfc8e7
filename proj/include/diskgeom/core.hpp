#ifndef DISKGEOM_CORE_HPP
#define DISKGEOM_CORE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>

namespace diskgeom {

template <typename Scalar>
using Complex = std::complex<Scalar>;

enum class ErrorKind {
  ParallelLines,
  DegenerateInput,
  DegenerateModuli,
  CollinearWithOrigin,
  ChordOutsideDisk,
  CollinearPoints,
  ParallelChords,
  ConcentricCircles,
  OutsideDisk,
  PoleHit,
  CoincidentPoints,
  DegenerateDenominator,
  NoInDiskRoot,
  EqualModuli,
  OriginIntersection,
  InvalidOrdering,
  NotOnUnitCircle,
  IdenticalGreatCircles,
  NoRealIntersection,
  NearBoundary,
  AntipodalPair,
  ZeroPoint,
};

constexpr const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParallelLines: return "ParallelLines";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::DegenerateModuli: return "DegenerateModuli";
    case ErrorKind::CollinearWithOrigin: return "CollinearWithOrigin";
    case ErrorKind::ChordOutsideDisk: return "ChordOutsideDisk";
    case ErrorKind::CollinearPoints: return "CollinearPoints";
    case ErrorKind::ParallelChords: return "ParallelChords";
    case ErrorKind::ConcentricCircles: return "ConcentricCircles";
    case ErrorKind::OutsideDisk: return "OutsideDisk";
    case ErrorKind::PoleHit: return "PoleHit";
    case ErrorKind::CoincidentPoints: return "CoincidentPoints";
    case ErrorKind::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorKind::NoInDiskRoot: return "NoInDiskRoot";
    case ErrorKind::EqualModuli: return "EqualModuli";
    case ErrorKind::OriginIntersection: return "OriginIntersection";
    case ErrorKind::InvalidOrdering: return "InvalidOrdering";
    case ErrorKind::NotOnUnitCircle: return "NotOnUnitCircle";
    case ErrorKind::IdenticalGreatCircles: return "IdenticalGreatCircles";
    case ErrorKind::NoRealIntersection: return "NoRealIntersection";
    case ErrorKind::NearBoundary: return "NearBoundary";
    case ErrorKind::AntipodalPair: return "AntipodalPair";
    case ErrorKind::ZeroPoint: return "ZeroPoint";
  }
  return "Unknown";
}

/// Raised by every kernel operation whose precondition fails.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
  throw GeometryError(kind, detail);
}

/// Default thresholds. `degenerate` guards denominators, `identity` is the
/// acceptance level for algebraic identities, `involution` for exact maps.
template <typename Scalar>
struct Tolerance {
  static constexpr Scalar degenerate =
      std::max(Scalar(1e-12), Scalar(64) * std::numeric_limits<Scalar>::epsilon());
  static constexpr Scalar identity =
      std::max(Scalar(1e-9), Scalar(1024) * std::numeric_limits<Scalar>::epsilon());
  static constexpr Scalar involution = degenerate;
};

/// Extended complex plane: a finite point or the point at infinity.
template <typename Scalar>
class ExtendedPoint {
 public:
  ExtendedPoint(Complex<Scalar> z) : z_(z), infinite_(false) {}  // NOLINT(implicit)
  ExtendedPoint(Scalar x) : z_(x, Scalar(0)), infinite_(false) {}  // NOLINT(implicit)

  static ExtendedPoint infinity() {
    ExtendedPoint p(Complex<Scalar>{});
    p.infinite_ = true;
    return p;
  }

  bool is_infinite() const { return infinite_; }

  const Complex<Scalar>& finite() const {
    if (infinite_) fail(ErrorKind::DegenerateInput, "point at infinity where a finite point is required");
    return z_;
  }

  friend bool operator==(const ExtendedPoint& x, const ExtendedPoint& y) {
    if (x.infinite_ || y.infinite_) return x.infinite_ == y.infinite_;
    return x.z_ == y.z_;
  }

 private:
  Complex<Scalar> z_;
  bool infinite_;
};

template <typename Scalar>
inline Scalar norm2(const Complex<Scalar>& z) {
  return std::norm(z);
}

/// Im(conj(x) y): twice the signed area of (0, x, y).
template <typename Scalar>
inline Scalar cross(const Complex<Scalar>& x, const Complex<Scalar>& y) {
  return x.real() * y.imag() - x.imag() * y.real();
}

/// Re(conj(x) y).
template <typename Scalar>
inline Scalar dot(const Complex<Scalar>& x, const Complex<Scalar>& y) {
  return x.real() * y.real() + x.imag() * y.imag();
}

/// max(1, |z_1|, ..., |z_n|)
template <typename Scalar>
inline Scalar scale_of(std::initializer_list<Complex<Scalar>> points) {
  Scalar s(1);
  for (const auto& z : points) s = std::max(s, std::abs(z));
  return s;
}

template <typename Scalar>
inline bool is_finite(const Complex<Scalar>& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

template <typename Scalar>
inline void require_finite(std::initializer_list<Complex<Scalar>> points, const char* where) {
  for (const auto& z : points)
    if (!is_finite(z)) fail(ErrorKind::DegenerateInput, std::string(where) + ": non-finite input");
}

template <typename Scalar>
inline void require_in_disk(std::initializer_list<Complex<Scalar>> points, const char* where) {
  for (const auto& z : points)
    if (!(std::abs(z) < Scalar(1))) fail(ErrorKind::OutsideDisk, std::string(where) + ": point not in the open unit disk");
}

/// True when 0, x, y are collinear up to a relative (sine) tolerance.
template <typename Scalar>
inline bool collinear_with_origin(const Complex<Scalar>& x, const Complex<Scalar>& y,
                                  Scalar eps = Tolerance<Scalar>::degenerate) {
  return std::abs(cross(x, y)) <= eps * std::abs(x) * std::abs(y);
}

/// Principal square root with the branch chosen so that Re(conj(ref) * s) >= 0.
template <typename Scalar>
inline Complex<Scalar> aligned_sqrt(const Complex<Scalar>& w, const Complex<Scalar>& ref) {
  Complex<Scalar> s = std::sqrt(w);
  return dot(ref, s) < Scalar(0) ? -s : s;
}

}  // namespace diskgeom

#endif  // DISKGEOM_CORE_HPP
