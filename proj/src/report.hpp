#ifndef DISKGEOM_REPORT_HPP
#define DISKGEOM_REPORT_HPP

#include <optional>
#include <string>

#include <json.hpp>

#include "verify.hpp"

namespace diskgeom::report {

using Json = nlohmann::ordered_json;
using Point = Complex<double>;

/// Parses `R`, `Bi`, `A+Bi`, `A-Bi` or `R@T` (polar, radians).
/// Throws std::invalid_argument on anything else.
Point parse_complex(const std::string& text);

/// `A+Bi` with 17 significant digits; parse_complex inverts it exactly.
std::string format_complex(const Point& z);

Json point_json(const Point& z);
Json point_json(const FamilyPoint<double>& p);
Json input_json(const Point& z);  // cartesian and polar echo

struct PointsResult {
  Json document;
  bool within_tolerance;
};

/// Every named point of the configuration (a, b) plus collinearity residuals.
/// Throws GeometryError when (a, b) is not a valid configuration.
PointsResult points_report(const Point& a, const Point& b, double tol);

Json sample_json(const verify::Sample& s);
Json verification_json(const verify::VerificationReport& r, bool include_timing = true);
Json conjecture_json(const verify::ConjectureReport& r, bool include_timing = true);

/// Value of DISKGEOM_TOL, when set. Throws std::invalid_argument if malformed.
std::optional<double> tolerance_from_env();

}  // namespace diskgeom::report

#endif  // DISKGEOM_REPORT_HPP
