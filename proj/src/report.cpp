#include "report.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace diskgeom::report {

namespace {

double parse_real(const std::string& s, const std::string& whole) {
  if (s.empty() || std::isspace(static_cast<unsigned char>(s.front())))
    throw std::invalid_argument("malformed complex literal '" + whole + "'");
  char* end = nullptr;
  const double x = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(x))
    throw std::invalid_argument("malformed complex literal '" + whole + "'");
  return x;
}

// Coefficient of i: "" and "+" mean 1, "-" means −1.
double parse_imag(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return 1;
  if (s == "-") return -1;
  return parse_real(s, whole);
}

std::string g17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json residual_json(const std::optional<double>& r) { return r ? Json(*r) : Json(nullptr); }

}  // namespace

Point parse_complex(const std::string& text) {
  const std::string s = text;
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (const auto at = s.find('@'); at != std::string::npos) {
    const double r = parse_real(s.substr(0, at), text);
    const double t = parse_real(s.substr(at + 1), text);
    return std::polar(r, t);
  }
  if (s.back() != 'i') return {parse_real(s, text), 0};
  const std::string body = s.substr(0, s.size() - 1);
  // Split at the last sign that does not belong to an exponent.
  for (std::size_t pos = body.size(); pos-- > 1;) {
    if (body[pos] != '+' && body[pos] != '-') continue;
    if (body[pos - 1] == 'e' || body[pos - 1] == 'E') continue;
    return {parse_real(body.substr(0, pos), text), parse_imag(body.substr(pos), text)};
  }
  return {0, parse_imag(body, text)};
}

std::string format_complex(const Point& z) {
  const bool negative = std::signbit(z.imag());
  return g17(z.real()) + (negative ? "-" : "+") + g17(std::abs(z.imag())) + "i";
}

Json point_json(const Point& z) {
  return Json{{"re", z.real()}, {"im", z.imag()}, {"text", format_complex(z)}, {"status", "ok"}};
}

Json point_json(const FamilyPoint<double>& p) {
  if (p.ok()) return point_json(p.value);
  return Json{{"re", nullptr}, {"im", nullptr}, {"text", nullptr}, {"status", to_string(*p.failure)}};
}

Json input_json(const Point& z) {
  Json j = point_json(z);
  j.erase("status");
  j["modulus"] = std::abs(z);
  j["argument"] = std::arg(z);
  return j;
}

PointsResult points_report(const Point& a, const Point& b, double tol) {
  const DiskConfig<double> cfg = build_config(a, b);
  const PointFamily<double> family = point_family(cfg, Path::synthetic);
  const PointFamily<double> closed = point_family(cfg, Path::closed_form);
  const Point h = h_vector(cfg);

  Json points = Json::object();
  for (const auto& [name, p] : family.named()) points[name] = point_json(p);
  points["a_star"] = point_json(cfg.a_star);
  points["b_star"] = point_json(cfg.b_star);
  points["a_end"] = point_json(cfg.a_end);
  points["b_end"] = point_json(cfg.b_end);
  points["H"] = point_json(h);

  std::optional<double> eleven, pq, dual;
  std::vector<Point> line{Point{}};
  bool complete = true;
  for (const auto& p : family.eleven()) {
    if (p.ok())
      line.push_back(p.value);
    else
      complete = false;
  }
  if (complete) eleven = collinearity_residual<double>(line);
  const auto pq_members = family.pq.named();
  if (std::all_of(pq_members.begin(), pq_members.end(), [](const auto& m) { return m.second.ok(); }))
    pq = collinearity_residual<double>({Point{}, family.pq.p.value, family.pq.q.value, family.pq.pc.value,
                                        family.pq.qc.value});
  const auto syn = family.named();
  const auto cf = closed.named();
  for (std::size_t i = 0; i < syn.size(); ++i) {
    if (!syn[i].second.ok() || !cf[i].second.ok()) continue;
    const double d = std::abs(syn[i].second.value - cf[i].second.value) / std::max(1.0, std::abs(cf[i].second.value));
    dual = std::max(dual.value_or(0.0), d);
  }

  Json doc{{"input", {{"a", input_json(a)}, {"b", input_json(b)}}},
           {"points", points},
           {"residuals",
            {{"eleven_with_origin", residual_json(eleven)},
             {"pq_with_origin", residual_json(pq)},
             {"dual_path", residual_json(dual)}}},
           {"tolerance", tol}};
  const bool ok = eleven && pq && *eleven <= tol && *pq <= tol;
  doc["within_tolerance"] = ok;
  return {doc, ok};
}

Json sample_json(const verify::Sample& s) {
  Json j = Json::object();
  for (const auto& in : s.inputs) {
    if (in.value.is_infinite())
      j[in.name] = Json{{"re", nullptr}, {"im", nullptr}, {"text", "inf"}};
    else
      j[in.name] = Json{{"re", in.value.finite().real()}, {"im", in.value.finite().imag()},
                        {"text", format_complex(in.value.finite())}};
  }
  return j;
}

Json verification_json(const verify::VerificationReport& r, bool include_timing) {
  Json j{{"theorem", r.theorem},
         {"sampler", verify::to_string(r.spec.sampler)},
         {"seed", r.spec.seed},
         {"requested", r.spec.count},
         {"evaluated", r.evaluated},
         {"skipped", r.skipped},
         {"margins",
          {{"min_modulus", r.spec.margins.min_modulus},
           {"boundary", r.spec.margins.boundary},
           {"min_angle", r.spec.margins.min_angle},
           {"min_gap", r.spec.margins.min_gap},
           {"modulus_gap", r.spec.margins.modulus_gap}}},
         {"max_residual", r.max_residual},
         {"mean_residual", r.mean_residual},
         {"tolerance", r.tolerance},
         {"pass", r.pass},
         {"failure", r.failure ? Json(*r.failure) : Json(nullptr)}};
  if (r.worst_case)
    j["worst_case"] = Json{{"index", r.worst_index}, {"inputs", sample_json(*r.worst_case)}};
  else
    j["worst_case"] = nullptr;
  if (include_timing) j["wall_time"] = r.wall_time;
  return j;
}

namespace {

Json conjecture_points_json(const verify::ConjecturePoints& p, bool derived = true) {
  Json j = Json::object();
  const std::pair<const char*, Point> named[] = {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"h", p.h},
                                                 {"g", p.g}, {"j", p.j}, {"k", p.k}, {"l", p.l}};
  for (const auto& [name, z] : named) j[name] = point_json(z);
  if (!derived)
    for (const char* name : {"g", "j", "k", "l"}) j[name] = Json{{"re", nullptr}, {"im", nullptr}, {"text", nullptr}, {"status", "skipped"}};
  return j;
}

}  // namespace

Json conjecture_json(const verify::ConjectureReport& r, bool include_timing) {
  Json j{{"seed", r.seed},
         {"requested", r.requested},
         {"accepted", r.accepted},
         {"skipped", r.skipped},
         {"acceptance_rate", static_cast<double>(r.accepted) / static_cast<double>(r.requested)},
         {"max_residual", r.max_residual},
         {"mean_residual", r.mean_residual},
         {"large_residual", r.large_residual},
         {"flag_threshold", r.flag_threshold},
         {"mobius", {{"max_h_l", r.max_mobius_h_l}, {"max_j_k", r.max_mobius_j_k}}}};
  j["worst_case"] = r.worst_case ? conjecture_points_json(*r.worst_case) : Json(nullptr);
  j["first_sample"] =
      r.first_sample ? conjecture_points_json(*r.first_sample, r.first_sample_accepted) : Json(nullptr);
  if (include_timing) j["wall_time"] = r.wall_time;
  return j;
}

std::optional<double> tolerance_from_env() {
  const char* v = std::getenv("DISKGEOM_TOL");
  if (v == nullptr || *v == '\0') return std::nullopt;
  const std::string s(v);
  char* end = nullptr;
  const double tol = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !(tol > 0) || !std::isfinite(tol))
    throw std::invalid_argument("DISKGEOM_TOL must be a positive number, got '" + s + "'");
  return tol;
}

}  // namespace diskgeom::report
