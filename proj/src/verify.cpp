#include "verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>

namespace diskgeom::verify {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;
constexpr int kMaxAttempts = 10000;

double rel_diff(const Point& x, const Point& y) { return std::abs(x - y) / std::max(1.0, std::abs(y)); }

Point unit(double theta) { return std::polar(1.0, theta); }

std::optional<Point> disk_point(SplitMix64& rng, const Margins& m) {
  const double r_max = 1 - m.boundary;
  for (int i = 0; i < kMaxAttempts; ++i) {
    const double r = r_max * std::sqrt(rng.uniform());
    const double t = rng.uniform(0, kTwoPi);
    if (r >= m.min_modulus) return std::polar(r, t);
  }
  return std::nullopt;
}

std::optional<Sample> draw_disk_pair(SplitMix64& rng, const Margins& m) {
  const double min_sine = std::sin(m.min_angle);
  for (int i = 0; i < kMaxAttempts; ++i) {
    const auto a = disk_point(rng, m);
    const auto b = disk_point(rng, m);
    if (!a || !b) return std::nullopt;
    if (std::abs(cross(*a, *b)) < min_sine * std::abs(*a) * std::abs(*b)) continue;
    if (std::abs(std::abs(*a) - std::abs(*b)) < m.modulus_gap) continue;
    return Sample{{{"a", *a}, {"b", *b}}};
  }
  return std::nullopt;
}

std::optional<std::array<double, 4>> quadruple_angles(SplitMix64& rng, const Margins& m) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    std::array<double, 4> t{};
    for (auto& x : t) x = rng.uniform(0, kTwoPi);
    std::sort(t.begin(), t.end());
    bool ok = t[0] + kTwoPi - t[3] >= m.min_gap;
    for (int j = 0; j < 3; ++j) ok = ok && t[j + 1] - t[j] >= m.min_gap;
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<Sample> draw_circle_quadruple(SplitMix64& rng, const Margins& m) {
  const auto t = quadruple_angles(rng, m);
  if (!t) return std::nullopt;
  return Sample{{{"a", unit((*t)[0])}, {"b", unit((*t)[1])}, {"c", unit((*t)[2])}, {"d", unit((*t)[3])}}};
}

// Lens B(−ic, R) ∩ B(ic, R), R = √(1 + c²); a on the upper arc, b on the lower one.
std::optional<Sample> draw_lens_pair(SplitMix64& rng, const Margins& m) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    const double c = rng.uniform(0.1, 3.0);
    const double radius = std::sqrt(1 + c * c);
    const double phi0 = std::atan(c);
    const Point a = Point(0, -c) + std::polar(radius, rng.uniform(phi0, std::numbers::pi - phi0));
    const Point b = Point(0, c) + std::polar(radius, rng.uniform(-std::numbers::pi + phi0, -phi0));
    const double r_max = 1 - m.boundary;
    if (std::abs(a) > r_max || std::abs(b) > r_max) continue;
    if (a.imag() <= 0 || b.imag() >= 0) continue;
    return Sample{{{"a", a}, {"b", b}, {"lens_center", Point(0, c)}}};
  }
  return std::nullopt;
}

XPoint extended_point(SplitMix64& rng) {
  if (rng.uniform() < 0.1) return XPoint::infinity();
  if (rng.uniform() < 0.05) return Point{};
  const double r = std::pow(10.0, rng.uniform(-3, 3));
  return std::polar(r, rng.uniform(0, kTwoPi));
}

std::optional<Sample> draw_extended_pair(SplitMix64& rng) {
  return Sample{{{"x", extended_point(rng)}, {"y", extended_point(rng)}}};
}

// Residuals of the individual theorems. Each throws GeometryError on degenerate input.

double five_points_collinear(const Sample& s) {
  const auto cfg = build_config(s.at("a"), s.at("b"));
  const auto f = five_points_euclid(cfg, Path::synthetic);
  const Point m = hyperbolic_midpoint(cfg.a, cfg.b);
  return collinearity_residual<double>({Point{}, f.k.get(), f.s.get(), f.t.get(), f.u.get(), f.v.get(), m});
}

double explicit_formulas(const Sample& s) {
  const auto cfg = build_config(s.at("a"), s.at("b"));
  const auto syn = five_points_euclid(cfg, Path::synthetic).named();
  const auto closed = five_points_euclid(cfg, Path::closed_form).named();
  double r = 0;
  for (std::size_t i = 0; i < syn.size(); ++i) r = std::max(r, rel_diff(syn[i].second.get(), closed[i].second.get()));
  r = std::max(r, std::abs(cfg.a_end - geodesic_endpoint_by_composition(cfg.a, cfg.b)));
  r = std::max(r, std::abs(cfg.b_end - geodesic_endpoint_by_composition(cfg.b, cfg.a)));
  return r;
}

double chordal_five_points(const Sample& s) {
  const auto cfg = build_config(s.at("a"), s.at("b"));
  const auto f = five_points_chordal(cfg, Path::synthetic);
  const Point kc = f.kc.get(), sc = f.sc.get(), tc = f.tc.get(), uc = f.uc.get(), vc = f.vc.get();
  return std::max({collinearity_residual<double>({Point{}, kc, sc, tc, uc, vc}), std::abs(std::abs(uc) - 1),
                   std::abs(vc + kc), std::abs(tc + sc)});
}

double eleven(const Sample& s) { return eleven_points(s.at("a"), s.at("b")).residual; }

double pq_collinear(const Sample& s) {
  const auto cfg = build_config(s.at("a"), s.at("b"));
  const auto f = pq_family(cfg, Path::synthetic);
  const Point p = f.p.get(), q = f.q.get(), pc = f.pc.get(), qc = f.qc.get();
  const Point dir = q_direction(cfg);
  double r = collinearity_residual<double>({Point{}, p, q, pc, qc});
  for (const Point& z : {p, q, pc, qc}) r = std::max(r, real_multiple_residual(z, dir));
  return r;
}

double lens_lemma(const Sample& s) { return std::abs(hyperbolic_midpoint(s.at("a"), s.at("b")).imag()); }

double midpoint_constructions(const Sample& s) {
  const Point a = s.at("a"), b = s.at("b");
  const Point formula = hyperbolic_midpoint(a, b);
  const double ab = rho(a, b);
  double r = 0;
  for (const Point& m : {formula, midpoint_via_lens(a, b), midpoint_via_inversion(a, b)}) {
    r = std::max({r, std::abs(rho(a, m) - rho(b, m)), std::abs(rho(a, m) - ab / 2),
                  std::abs(rho(a, m) + rho(m, b) - ab), std::abs(m - formula)});
  }
  return std::max(r, std::abs(midpoint_oracle(a, b) - formula));
}

double orthocenter_w2(const Sample& s) {
  const Point a = s.at("a"), b = s.at("b"), c = s.at("c"), d = s.at("d");
  const Point w1 = line_intersection(a, b, c, d);
  const Point w2 = line_intersection(a, c, b, d);
  const Point w3 = line_intersection(a, d, b, c);
  const double scale = std::max({1.0, std::abs(w1), std::abs(w2), std::abs(w3)});
  // Distance of w2 from the altitudes through 0, w1 and w3.
  const double from_0 = std::abs(dot(w2, w3 - w1)) / std::abs(w3 - w1);
  const double from_w1 = std::abs(dot(w2 - w1, w3)) / std::abs(w3);
  const double from_w3 = std::abs(dot(w2 - w3, w1)) / std::abs(w1);
  return std::max({from_0, from_w1, from_w3}) / scale;
}

// Distance from z to the circle orthogonal to S¹ through p, q ∈ S¹.
double distance_to_geodesic(const Point& p, const Point& q, const Point& z) {
  const Point sum = p + q;
  if (std::abs(sum) <= 1e-12) return std::abs(cross(p, z));
  const Point center = 2.0 * p * q / sum;
  return std::abs(std::abs(z - center) - std::sqrt(norm2(center) - 1));
}

double geodesic_intersection(const Sample& s) {
  const Point a = s.at("a"), b = s.at("b"), c = s.at("c"), d = s.at("d");
  const Point w = geodesic_intersection_on_circle(a, b, c, d);
  if (!(std::abs(w) < 1)) return 1;
  return std::max(distance_to_geodesic(a, c, w), distance_to_geodesic(b, d, w));
}

double f_m_collinear(const Sample& s) {
  const auto [f, m] = chord_vs_geodesic_midpoint(s.at("a"), s.at("b"), s.at("c"), s.at("d"));
  return collinearity_residual<double>({Point{}, f, m});
}

double midpoint_origin_f(const Sample& s) {
  const auto [f, m] = chord_vs_geodesic_midpoint(s.at("a"), s.at("b"), s.at("c"), s.at("d"));
  if (!(std::abs(m) < std::abs(f))) return 1;
  return std::abs(m - hyperbolic_midpoint(Point{}, f));
}

double chordal_midpoint_check(const Sample& s) {
  const Point a = s.at("a"), b = s.at("b");
  const Point m = chordal_midpoint(a, b);
  const double equal = std::abs(chordal_distance<double>(a, m) - chordal_distance<double>(b, m));
  const double coplanar = coplanarity_with_center(to_sphere<double>(a), to_sphere<double>(b), to_sphere<double>(m));
  const Circle<double> ortho = orthogonal_great_circle(a, b);
  const double through_m = std::abs(distance_to(ortho, m));
  const double great = std::abs(ortho.radius * ortho.radius - 1 - norm2(ortho.center)) /
                       std::max(1.0, ortho.radius * ortho.radius);
  double angle = 0;
  const auto first = great_circle_projection(a, b);
  if (const auto* c = std::get_if<Circle<double>>(&first)) {
    const double d2 = norm2(c->center - ortho.center);
    angle = std::abs(c->radius * c->radius + ortho.radius * ortho.radius - d2) / (2 * c->radius * ortho.radius);
  } else {
    angle = distance_to(std::get<Line<double>>(first), ortho.center) / ortho.radius;
  }
  return std::max({equal, coplanar, through_m, great, angle, std::abs(m - chordal_midpoint_oracle(a, b))});
}

double chordal_isometry(const Sample& s) {
  const XPoint x = s.extended("x"), y = s.extended("y");
  const double q = chordal_distance(x, y);
  return std::abs(q - (to_sphere(x) - to_sphere(y)).norm());
}

double dual_path(const Sample& s) {
  const auto cfg = build_config(s.at("a"), s.at("b"));
  const auto syn = point_family(cfg, Path::synthetic).named();
  const auto closed = point_family(cfg, Path::closed_form).named();
  double r = 0;
  for (std::size_t i = 0; i < syn.size(); ++i) r = std::max(r, rel_diff(syn[i].second.get(), closed[i].second.get()));
  const auto& [a, b, as, bs, ae, be] = cfg;
  const std::array<std::array<Point, 4>, 6> quads{{{ae, as, be, bs},
                                                   {a, be, b, ae},
                                                   {ae, bs, be, as},
                                                   {a, bs, b, as},
                                                   {a, ae, b, be},
                                                   {a, be, as, b}}};
  for (const auto& q : quads) r = std::max(r, std::abs(gcis(q[0], q[1], q[2], q[3]) - gcis_oracle(q[0], q[1], q[2], q[3])));
  return r;
}

double origin_identity(const Sample& s) {
  const auto cfg = build_config(s.at("a"), s.at("b"));
  const Point o = line_intersection(cfg.a, cfg.a_star, cfg.b, cfg.b_star);
  return std::abs(o) / scale_of<double>({cfg.a_star, cfg.b_star});
}

using ResidualFn = double (*)(const Sample&);

struct Entry {
  TheoremInfo info;
  ResidualFn fn;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries{
      {{"five_points_collinear", Sampler::disk_pair, 1e-9, 0}, five_points_collinear},
      {{"explicit_formulas", Sampler::disk_pair, 1e-9, 0}, explicit_formulas},
      {{"chordal_five_points", Sampler::disk_pair, 1e-9, 0}, chordal_five_points},
      {{"eleven_points", Sampler::disk_pair, 1e-8, 0}, eleven},
      {{"pq_collinear", Sampler::disk_pair, 1e-9, 0}, pq_collinear},
      {{"lens_lemma", Sampler::lens_pair, 1e-9, 0}, lens_lemma},
      {{"midpoint_constructions", Sampler::disk_pair, 1e-9, 0.05}, midpoint_constructions},
      {{"orthocenter_w2", Sampler::circle_quadruple, 1e-8, 0}, orthocenter_w2},
      {{"geodesic_intersection", Sampler::circle_quadruple, 1e-9, 0}, geodesic_intersection},
      {{"f_m_collinear", Sampler::circle_quadruple, 1e-9, 0}, f_m_collinear},
      {{"midpoint_origin_f", Sampler::circle_quadruple, 1e-9, 0}, midpoint_origin_f},
      {{"chordal_midpoint", Sampler::disk_pair, 1e-9, 0.05}, chordal_midpoint_check},
      {{"chordal_isometry", Sampler::extended_pair, 1e-12, 0}, chordal_isometry},
      {{"dual_path", Sampler::disk_pair, 1e-9, 0}, dual_path},
      {{"origin_identity", Sampler::disk_pair, 1e-9, 0}, origin_identity},
  };
  return entries;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : registry())
    if (id == e.info.id) return e;
  throw HarnessError("UnknownTheorem", "no theorem with id '" + id + "'");
}

}  // namespace

const char* to_string(Sampler s) {
  switch (s) {
    case Sampler::disk_pair: return "disk_pair";
    case Sampler::circle_quadruple: return "circle_quadruple";
    case Sampler::lens_pair: return "lens_pair";
    case Sampler::extended_pair: return "extended_pair";
  }
  return "unknown";
}

std::optional<Sampler> parse_sampler(const std::string& name) {
  for (Sampler s : {Sampler::disk_pair, Sampler::circle_quadruple, Sampler::lens_pair, Sampler::extended_pair})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

XPoint Sample::extended(const std::string& name) const {
  for (const auto& in : inputs)
    if (in.name == name) return in.value;
  throw HarnessError("SamplerMismatch", "sample has no input '" + name + "'");
}

Point Sample::at(const std::string& name) const { return extended(name).finite(); }

std::optional<Sample> draw(const SampleSpec& spec, std::uint64_t index) {
  SplitMix64 rng = SplitMix64::for_sample(spec.seed, index);
  switch (spec.sampler) {
    case Sampler::disk_pair: return draw_disk_pair(rng, spec.margins);
    case Sampler::circle_quadruple: return draw_circle_quadruple(rng, spec.margins);
    case Sampler::lens_pair: return draw_lens_pair(rng, spec.margins);
    case Sampler::extended_pair: return draw_extended_pair(rng);
  }
  return std::nullopt;
}

const std::vector<TheoremInfo>& theorems() {
  static const std::vector<TheoremInfo> infos = [] {
    std::vector<TheoremInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const TheoremInfo& theorem(const std::string& id) { return entry(id).info; }

SampleSpec default_spec(const std::string& id, std::size_t count, std::uint64_t seed) {
  const TheoremInfo& info = theorem(id);
  SampleSpec spec;
  spec.sampler = info.sampler;
  spec.count = count;
  spec.seed = seed;
  spec.margins.modulus_gap = info.modulus_gap;
  return spec;
}

std::optional<double> residual(const std::string& theorem_id, const Sample& sample) {
  const Entry& e = entry(theorem_id);
  try {
    const double r = e.fn(sample);
    return std::isnan(r) ? std::numeric_limits<double>::infinity() : r;
  } catch (const GeometryError&) {
    return std::nullopt;
  }
}

VerificationReport run_check(const std::string& theorem_id, const SampleSpec& spec, double tol) {
  const Entry& e = entry(theorem_id);
  if (spec.sampler != e.info.sampler)
    throw HarnessError("SamplerMismatch", theorem_id + " requires sampler " + to_string(e.info.sampler));
  if (spec.count == 0) throw HarnessError("InvalidSpec", "sample count must be positive");
  const auto start = std::chrono::steady_clock::now();

  VerificationReport report;
  report.theorem = theorem_id;
  report.spec = spec;
  report.tolerance = tol;
  double sum = 0;
  for (std::size_t i = 0; i < spec.count; ++i) {
    const auto sample = draw(spec, i);
    const auto r = sample ? residual(theorem_id, *sample) : std::nullopt;
    if (!r) {
      ++report.skipped;
      continue;
    }
    ++report.evaluated;
    sum += *r;
    if (!report.worst_case || *r > report.max_residual) {
      report.max_residual = *r;
      report.worst_case = sample;
      report.worst_index = i;
    }
  }
  report.mean_residual = report.evaluated ? sum / static_cast<double>(report.evaluated) : 0;
  if (10 * report.evaluated < 9 * spec.count) report.failure = "SamplerStarvation";
  report.pass = !report.failure && report.max_residual <= tol;
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Point gcis_oracle(const Point& a, const Point& b, const Point& c, const Point& d) {
  check_gcis_pairs(a, b, c, d, Tolerance<double>::degenerate);
  const auto g1 = great_circle_projection(a, b);
  const auto g2 = great_circle_projection(c, d);
  std::vector<Point> hits;
  auto take = [&](const std::optional<std::pair<Point, Point>>& h) {
    if (h) hits = {h->first, h->second};
  };
  const auto* c1 = std::get_if<Circle<double>>(&g1);
  const auto* c2 = std::get_if<Circle<double>>(&g2);
  if (c1 && c2) {
    take(circle_circle_intersection(*c1, *c2));
  } else if (c1 || c2) {
    const auto& line = std::get<Line<double>>(c1 ? g2 : g1);
    take(line_circle_intersection(line, c1 ? *c1 : *c2));
  } else {
    hits = {line_intersection(std::get<Line<double>>(g1), std::get<Line<double>>(g2))};
  }
  if (hits.empty()) fail(ErrorKind::NoRealIntersection, "gcis_oracle: projected circles do not meet");
  if (hits.size() == 1) return hits.front();
  const double m0 = std::abs(hits[0]), m1 = std::abs(hits[1]);
  if (std::abs(m0 - m1) > 1e-9) return m0 < m1 ? hits[0] : hits[1];
  const Point hint = line_intersection(a, b, c, d);
  return std::abs(hits[0] - hint) <= std::abs(hits[1] - hint) ? hits[0] : hits[1];
}

Point midpoint_oracle(const Point& x, const Point& y) {
  require_in_disk<double>({x, y}, "midpoint_oracle");
  // T_x sends x to 0, so the geodesic becomes the diameter through T_x(y).
  const Point yy = (y - x) / (1.0 - std::conj(x) * y);
  const double r = std::abs(yy);
  if (r == 0) return x;
  const Point dir = yy / r;
  double lo = 0, hi = r;
  for (int i = 0; i < 200 && hi - lo > 0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (rho(Point{}, Point(mid)) < rho(Point(mid), Point(r)))
      lo = mid;
    else
      hi = mid;
  }
  const Point m = 0.5 * (lo + hi) * dir;
  return (m + x) / (1.0 + std::conj(x) * m);
}

Point chordal_midpoint_oracle(const Point& a, const Point& b) {
  const SpherePoint<double> o = sphere_center<double>();
  const SpherePoint<double> chord = 0.5 * (to_sphere<double>(a) + to_sphere<double>(b)) - o;
  if (chord.norm() <= 1e-12) fail(ErrorKind::AntipodalPair, "chordal_midpoint_oracle: antipodal pair");
  return from_sphere<double>(SpherePoint<double>(o + 0.5 * chord.normalized())).finite();
}

ConjectureResult conjecture_check(const Point& a, const Point& b, const Point& c, const Point& d,
                                  const Point& h) {
  ConjecturePoints p{a, b, c, d, h, {}, {}, {}, {}};
  p.g = line_intersection(a, b, c, d);
  p.j = line_intersection(p.g, h, a, c);
  p.k = line_intersection(p.g, h, b, d);
  p.l = line_intersection(p.g, h, a, d);
  for (const Point& z : {p.h, p.j, p.k, p.l})
    if (!(std::abs(z) < 1)) throw HarnessError("PointOutsideDisk", "conjecture_check: derived point outside the disk");
  return {p, std::abs(rho(p.h, p.j) - rho(p.k, p.l))};
}

MobiusResidual mobius_invariance_check(const ConjecturePoints& pts, const Point& w) {
  auto mod = [&](const Point& z) { return std::abs(mobius_T(w, z)); };
  return {std::abs(mod(pts.h) - mod(pts.l)), std::abs(mod(pts.j) - mod(pts.k))};
}

MobiusResidual mobius_invariance_check(const ConjecturePoints& pts) {
  return mobius_invariance_check(pts, 1.0 / std::conj(pts.g));
}

std::optional<ConjecturePoints> draw_conjecture(std::uint64_t seed, std::uint64_t index, const Margins& margins) {
  SplitMix64 rng = SplitMix64::for_sample(seed, index);
  const auto t = quadruple_angles(rng, margins);
  if (!t) return std::nullopt;
  ConjecturePoints p{};
  p.a = unit((*t)[0]);
  p.b = unit((*t)[1]);
  p.c = unit((*t)[2]);
  p.d = unit((*t)[3]);
  p.h = p.b + rng.uniform(0.05, 0.95) * (p.c - p.b);
  return p;
}

ConjectureReport run_conjecture(std::size_t samples, std::uint64_t seed, const Margins& margins) {
  if (samples == 0) throw HarnessError("InvalidSpec", "sample count must be positive");
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport report;
  report.requested = samples;
  report.seed = seed;
  double sum = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto drawn = draw_conjecture(seed, i, margins);
    if (i == 0 && drawn) report.first_sample = drawn;
    if (!drawn) {
      ++report.skipped;
      continue;
    }
    try {
      const auto result = conjecture_check(drawn->a, drawn->b, drawn->c, drawn->d, drawn->h);
      if (i == 0) {
        report.first_sample = result.points;
        report.first_sample_accepted = true;
      }
      const auto mob = mobius_invariance_check(result.points);
      ++report.accepted;
      sum += result.residual;
      if (!report.worst_case || result.residual > report.max_residual) {
        report.max_residual = result.residual;
        report.worst_case = result.points;
      }
      report.max_mobius_h_l = std::max(report.max_mobius_h_l, mob.h_l);
      report.max_mobius_j_k = std::max(report.max_mobius_j_k, mob.j_k);
    } catch (const GeometryError&) {
      ++report.skipped;
    } catch (const HarnessError&) {
      ++report.skipped;
    }
  }
  report.mean_residual = report.accepted ? sum / static_cast<double>(report.accepted) : 0;
  report.large_residual = report.max_residual > report.flag_threshold;
  report.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace diskgeom::verify
