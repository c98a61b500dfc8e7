#include "figures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace diskgeom::figures {

namespace {

const Circle<double> kUnitCircle{{}, 1.0};

// Segment covering every point; all of them lie on the line through the first two.
Segment span(std::initializer_list<Point> pts, const std::string& style = "solid") {
  const Point origin = *pts.begin();
  const Point dir = (*(pts.begin() + 1) - origin) / std::abs(*(pts.begin() + 1) - origin);
  double lo = 0, hi = 0;
  for (const Point& z : pts) {
    const double t = dot(dir, z - origin);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {origin + lo * dir, origin + hi * dir, style};
}

// Diameter in direction dir, extended slightly past the unit circle.
Segment ray_line(const Point& dir, double extent) {
  const Point u = dir / std::abs(dir);
  return {-extent * u, extent * u, "dotted"};
}

// Circle orthogonal to S¹ through the unit-modulus points p, q.
Ring geodesic_ring(const Point& p, const Point& q) {
  const Point c = 2.0 * p * q / (p + q);
  return {{c, std::sqrt(norm2(c) - 1)}, "dashed"};
}

void add_great_circle(Figure& fig, const Point& a, const Point& b) {
  const auto g = great_circle_projection(a, b);
  if (const auto* c = std::get_if<Circle<double>>(&g))
    fig.circles.push_back({*c, "dashed"});
  else
    fig.segments.push_back(span({a, b}, "dashed"));
}

Figure figure_1() {
  Figure fig;
  fig.id = 1;
  fig.caption = "Points k, s, t, u, v, m on the line through the origin, a = 0.5, b = 0.7e^{i}";
  const Point a = 0.5, b = std::polar(0.7, 1.0);
  const auto cfg = build_config(a, b);
  const auto f = five_points_euclid(cfg, Path::synthetic);
  const Point m = hyperbolic_midpoint(a, b);
  const auto& [_a, _b, as, bs, ae, be] = cfg;
  fig.parameters = {{"a", a}, {"b", b}};
  fig.points = {{"a", a},        {"b", b},        {"a_star", as},    {"b_star", bs},   {"a_end", ae},
                {"b_end", be},   {"k", f.k.get()}, {"s", f.s.get()}, {"t", f.t.get()}, {"u", f.u.get()},
                {"v", f.v.get()}, {"m", m}};
  fig.circles = {{kUnitCircle, "solid"}};
  const auto geo = hyperbolic_line(a, b).curve;
  fig.circles.push_back({std::get<Circle<double>>(geo), "dashed"});
  fig.segments = {span({ae, as, f.k.get()}), span({be, bs, f.k.get()}), span({a, be, f.s.get()}),
                  span({b, ae, f.s.get()}), span({ae, bs, f.t.get()}), span({be, as, f.t.get()}),
                  span({a, bs, f.u.get()}), span({b, as, f.u.get()}), span({a, ae, f.v.get()}),
                  span({b, be, f.v.get()}), ray_line(h_vector(cfg), 2.0)};
  return fig;
}

Figure figure_2() {
  Figure fig;
  fig.id = 2;
  fig.caption = "Great-circle points k_c, s_c, t_c, u_c, v_c, a = 0.5, b = 0.6e^{i}";
  const Point a = 0.5, b = std::polar(0.6, 1.0);
  const auto cfg = build_config(a, b);
  const auto f = five_points_chordal(cfg, Path::synthetic);
  const auto& [_a, _b, as, bs, ae, be] = cfg;
  fig.parameters = {{"a", a}, {"b", b}};
  fig.points = {{"a", a},          {"b", b},           {"a_star", as},     {"b_star", bs},
                {"a_end", ae},     {"b_end", be},      {"k_c", f.kc.get()}, {"s_c", f.sc.get()},
                {"t_c", f.tc.get()}, {"u_c", f.uc.get()}, {"v_c", f.vc.get()}};
  fig.circles = {{kUnitCircle, "solid"}};
  for (const auto& [p, q] : {std::pair{a, b}, {ae, as}, {be, bs}, {a, be}, {b, ae}, {ae, bs}, {a, bs}, {b, as},
                             {a, ae}, {b, be}})
    add_great_circle(fig, p, q);
  fig.segments = {ray_line(h_vector(cfg), 1.5)};
  return fig;
}

Figure figure_3() {
  Figure fig;
  fig.id = 3;
  fig.caption = "Points p, q, p_c, q_c on a line through the origin, a = 0.5, b = 0.6e^{i}";
  const Point a = 0.5, b = std::polar(0.6, 1.0);
  const auto cfg = build_config(a, b);
  const auto f = pq_family(cfg, Path::synthetic);
  const auto& [_a, _b, as, bs, ae, be] = cfg;
  fig.parameters = {{"a", a}, {"b", b}};
  fig.points = {{"a", a},      {"b", b},          {"a_star", as},    {"b_star", bs},      {"a_end", ae},
                {"b_end", be}, {"p", f.p.get()},  {"q", f.q.get()}, {"p_c", f.pc.get()}, {"q_c", f.qc.get()}};
  fig.circles = {{kUnitCircle, "solid"}};
  fig.segments = {span({a, be, f.p.get()}), span({as, b, f.p.get()}), span({a, bs, f.q.get()}),
                  span({as, be, f.q.get()}), ray_line(q_direction(cfg), 2.0)};
  for (const auto& [p, q] : {std::pair{a, be}, {as, b}, {a, bs}, {as, be}}) add_great_circle(fig, p, q);
  return fig;
}

Figure figure_5() {
  Figure fig;
  fig.id = 5;
  fig.caption = "Hyperbolic midpoint m from the circle S(c, sqrt(|c|^2 - 1)), a = 0.5e^{0.6i}, b = 0.7e^{6i}";
  const Point a = std::polar(0.5, 0.6), b = std::polar(0.7, 6.0);
  const auto [ae, be] = geodesic_endpoints(a, b);
  const Point c = inversion_center(a, b);
  const Point m = midpoint_via_inversion(a, b);
  fig.parameters = {{"a", a}, {"b", b}};
  fig.points = {{"a", a}, {"b", b}, {"a_end", ae}, {"b_end", be}, {"c", c}, {"m", m}};
  fig.circles = {{kUnitCircle, "solid"},
                 {std::get<Circle<double>>(hyperbolic_line(a, b).curve), "dashed"},
                 {{c, std::sqrt(norm2(c) - 1)}, "solid"}};
  fig.segments = {span({a, b, c}), span({ae, be, c})};
  return fig;
}

Figure figure_6() {
  Figure fig;
  fig.id = 6;
  fig.caption = "Conjecture configuration a = e^{-0.1i}, b = e^{0.5i}, c = e^{1.5i}, d = e^{3.3i}, h = b + 0.447(c - b)";
  const Point a = std::polar(1.0, -0.1), b = std::polar(1.0, 0.5), c = std::polar(1.0, 1.5), d = std::polar(1.0, 3.3);
  const Point h = b + 0.447 * (c - b);
  const auto r = verify::conjecture_check(a, b, c, d, h);
  const auto [f, m] = chord_vs_geodesic_midpoint(a, b, c, d);
  const auto& p = r.points;
  fig.parameters = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"h", h}};
  fig.points = {{"a", a}, {"b", b}, {"c", c}, {"d", d}, {"g", p.g}, {"h", h},
                {"j", p.j}, {"k", p.k}, {"l", p.l}, {"f", f}, {"m", m}};
  fig.circles = {{kUnitCircle, "solid"}, geodesic_ring(a, c), geodesic_ring(b, d)};
  fig.segments = {span({a, b, p.g}), span({d, c, p.g}), span({p.g, h, p.j, p.k, p.l}), span({a, c}),
                  span({b, d}), span({a, d}), span({b, c})};
  return fig;
}

std::string fixed(double x, int digits) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::string px(double x) { return fixed(100 * x, 2); }

const char* dash(const std::string& style) {
  if (style == "dashed") return " stroke-dasharray=\"6 4\"";
  if (style == "dotted") return " stroke-dasharray=\"2 3\"";
  return "";
}

}  // namespace

const Point& Figure::point(const std::string& name) const {
  for (const auto& [n, z] : points)
    if (n == name) return z;
  throw std::out_of_range("figure has no point '" + name + "'");
}

Figure build(int id) {
  switch (id) {
    case 1: return figure_1();
    case 2: return figure_2();
    case 3: return figure_3();
    case 5: return figure_5();
    case 6: return figure_6();
    default: throw std::invalid_argument("unknown figure id " + std::to_string(id) + " (expected 1, 2, 3, 5 or 6)");
  }
}

report::Json to_json(const Figure& fig) {
  using report::Json;
  Json params = Json::object();
  for (const auto& [n, z] : fig.parameters) params[n] = report::point_json(z);
  Json pts = Json::object();
  for (const auto& [n, z] : fig.points) pts[n] = report::point_json(z);
  Json circles = Json::array();
  for (const auto& r : fig.circles)
    circles.push_back({{"center", report::point_json(r.circle.center)}, {"radius", r.circle.radius}, {"style", r.style}});
  Json segments = Json::array();
  for (const auto& s : fig.segments)
    segments.push_back({{"from", report::point_json(s.from)}, {"to", report::point_json(s.to)}, {"style", s.style}});
  return Json{{"figure", fig.id}, {"caption", fig.caption}, {"parameters", params},
              {"points", pts},    {"circles", circles},     {"segments", segments}};
}

std::string to_svg(const Figure& fig) {
  double extent = 1.2;
  for (const auto& [n, z] : fig.points) extent = std::max({extent, std::abs(z.real()) + 0.5, std::abs(z.imag()) + 0.3});
  const std::string half = px(extent), full = px(2 * extent);
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << full << "\" height=\"" << full << "\" viewBox=\"-"
      << half << " -" << half << " " << full << " " << full << "\">\n"
      << "  <title>Figure " << fig.id << ": " << fig.caption << "</title>\n"
      << "  <rect x=\"-" << half << "\" y=\"-" << half << "\" width=\"" << full << "\" height=\"" << full
      << "\" fill=\"white\"/>\n";
  for (const auto& r : fig.circles)
    out << "  <circle cx=\"" << px(r.circle.center.real()) << "\" cy=\"" << px(-r.circle.center.imag()) << "\" r=\""
        << px(r.circle.radius) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"" << dash(r.style) << "/>\n";
  for (const auto& s : fig.segments)
    out << "  <line x1=\"" << px(s.from.real()) << "\" y1=\"" << px(-s.from.imag()) << "\" x2=\"" << px(s.to.real())
        << "\" y2=\"" << px(-s.to.imag()) << "\" stroke=\"black\" stroke-width=\"1\"" << dash(s.style) << "/>\n";
  for (const auto& [n, z] : fig.points) {
    out << "  <circle cx=\"" << px(z.real()) << "\" cy=\"" << px(-z.imag()) << "\" r=\"2.5\" fill=\"black\"/>\n"
        << "  <text x=\"" << px(z.real() + 0.03) << "\" y=\"" << px(-z.imag() - 0.03)
        << "\" font-family=\"sans-serif\" font-size=\"10\">" << n << " (" << fixed(z.real(), 4) << ", "
        << fixed(z.imag(), 4) << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace diskgeom::figures
