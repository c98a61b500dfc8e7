#include <cstdlib>

#include "figures.hpp"
#include "report.hpp"
#include "test_util.hpp"

using namespace diskgeom;
using testutil::C;

TEST(ParseComplex, Grammar) {
  EXPECT_EQ(report::parse_complex("0.5"), C(0.5));
  EXPECT_EQ(report::parse_complex("-2"), C(-2));
  EXPECT_EQ(report::parse_complex("0.3i"), C(0, 0.3));
  EXPECT_EQ(report::parse_complex("i"), C(0, 1));
  EXPECT_EQ(report::parse_complex("-i"), C(0, -1));
  EXPECT_EQ(report::parse_complex("0.2+0.3i"), C(0.2, 0.3));
  EXPECT_EQ(report::parse_complex("0.2-0.3i"), C(0.2, -0.3));
  EXPECT_EQ(report::parse_complex("1e-3+2e-1i"), C(1e-3, 2e-1));
  EXPECT_EQ(report::parse_complex("1-i"), C(1, -1));
  EXPECT_EQ(report::parse_complex("0.7@1"), std::polar(0.7, 1.0));
  EXPECT_EQ(report::parse_complex("0.7@-1.5"), std::polar(0.7, -1.5));
}

TEST(ParseComplex, Rejects) {
  for (const char* bad : {"", "abc", "0.5+", "1@", "@1", "1+2j", "nan", "inf", " 1", "1 ", "0.2+0.3ii", "1@2@3"})
    EXPECT_THROW(report::parse_complex(bad), std::invalid_argument) << bad;
}

TEST(FormatComplex, RoundTrips) {
  testutil::Gen gen(71);
  for (int i = 0; i < 10000; ++i) {
    const C z = std::polar(std::pow(10.0, gen.uniform(-8, 8)), gen.angle());
    EXPECT_EQ(report::parse_complex(report::format_complex(z)), z);
  }
  EXPECT_EQ(report::format_complex(C(0.5, -0.25)), "0.5-0.25i");
}

TEST(PointsReport, KeysAndResiduals) {
  const auto r = report::points_report(C(0.5), std::polar(0.7, 1.0), 1e-9);
  EXPECT_TRUE(r.within_tolerance);
  const auto& pts = r.document.at("points");
  for (const char* key : {"k", "s", "t", "u", "v", "m", "k_c", "s_c", "t_c", "u_c", "v_c", "p", "q", "p_c", "q_c",
                          "a_star", "b_star", "a_end", "b_end", "H"}) {
    ASSERT_TRUE(pts.contains(key)) << key;
    EXPECT_EQ(pts.at(key).at("status"), "ok") << key;
  }
  EXPECT_EQ(pts.size(), 20u);
  EXPECT_NEAR(pts.at("k").at("re").get<double>(), -1.3966, 2e-3);
  EXPECT_LE(r.document.at("residuals").at("eleven_with_origin").get<double>(), 1e-9);
  EXPECT_LE(r.document.at("residuals").at("dual_path").get<double>(), 1e-9);
  EXPECT_NEAR(r.document.at("input").at("b").at("modulus").get<double>(), 0.7, 1e-15);
}

TEST(PointsReport, RejectsInvalidConfigurations) {
  EXPECT_GEOMETRY_ERROR(report::points_report(C(0.3), C(0.6), 1e-9), ErrorKind::CollinearWithOrigin);
  EXPECT_GEOMETRY_ERROR(report::points_report(C(1.5), C(0, 0.6), 1e-9), ErrorKind::OutsideDisk);
}

TEST(PointJson, DegenerateMember) {
  const FamilyPoint<double> p{{}, ErrorKind::NearBoundary};
  const auto j = report::point_json(p);
  EXPECT_TRUE(j.at("re").is_null());
  EXPECT_EQ(j.at("status"), "NearBoundary");
}

TEST(ToleranceFromEnv, ParsesAndRejects) {
  ::unsetenv("DISKGEOM_TOL");
  EXPECT_FALSE(report::tolerance_from_env());
  ::setenv("DISKGEOM_TOL", "1e-7", 1);
  EXPECT_EQ(report::tolerance_from_env(), 1e-7);
  ::setenv("DISKGEOM_TOL", "-1", 1);
  EXPECT_THROW(report::tolerance_from_env(), std::invalid_argument);
  ::setenv("DISKGEOM_TOL", "x", 1);
  EXPECT_THROW(report::tolerance_from_env(), std::invalid_argument);
  ::unsetenv("DISKGEOM_TOL");
}

TEST(Figures, PointsMatchPublishedCoordinates) {
  struct Expect {
    int id;
    const char* name;
    C value;
  };
  const Expect cases[] = {
      {1, "k", {-1.3966, -1.1454}}, {1, "m", {0.3817, 0.3131}},   {1, "a_end", {0.9330, -0.3598}},
      {2, "k_c", {-0.2132, -0.1433}}, {2, "u_c", {0.8298, 0.5580}}, {3, "p", {0.4496, 0.4671}},
      {3, "q_c", {0.9174, 0.9531}},  {5, "c", {1.2235, -1.2112}},  {5, "m", {0.5152, -0.0020}},
      {6, "g", {0.6454, 1.6248}},    {6, "l", {0.4005, -0.1172}},  {6, "f", {0.5899, 0.3811}},
      {6, "m", {0.3446, 0.2226}},
  };
  for (const auto& e : cases) EXPECT_NEAR_C(figures::build(e.id).point(e.name), e.value, 2e-3);
  EXPECT_THROW(figures::build(4), std::invalid_argument);
  EXPECT_THROW(figures::build(1).point("zz"), std::out_of_range);
}

TEST(Figures, JsonAndSvg) {
  for (int id : {1, 2, 3, 5, 6}) {
    const auto fig = figures::build(id);
    const auto j = figures::to_json(fig);
    EXPECT_EQ(j.at("figure"), id);
    EXPECT_EQ(j.at("points").size(), fig.points.size());
    const std::string svg = figures::to_svg(fig);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    EXPECT_EQ(svg, figures::to_svg(figures::build(id)));
  }
  const std::string svg = figures::to_svg(figures::build(1));
  EXPECT_NE(svg.find("k (-1.3966, -1.1454)"), std::string::npos);
}
