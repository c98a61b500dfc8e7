// diskgeom: named points, theorem checks, figures and the conjecture search.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "figures.hpp"
#include "report.hpp"
#include "verify.hpp"

namespace {

using namespace diskgeom;
using report::Json;

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

struct PointsArgs {
  std::string a, b, out;
  std::optional<double> tol;
};

int cmd_points(const PointsArgs& args) {
  const auto a = report::parse_complex(args.a);
  const auto b = report::parse_complex(args.b);
  const double tol = args.tol.value_or(report::tolerance_from_env().value_or(Tolerance<double>::identity));
  const auto result = report::points_report(a, b, tol);
  emit(dump(result.document), args.out);
  return result.within_tolerance ? kOk : kFailed;
}

struct VerifyArgs {
  std::string theorem, out;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::optional<double> tol;
};

int cmd_verify(const VerifyArgs& args) {
  std::vector<std::string> ids;
  if (args.theorem == "all") {
    for (const auto& t : verify::theorems()) ids.emplace_back(t.id);
  } else {
    verify::theorem(args.theorem);  // UnknownTheorem before any work
    ids.push_back(args.theorem);
  }
  const auto env_tol = report::tolerance_from_env();
  Json reports = Json::array();
  bool all_pass = true;
  for (const auto& id : ids) {
    const double tol = args.tol.value_or(env_tol.value_or(verify::theorem(id).tolerance));
    const auto r = verify::run_check(id, verify::default_spec(id, args.samples, args.seed), tol);
    all_pass = all_pass && r.pass;
    std::fprintf(stderr, "%-24s %s  max %.3e  tol %.1e  evaluated %zu  skipped %zu\n", id.c_str(),
                 r.pass ? "PASS" : "FAIL", r.max_residual, r.tolerance, r.evaluated, r.skipped);
    reports.push_back(report::verification_json(r));
  }
  emit(dump(Json{{"pass", all_pass}, {"reports", reports}}), args.out);
  return all_pass ? kOk : kFailed;
}

struct ConjectureArgs {
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_conjecture(const ConjectureArgs& args) {
  const auto r = verify::run_conjecture(args.samples, args.seed);
  std::fprintf(stderr, "conjecture: accepted %zu of %zu, max residual %.3e%s\n", r.accepted, r.requested,
               r.max_residual, r.large_residual ? "  ** LARGE RESIDUAL **" : "");
  emit(dump(report::conjecture_json(r)), args.out);
  return kOk;
}

struct FigureArgs {
  int id = 0;
  std::string format = "json", out;
};

int cmd_figure(const FigureArgs& args) {
  const auto fig = figures::build(args.id);
  emit(args.format == "svg" ? figures::to_svg(fig) : dump(figures::to_json(fig)), args.out);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collinear point families and midpoints in the Poincare disk"};
  app.require_subcommand(1);

  PointsArgs pa;
  auto* points = app.add_subcommand("points", "Compute every named point for a configuration (a, b)");
  points->add_option("--a", pa.a, "Complex literal: R, A+Bi, A-Bi or R@T (radians)")->required();
  points->add_option("--b", pa.b, "Complex literal")->required();
  points->add_option("--tol", pa.tol, "Collinearity tolerance")->check(CLI::PositiveNumber);
  points->add_option("--out", pa.out, "Output path (default stdout)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run randomized theorem checks");
  ver->add_option("--theorem", va.theorem, "Theorem id or 'all'")->required();
  ver->add_option("--samples", va.samples, "Samples per theorem")->check(CLI::PositiveNumber);
  ver->add_option("--seed", va.seed, "64-bit seed");
  ver->add_option("--tol", va.tol, "Override the theorem tolerance")->check(CLI::PositiveNumber);
  ver->add_option("--out", va.out, "Output path (default stdout)");

  ConjectureArgs ca;
  auto* conj = app.add_subcommand("conjecture", "Randomized search on the rho(h,j) = rho(k,l) conjecture");
  conj->add_option("--samples", ca.samples, "Number of samples")->required()->check(CLI::PositiveNumber);
  conj->add_option("--seed", ca.seed, "64-bit seed");
  conj->add_option("--out", ca.out, "Output path (default stdout)");

  FigureArgs fa;
  auto* fig = app.add_subcommand("figure", "Recompute a figure as JSON or SVG");
  fig->add_option("--id", fa.id, "Figure id: 1, 2, 3, 5 or 6")->required();
  fig->add_option("--format", fa.format, "json or svg")->check(CLI::IsMember({"json", "svg"}));
  fig->add_option("--out", fa.out, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*points) return cmd_points(pa);
    if (*ver) return cmd_verify(va);
    if (*conj) return cmd_conjecture(ca);
    if (*fig) return cmd_figure(fa);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
