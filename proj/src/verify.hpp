#ifndef DISKGEOM_VERIFY_HPP
#define DISKGEOM_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "diskgeom/diskgeom.hpp"

namespace diskgeom::verify {

using Point = Complex<double>;
using XPoint = ExtendedPoint<double>;

/// SplitMix64; uniforms take the top 53 bits.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Stream for one sample, independent of evaluation order.
  static SplitMix64 for_sample(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 mix(index);
    SplitMix64 seeded(seed ^ mix.next());
    return SplitMix64(seeded.next());
  }

 private:
  std::uint64_t state_;
};

enum class Sampler { disk_pair, circle_quadruple, lens_pair, extended_pair };

const char* to_string(Sampler s);
std::optional<Sampler> parse_sampler(const std::string& name);

struct Margins {
  double min_modulus = 0.05;
  double boundary = 0.05;
  double min_angle = 0.05;    // radians, away from collinearity with 0
  double min_gap = 0.1;       // radians between consecutive quadruple points
  double modulus_gap = 0.0;   // minimum ||a| − |b||
};

struct SampleSpec {
  Sampler sampler = Sampler::disk_pair;
  std::size_t count = 1000;
  std::uint64_t seed = 0;
  Margins margins;
};

struct NamedInput {
  std::string name;
  XPoint value;
};

struct Sample {
  std::vector<NamedInput> inputs;
  Point at(const std::string& name) const;
  XPoint extended(const std::string& name) const;
};

/// Draws sample `index`; nullopt when rejection sampling gives up.
std::optional<Sample> draw(const SampleSpec& spec, std::uint64_t index);

struct VerificationReport {
  std::string theorem;
  SampleSpec spec;
  std::size_t evaluated = 0;
  std::size_t skipped = 0;
  double max_residual = 0;
  double mean_residual = 0;
  std::optional<Sample> worst_case;
  std::size_t worst_index = 0;
  double tolerance = 0;
  bool pass = false;
  std::optional<std::string> failure;  // e.g. SamplerStarvation
  double wall_time = 0;                // seconds
};

/// Usage-level failures of the harness itself.
class HarnessError : public std::runtime_error {
 public:
  HarnessError(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct TheoremInfo {
  const char* id;
  Sampler sampler;
  double tolerance;
  double modulus_gap;
};

const std::vector<TheoremInfo>& theorems();
const TheoremInfo& theorem(const std::string& id);  // throws UnknownTheorem
SampleSpec default_spec(const std::string& id, std::size_t count, std::uint64_t seed);

/// Residual of one sample; nullopt for a degenerate (skipped) sample.
std::optional<double> residual(const std::string& theorem_id, const Sample& sample);

VerificationReport run_check(const std::string& theorem_id, const SampleSpec& spec, double tol);

/// Circle-intersection evaluation of GCIS[a,b,c,d], independent of the F quadratic.
Point gcis_oracle(const Point& a, const Point& b, const Point& c, const Point& d);

/// Hyperbolic midpoint by bisection on ρ along the T_x-image diameter.
Point midpoint_oracle(const Point& x, const Point& y);

/// Chordal midpoint by normalizing the sphere chord midpoint.
Point chordal_midpoint_oracle(const Point& a, const Point& b);

struct ConjecturePoints {
  Point a, b, c, d, h;
  Point g, j, k, l;
};

struct ConjectureResult {
  ConjecturePoints points;
  double residual;  // |ρ(h,j) − ρ(k,l)|
};

/// Derived points and residual; PointOutsideDisk when h, j, k or l leaves the disk.
ConjectureResult conjecture_check(const Point& a, const Point& b, const Point& c, const Point& d,
                                  const Point& h);

struct MobiusResidual {
  double h_l;  // ||T_w(h)| − |T_w(l)||
  double j_k;  // ||T_w(j)| − |T_w(k)||
};

MobiusResidual mobius_invariance_check(const ConjecturePoints& pts, const Point& w);
MobiusResidual mobius_invariance_check(const ConjecturePoints& pts);  // w = 1/conj(g)

struct ConjectureReport {
  std::size_t requested = 0;
  std::size_t accepted = 0;
  std::size_t skipped = 0;
  std::uint64_t seed = 0;
  double max_residual = 0;
  double mean_residual = 0;
  std::optional<ConjecturePoints> worst_case;
  std::optional<ConjecturePoints> first_sample;
  bool first_sample_accepted = false;  // derived points of first_sample are valid
  double max_mobius_h_l = 0;
  double max_mobius_j_k = 0;
  bool large_residual = false;  // max residual above the flag threshold
  double flag_threshold = 1e-6;
  double wall_time = 0;
};

std::optional<ConjecturePoints> draw_conjecture(std::uint64_t seed, std::uint64_t index, const Margins& margins);
ConjectureReport run_conjecture(std::size_t samples, std::uint64_t seed, const Margins& margins = {});

}  // namespace diskgeom::verify

#endif  // DISKGEOM_VERIFY_HPP
