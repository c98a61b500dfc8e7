#include "report.hpp"
#include "test_util.hpp"
#include "verify.hpp"

using namespace diskgeom;
using testutil::C;

TEST(SplitMix64, Reproducible) {
  verify::SplitMix64 a(7), b(7);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
  // Reference output of SplitMix64 seeded with 0.
  verify::SplitMix64 z(0);
  EXPECT_EQ(z.next(), 0xe220a8397b1dcdafULL);
  auto s1 = verify::SplitMix64::for_sample(42, 5), s2 = verify::SplitMix64::for_sample(42, 5);
  EXPECT_EQ(s1.next(), s2.next());
  EXPECT_NE(verify::SplitMix64::for_sample(42, 5).next(), verify::SplitMix64::for_sample(42, 6).next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Registry, KnownAndUnknownIds) {
  EXPECT_GE(verify::theorems().size(), 12u);
  EXPECT_EQ(verify::theorem("eleven_points").tolerance, 1e-8);
  EXPECT_EQ(verify::theorem("chordal_isometry").sampler, verify::Sampler::extended_pair);
  try {
    verify::theorem("bogus");
    ADD_FAILURE() << "no throw";
  } catch (const verify::HarnessError& e) {
    EXPECT_EQ(e.kind(), "UnknownTheorem");
  }
  EXPECT_EQ(verify::parse_sampler("lens_pair"), verify::Sampler::lens_pair);
  EXPECT_FALSE(verify::parse_sampler("nope"));
}

TEST(Registry, SamplerMismatchRejected) {
  verify::SampleSpec spec;
  spec.sampler = verify::Sampler::circle_quadruple;
  spec.count = 10;
  try {
    verify::run_check("eleven_points", spec, 1e-8);
    ADD_FAILURE() << "no throw";
  } catch (const verify::HarnessError& e) {
    EXPECT_EQ(e.kind(), "SamplerMismatch");
  }
}

TEST(Draw, SamplesRespectMargins) {
  for (const auto s : {verify::Sampler::disk_pair, verify::Sampler::lens_pair, verify::Sampler::circle_quadruple}) {
    verify::SampleSpec spec;
    spec.sampler = s;
    for (std::uint64_t i = 0; i < 1000; ++i) {
      const auto sample = verify::draw(spec, i);
      ASSERT_TRUE(sample);
      for (const auto& in : sample->inputs) {
        if (in.name == "lens_center") continue;
        const double r = std::abs(in.value.finite());
        if (s == verify::Sampler::circle_quadruple)
          EXPECT_NEAR(r, 1.0, 1e-15);
        else {
          EXPECT_GE(r, spec.margins.min_modulus);
          EXPECT_LE(r, 1 - spec.margins.boundary);
        }
      }
    }
  }
}

TEST(RunCheck, DeterministicAndWorstCaseReproducible) {
  for (const char* id : {"eleven_points", "midpoint_constructions", "orthocenter_w2", "lens_lemma"}) {
    const auto spec = verify::default_spec(id, 500, 1234);
    const auto r1 = verify::run_check(id, spec, verify::theorem(id).tolerance);
    const auto r2 = verify::run_check(id, spec, verify::theorem(id).tolerance);
    EXPECT_EQ(report::verification_json(r1, false).dump(), report::verification_json(r2, false).dump()) << id;
    EXPECT_TRUE(r1.pass) << id;
    ASSERT_TRUE(r1.worst_case) << id;
    EXPECT_EQ(verify::residual(id, *r1.worst_case), r1.max_residual) << id;
    const auto again = verify::draw(spec, r1.worst_index);
    ASSERT_TRUE(again);
    EXPECT_EQ(verify::residual(id, *again), r1.max_residual) << id;
  }
}

TEST(RunCheck, AllTheoremsPassAtDefaultTolerance) {
  for (const auto& t : verify::theorems()) {
    const auto r = verify::run_check(t.id, verify::default_spec(t.id, 2000, 42), t.tolerance);
    EXPECT_TRUE(r.pass) << t.id << " max " << r.max_residual;
    EXPECT_GE(r.evaluated, 1800u) << t.id;
  }
}

TEST(RunCheck, TightToleranceFails) {
  const auto r = verify::run_check("eleven_points", verify::default_spec("eleven_points", 200, 3), 1e-300);
  EXPECT_FALSE(r.pass);
  EXPECT_GT(r.max_residual, 0.0);
}

TEST(Oracles, GcisOracleMatchesSecondFigure) {
  const C a = 0.5, b = std::polar(0.6, 1.0);
  const C uc = verify::gcis_oracle(a, 1.0 / std::conj(b), b, 1.0 / std::conj(a));
  EXPECT_NEAR_C(uc, C(0.8298, 0.5580), 2e-3);
  EXPECT_NEAR_C(uc, gcis(a, 1.0 / std::conj(b), b, 1.0 / std::conj(a)), 1e-9);
}

TEST(Oracles, MidpointOracle) {
  EXPECT_NEAR_C(verify::midpoint_oracle(C(0), C(0.8)), C(0.5), 1e-12);
  testutil::Gen gen(61);
  for (int i = 0; i < 1000; ++i) {
    const auto [a, b] = gen.disk_pair();
    const C m = verify::midpoint_oracle(a, b);
    EXPECT_NEAR_C(m, verify::midpoint_oracle(b, a), 1e-12);
    EXPECT_NEAR(rho(a, m), rho(b, m), 1e-9);
  }
}

TEST(Oracles, ChordalMidpointOracle) {
  EXPECT_NEAR_C(verify::chordal_midpoint_oracle(C(0), C(0.8)), C(0.3507810593582122), 1e-12);
}

TEST(Conjecture, SixthFigureValues) {
  const C a = std::polar(1.0, -0.1), b = std::polar(1.0, 0.5), c = std::polar(1.0, 1.5), d = std::polar(1.0, 3.3);
  const auto r = verify::conjecture_check(a, b, c, d, b + 0.447 * (c - b));
  EXPECT_NEAR_C(r.points.g, C(0.6454, 1.6248), 2e-3);
  EXPECT_NEAR_C(r.points.h, C(0.5169, 0.711), 2e-3);
  EXPECT_NEAR_C(r.points.j, C(0.4876, 0.5026), 2e-3);
  EXPECT_NEAR_C(r.points.k, C(0.4645, 0.3383), 2e-3);
  EXPECT_NEAR_C(r.points.l, C(0.4005, -0.1172), 2e-3);
  EXPECT_LE(r.residual, 1e-9);
  const auto mob = verify::mobius_invariance_check(r.points);
  EXPECT_LE(mob.h_l, 1e-9);
  EXPECT_LE(mob.j_k, 1e-9);
}

TEST(Conjecture, MobiusCheckAtZeroComparesModuli) {
  const C a = std::polar(1.0, -0.1), b = std::polar(1.0, 0.5), c = std::polar(1.0, 1.5), d = std::polar(1.0, 3.3);
  const auto r = verify::conjecture_check(a, b, c, d, b + 0.447 * (c - b));
  const auto mob = verify::mobius_invariance_check(r.points, C(0));
  EXPECT_NEAR(mob.h_l, std::abs(std::abs(r.points.h) - std::abs(r.points.l)), 1e-15);
  EXPECT_NEAR(mob.j_k, std::abs(std::abs(r.points.j) - std::abs(r.points.k)), 1e-15);
}

TEST(Conjecture, SingleSampleEchoesInputs) {
  const auto r = verify::run_conjecture(1, 9);
  EXPECT_EQ(r.requested, 1u);
  ASSERT_TRUE(r.first_sample);
  const auto drawn = verify::draw_conjecture(9, 0, {});
  ASSERT_TRUE(drawn);
  EXPECT_EQ(r.first_sample->a, drawn->a);
  EXPECT_EQ(r.first_sample->h, drawn->h);
  EXPECT_EQ(report::conjecture_json(r, false).dump(), report::conjecture_json(verify::run_conjecture(1, 9), false).dump());
}

TEST(Conjecture, RandomSearchHoldsNumerically) {
  const auto r = verify::run_conjecture(2000, 42);
  EXPECT_GE(r.accepted, 1800u);
  EXPECT_LE(r.max_residual, 1e-9);
  EXPECT_FALSE(r.large_residual);
  EXPECT_LE(r.max_mobius_h_l, 1e-9);
  EXPECT_LE(r.max_mobius_j_k, 1e-9);
}
