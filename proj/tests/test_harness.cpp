#include <gtest/gtest.h>

#include "gitstab/errors.hpp"
#include "gitstab/harness.hpp"
#include "gitstab/linalg.hpp"

using namespace gitstab;

namespace {

QuiverSpec kronecker() { return QuiverSpec(2, {{0, 1}, {0, 1}}, {1, 1}, {1, -1}); }

ThinQuiverRep kronecker_rep(std::int64_t a, std::int64_t b) { return ThinQuiverRep(kronecker(), {a, b}); }

}  // namespace

TEST(CounterRng, DependsOnlyOnKey) {
  CounterRng a(42, 1, 7), b(42, 1, 7), c(42, 1, 8), d(42, 2, 7), e(43, 1, 7);
  const auto x = a.next();
  EXPECT_EQ(x, b.next());
  EXPECT_NE(x, c.next());
  EXPECT_NE(x, d.next());
  EXPECT_NE(x, e.next());
}

TEST(CounterRng, UniformStaysInRangeAndCoversIt) {
  CounterRng rng(1, 1, 1);
  std::vector<int> seen(19, 0);
  for (int i = 0; i < 5000; ++i) {
    const auto v = rng.uniform(-9, 9);
    ASSERT_GE(v, -9);
    ASSERT_LE(v, 9);
    ++seen[static_cast<std::size_t>(v + 9)];
  }
  for (int s : seen) EXPECT_GT(s, 150);
  EXPECT_EQ(rng.uniform(3, 3), 3);
}

TEST(RandomInstance, TrialIsReproducibleFromItsIndex) {
  for (const FamilySpec& f : {FamilySpec(ControlSpec{3, 2}), FamilySpec(DagSpec{5, 2}), FamilySpec(kronecker())}) {
    CounterRng a(9, 1, 123), b(9, 1, 123);
    EXPECT_EQ(random_instance(f, a, 9), random_instance(f, b, 9));
  }
  CounterRng rng(0, 1, 0);
  EXPECT_THROW(random_instance(ControlSpec{2, 1}, rng, 0), DomainError);
}

TEST(RandomInstance, EntriesRespectTheBound) {
  for (std::uint64_t i = 0; i < 50; ++i) {
    CounterRng rng(5, 1, i);
    const auto x = std::get<ControlInstance>(random_instance(ControlSpec{3, 2}, rng, 2));
    for (const auto& e : x.a().entries()) EXPECT_TRUE(Rational(-2) <= e && e <= Rational(2));
    EXPECT_EQ(x.n(), 3U);
    EXPECT_EQ(x.m(), 2U);
  }
}

TEST(SampleGenericPoints, ControlAndKronecker) {
  TrialConfig cfg;
  cfg.family = ControlSpec{3, 2};
  cfg.trials = 2000;
  cfg.seed = 42;
  auto r = sample_generic_points(cfg);
  EXPECT_EQ(r.trials_run, 2000U);
  EXPECT_EQ(r.unstable_hits, 0U);

  cfg.family = kronecker();
  cfg.trials = 1000;
  r = sample_generic_points(cfg);
  EXPECT_EQ(r.unstable_hits, 0U);  // zero draws are redrawn
}

TEST(SampleGenericPoints, DagWithTooFewSamplesIsAlwaysDegenerate) {
  TrialConfig cfg;
  cfg.family = DagSpec{2, 3};
  cfg.trials = 25;
  const auto r = sample_generic_points(cfg);
  EXPECT_EQ(r.unstable_hits, 25U);
  ASSERT_FALSE(r.notes.empty());
  EXPECT_NE(r.notes[0].find("n < k"), std::string::npos);
}

TEST(SampleGenericPoints, DeterministicAcrossWorkerCounts) {
  TrialConfig cfg;
  cfg.family = ControlSpec{2, 1};
  cfg.trials = 600;
  cfg.entry_bound = 1;  // small bound so some draws are uncontrollable
  cfg.seed = 17;
  const auto serial = sample_generic_points(cfg);
  EXPECT_GT(serial.unstable_hits, 0U);
  cfg.workers = 3;
  const auto parallel = sample_generic_points(cfg);
  EXPECT_TRUE(serial.same_result(parallel));
  EXPECT_TRUE(serial.same_result(sample_generic_points(cfg)));
  EXPECT_LE(serial.unstable_hits, serial.trials_run);
}

TEST(QuadraticPath, InterpolatesThroughThreePoints) {
  const ModelInstance a = kronecker_rep(1, 0), m = kronecker_rep(1, 1), b = kronecker_rep(0, 1);
  EXPECT_EQ(quadratic_path_point(a, m, b, Rational(0)), a);
  EXPECT_EQ(quadratic_path_point(a, m, b, Rational::parse("1/2")), m);
  EXPECT_EQ(quadratic_path_point(a, m, b, Rational(1)), b);
  EXPECT_EQ(count_path_failures(a, m, b, 256), 0U);
  // Through the origin: the straight line from (1, 0) to (-1, 0) hits it at t = 1/2.
  EXPECT_EQ(count_path_failures(kronecker_rep(1, 0), kronecker_rep(0, 0), kronecker_rep(-1, 0), 4), 1U);
  EXPECT_THROW(count_path_failures(a, m, b, 0), DomainError);
}

TEST(SamplePathStability, ControlAndDag) {
  TrialConfig cfg;
  cfg.family = ControlSpec{3, 2};
  cfg.paths = 10;
  cfg.path_samples = 64;
  auto r = sample_path_stability(cfg);
  EXPECT_EQ(r.paths_run, 10U);
  EXPECT_EQ(r.path_failures, 0U);
  EXPECT_FALSE(r.paths_skipped);

  cfg.family = DagSpec{10, 3};
  cfg.convention = OrbitConvention::Centralizer;
  r = sample_path_stability(cfg);
  EXPECT_EQ(r.path_failures, 0U);
}

TEST(SamplePathStability, SkippedWhenDMinBelowTwo) {
  TrialConfig cfg;
  cfg.family = ControlSpec{3, 2};
  cfg.convention = OrbitConvention::Centralizer;
  cfg.paths = 3;
  const auto r = sample_path_stability(cfg);
  EXPECT_TRUE(r.paths_skipped);
  EXPECT_EQ(r.paths_run, 0U);
  EXPECT_EQ(r.path_failures, 0U);
}

TEST(SamplePathStability, DeterministicAcrossWorkerCounts) {
  TrialConfig cfg;
  cfg.family = kronecker();
  cfg.paths = 20;
  cfg.path_samples = 16;
  cfg.entry_bound = 1;
  cfg.seed = 5;
  const auto serial = sample_path_stability(cfg);
  cfg.workers = 4;
  EXPECT_TRUE(serial.same_result(sample_path_stability(cfg)));
}

TEST(KroneckerOracle, Examples) {
  const auto r2 = kronecker_oracle_check(2);
  EXPECT_EQ(r2.trials_run, 625U);
  EXPECT_EQ(r2.oracle_mismatches, 0U);
  EXPECT_EQ(r2.unstable_hits, 1U);

  const auto r0 = kronecker_oracle_check(0);
  EXPECT_EQ(r0.trials_run, 1U);
  EXPECT_EQ(r0.unstable_hits, 1U);
  EXPECT_EQ(r0.oracle_mismatches, 0U);
}

TEST(KroneckerOracle, FlippedThetaIsCaught) {
  // With theta = (-1, 1) the sink vertex alone is a closed subset with positive
  // theta, so every point of the 3^4 grid is non-stable: 80 mismatches.
  const auto r = kronecker_oracle_check(1, {-1, 1});
  EXPECT_EQ(r.trials_run, 81U);
  EXPECT_EQ(r.unstable_hits, 81U);
  EXPECT_EQ(r.oracle_mismatches, 80U);
  EXPECT_THROW(kronecker_oracle_check(-1), DomainError);
}

TEST(Degenerates, FlaggedAndRepaired) {
  TrialConfig cfg;
  cfg.family = DagSpec{10, 3};
  cfg.trials = 100;
  const auto r = detect_constructed_degenerates(cfg);
  EXPECT_EQ(r.trials_run, 100U);
  EXPECT_EQ(r.unstable_hits, 100U);
  EXPECT_EQ(r.stabilized_stable, 100U);
  EXPECT_EQ(r.oracle_mismatches, 0U);
}

TEST(Degenerates, ZeroFactorGivesZeroParents) {
  const RationalMatrix u(4, 1);
  const RationalMatrix v{{3, -2}};
  RationalMatrix y(4, 3);
  const RationalMatrix x = u * v;
  for (std::size_t i = 0; i < 4; ++i) y(i, 2) = Rational(static_cast<std::int64_t>(i));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) y(i, j) = x(i, j);
  const auto st = dag_status(DagInstance(2, y));
  EXPECT_EQ(st.verdict, Verdict::NotStable);
  EXPECT_EQ(st.parent_rank, 0U);
}

TEST(Degenerates, Preconditions) {
  TrialConfig cfg;
  cfg.family = DagSpec{5, 1};
  EXPECT_THROW(detect_constructed_degenerates(cfg), PreconditionError);
  cfg.family = DagSpec{2, 3};
  EXPECT_THROW(detect_constructed_degenerates(cfg), PreconditionError);
  cfg.family = ControlSpec{3, 2};
  EXPECT_THROW(detect_constructed_degenerates(cfg), PreconditionError);
}

TEST(HarnessReport, MergeSumsCounters) {
  HarnessReport a, b;
  a.trials_run = 3;
  a.unstable_hits = 1;
  a.notes = {"x"};
  b.trials_run = 4;
  b.path_failures = 2;
  b.paths_skipped = true;
  b.notes = {"y"};
  a += b;
  EXPECT_EQ(a.trials_run, 7U);
  EXPECT_EQ(a.unstable_hits, 1U);
  EXPECT_EQ(a.path_failures, 2U);
  EXPECT_TRUE(a.paths_skipped);
  EXPECT_EQ(a.notes, (std::vector<std::string>{"x", "y"}));
}
