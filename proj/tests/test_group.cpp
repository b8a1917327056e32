#include <gtest/gtest.h>

#include "gitstab/errors.hpp"
#include "gitstab/group.hpp"
#include "oracles.hpp"

using namespace gitstab;

TEST(GroupDim, SumOfSquaresPlusTorus) {
  EXPECT_EQ(group_dim(GroupSpec({3}, 0)), 9U);
  EXPECT_EQ(group_dim(GroupSpec({3}, 1)), 10U);
  EXPECT_EQ(group_dim(GroupSpec({1, 1}, 0)), 2U);
  EXPECT_EQ(group_dim(GroupSpec({2, 3}, 2)), 15U);
  EXPECT_EQ(group_dim(GroupSpec({}, 0)), 0U);
  EXPECT_THROW(GroupSpec({2, 0}, 0), DomainError);
}

TEST(CentralizerDim, MultiplicityBlocks) {
  // (0, 0, -1) on GL_3: blocks of sizes 2 and 1.
  EXPECT_EQ(centralizer_dim(GroupSpec({3}, 0), OnePSClass(OnePS{{{0, 0, -1}}, {}})), 5U);
  // DAG-type class on GL_3 x C^*.
  EXPECT_EQ(centralizer_dim(GroupSpec({3}, 1), OnePSClass(OnePS{{{-1, 0, 0}}, {-1}})), 6U);
  // Trivial subgroup centralizes everything.
  EXPECT_EQ(centralizer_dim(GroupSpec({2, 2}, 1), OnePSClass(OnePS{{{0, 0}, {0, 0}}, {0}})), 9U);
}

TEST(ParabolicDim, AddsUpperTriangularBlocks) {
  EXPECT_EQ(parabolic_dim(GroupSpec({3}, 0), OnePSClass(OnePS{{{0, 0, -1}}, {}})), 7U);
  EXPECT_EQ(parabolic_dim(GroupSpec({3}, 0), OnePSClass(OnePS{{{0, -1, -2}}, {}})), 6U);
  EXPECT_EQ(parabolic_dim(GroupSpec({2}, 0), OnePSClass(OnePS{{{0, 0}}, {}})), 4U);
}

TEST(OrbitDim, BothConventions) {
  const GroupSpec g({3}, 0);
  const OnePSClass lambda(OnePS{{{0, 0, -1}}, {}});
  EXPECT_EQ(orbit_dim(g, lambda, OrbitConvention::Centralizer), 4U);  // 9 - 5
  EXPECT_EQ(orbit_dim(g, lambda, OrbitConvention::Parabolic), 2U);    // 9 - 7
  // DAG class j = 1 at k = 3: 2k - 2.
  EXPECT_EQ(orbit_dim(GroupSpec({3}, 1), OnePSClass(OnePS{{{-1, 0, 0}}, {-1}}), OrbitConvention::Centralizer), 4U);
}

TEST(OrbitDim, AgreesWithPairCountOracles) {
  for (std::uint64_t t = 0; t < 300; ++t) {
    CounterRng rng(3, 200, t);
    const auto factors = static_cast<std::size_t>(rng.uniform(1, 3));
    std::vector<std::size_t> ranks;
    std::vector<std::vector<Weight>> weights;
    std::size_t central = 0, parabolic = 0, total = 0;
    for (std::size_t f = 0; f < factors; ++f) {
      const auto n = static_cast<std::size_t>(rng.uniform(1, 5));
      std::vector<Weight> w(n);
      for (auto& x : w) x = rng.uniform(-3, 3);
      central += oracle::equal_weight_pairs(w);
      parabolic += oracle::nonnegative_weight_pairs(w);
      total += n * n;
      ranks.push_back(n);
      weights.push_back(std::move(w));
    }
    const auto torus = static_cast<std::size_t>(rng.uniform(0, 2));
    std::vector<Weight> tw(torus);
    for (auto& x : tw) x = rng.uniform(-3, 3);
    const GroupSpec g(ranks, torus);
    const OnePSClass lambda(OnePS{weights, tw});
    EXPECT_EQ(centralizer_dim(g, lambda), central + torus);
    EXPECT_EQ(parabolic_dim(g, lambda), parabolic + torus);
    EXPECT_EQ(group_dim(g), total + torus);
    // Orbit monotonicity: centralizer orbit is never smaller.
    EXPECT_GE(orbit_dim(g, lambda, OrbitConvention::Centralizer), orbit_dim(g, lambda, OrbitConvention::Parabolic));
  }
}

TEST(OnePSClass, NormalFormSortsAndDividesContent) {
  const OnePSClass c(OnePS{{{-2, 4, 0}}, {2}});
  EXPECT_EQ(c.gl_weights(), (std::vector<std::vector<Weight>>{{2, 0, -1}}));
  EXPECT_EQ(c.torus_weights(), (std::vector<Weight>{1}));
  EXPECT_EQ(OnePSClass(OnePS{{{0, -1}}, {}}), OnePSClass(OnePS{{{-3, 0}}, {}}));
  EXPECT_EQ(OnePSClass(OnePS{{{0, 0}}, {0}}).gl_weights(), (std::vector<std::vector<Weight>>{{0, 0}}));
}

TEST(OnePSClass, ShapeMismatchRejected) {
  EXPECT_THROW(centralizer_dim(GroupSpec({3}, 0), OnePSClass(OnePS{{{0, 1}}, {}})), ShapeError);
  EXPECT_THROW(orbit_dim(GroupSpec({2}, 1), OnePSClass(OnePS{{{0, 1}}, {}}), OrbitConvention::Parabolic), ShapeError);
}

TEST(CharacterPairing, ExamplesAndPowerLaw) {
  // det^1 on GL_2 against diag(t, t^-1) pairs to 0; against diag(t, 1) to 1.
  EXPECT_EQ(character_pairing(Character{{1}, {}}, OnePS{{{1, -1}}, {}}), 0);
  EXPECT_EQ(character_pairing(Character{{1}, {}}, OnePS{{{1, 0}}, {}}), 1);
  EXPECT_EQ(character_pairing(Character{{2, -1}, {3}}, OnePS{{{1, 1}, {2}}, {-1}}), 4 - 2 - 3);
  for (std::uint64_t t = 0; t < 100; ++t) {
    CounterRng rng(4, 200, t);
    const OnePS lambda{{{rng.uniform(-4, 4), rng.uniform(-4, 4)}, {rng.uniform(-4, 4)}}, {rng.uniform(-4, 4)}};
    const Character chi{{rng.uniform(-3, 3), rng.uniform(-3, 3)}, {rng.uniform(-3, 3)}};
    const Weight p = rng.uniform(-5, 5);
    EXPECT_EQ(character_pairing(chi, lambda.power(p)), p * character_pairing(chi, lambda));
  }
  EXPECT_THROW(character_pairing(Character{{1, 1}, {}}, OnePS{{{1}}, {}}), ShapeError);
}

TEST(OrbitConvention, ParseAndPrint) {
  EXPECT_EQ(parse_orbit_convention("centralizer"), OrbitConvention::Centralizer);
  EXPECT_EQ(parse_orbit_convention("parabolic"), OrbitConvention::Parabolic);
  EXPECT_EQ(to_string(OrbitConvention::Parabolic), "parabolic");
  EXPECT_THROW(parse_orbit_convention("levi"), ParseError);
}
