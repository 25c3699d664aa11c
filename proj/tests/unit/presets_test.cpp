#include <gtest/gtest.h>

#include <cmath>

#include "bsig/nash.hpp"
#include "bsig/presets.hpp"
#include "bsig/stackelberg.hpp"
#include "bsig/team.hpp"
#include "support/oracles.hpp"

namespace bsig {
namespace {

using testing::ConfigSampler;

TEST(BiasedCostTest, CostMatrices) {
  const GameConfig g = biased_cost_config({0.5, 0.3, 1, 1, 1});
  EXPECT_EQ(g.transmitter.costs, (CostMatrix{0.7, 0.3, 0.3, 0.7}));
  EXPECT_EQ(g.receiver.costs, (CostMatrix{0, 1, 1, 0}));
  EXPECT_EQ(g.transmitter.priors, g.receiver.priors);
  EXPECT_TRUE(biased_cost_config({0.5, 1.0, 1, 1, 1}).is_team());
  EXPECT_THROW(biased_cost_config({0.5, 1.5, 1, 1, 1}), Error);
  EXPECT_THROW(biased_cost_config({0.0, 0.5, 1, 1, 1}), Error);
}

TEST(BiasedCostTest, KValues) {
  ConfigSampler rng(71);
  for (int i = 0; i < 100; ++i) {
    const double pi0 = rng.uniform(0.01, 0.99);
    const double alpha = rng.uniform(0.0, 1.0);
    const StackelbergParams p = derived_params(biased_cost_config({pi0, alpha, 1, 1, 1}));
    const double expected = std::sqrt(pi0 * (1 - pi0)) * (2 * alpha - 1);
    EXPECT_NEAR(p.k0, expected, 1e-12);
    EXPECT_NEAR(p.k1, expected, 1e-12);
  }
  const StackelbergParams half = derived_params(biased_cost_config({0.5, 0.8, 1, 1, 1}));
  EXPECT_DOUBLE_EQ(half.tau, 1.0);
  EXPECT_NEAR(half.k0, 0.5 * (2 * 0.8 - 1), 1e-15);
}

TEST(BiasedCostTest, EquilibriumMap) {
  for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    const GameConfig g = biased_cost_config({0.5, alpha, 1, 1, 1});
    EXPECT_EQ(solve_stackelberg(g).informative, alpha > 0.5) << alpha;
    const NashTag expected = alpha < 0.5    ? NashTag::kNoEquilibrium
                             : alpha == 0.5 ? NashTag::kNonInformative
                                            : NashTag::kUniqueInformative;
    EXPECT_EQ(classify_nash(g).tag, expected) << alpha;
  }
}

TEST(SubjectivePriorsPresetTest, XiIsExactlyOne) {
  ConfigSampler rng(72);
  for (int i = 0; i < 200; ++i) {
    const CostMatrix c = rng.costs();
    if (c.h0_excess() == 0.0 || c.h1_excess() == 0.0) continue;
    const GameConfig g =
        subjective_priors_config(rng.uniform(0.01, 0.99), rng.uniform(0.01, 0.99), c);
    const XiParams xi = xi_params(g);
    EXPECT_EQ(xi.xi0, 1.0);
    EXPECT_EQ(xi.xi1, 1.0);
    const NashTag tag = classify_nash(g).tag;
    if (channel_informative(tau_of(g.receiver))) {
      EXPECT_EQ(tag, NashTag::kUniqueInformative);
    } else {
      EXPECT_EQ(tag, NashTag::kNonInformative);
    }
  }
}

TEST(SubjectivePriorsPresetTest, KFormula) {
  const CostMatrix c{0.1, 0.6, 0.9, 0.2};
  const double pt = 0.3;
  const double pr = 0.55;
  const StackelbergParams p = derived_params(subjective_priors_config(pt, pr, c));
  const double root = std::sqrt((c.c10 - c.c00) * (c.c01 - c.c11));
  EXPECT_NEAR(p.k0, pt * std::sqrt((1 - pr) / pr) * root, 1e-15);
  EXPECT_NEAR(p.k1, (1 - pt) * std::sqrt(pr / (1 - pr)) * root, 1e-15);
  EXPECT_GT(p.k0 + p.k1, 0.0);
}

TEST(SubjectivePriorsPresetTest, SamePriorIsTeamAndContinuityIsEnforced) {
  EXPECT_TRUE(subjective_priors_config(0.4, 0.4, CostMatrix{}).is_team());
  EXPECT_THROW(subjective_priors_config(0.0, 0.4, CostMatrix{}), Error);
}

TEST(FigureOnePresetTest, Parameters) {
  const GameConfig g = figure1_config();
  EXPECT_EQ(g.receiver.costs, (CostMatrix{0.0, 0.4, 0.9, 0.0}));
  EXPECT_EQ(g.transmitter.costs, (CostMatrix{0.6, 0.4, 0.4, 0.6}));
  EXPECT_EQ(g.transmitter.priors.pi0, 0.25);
  EXPECT_EQ(g.receiver.priors.pi0, 0.25);
  EXPECT_EQ(g.sigma, 0.1);
  EXPECT_DOUBLE_EQ(g.d_max(), 20.0);
  EXPECT_NEAR(tau_of(g.receiver), 0.75, 1e-15);
  EXPECT_NEAR(solve_stackelberg(g).d_star, 0.4704, 1e-3);
  EXPECT_TRUE(figure1_team_config().is_team());
}

TEST(PresetLookupTest, Names) {
  for (const std::string& n : preset_names()) EXPECT_NO_THROW(preset_config(n));
  EXPECT_THROW(preset_config("figure2"), Error);
  PresetOptions o;
  o.alpha = 0.9;
  EXPECT_EQ(preset_config("biased-cost", o).transmitter.costs.c01, 0.9);
}

}  // namespace
}  // namespace bsig
