#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bsig/detection.hpp"
#include "bsig/team.hpp"
#include "support/oracles.hpp"

namespace bsig {
namespace {

using testing::ConfigSampler;
using testing::reference_risk;
using testing::simpson_q;

TEST(QFunctionTest, MatchesNumericalIntegration) {
  for (int i = 0; i <= 1000; ++i) {
    const double x = -8.0 + 16.0 * i / 1000.0;
    EXPECT_NEAR(q_function(x), simpson_q(x), 1e-10) << "x = " << x;
  }
}

TEST(QFunctionTest, SymmetryAndLimits) {
  EXPECT_DOUBLE_EQ(q_function(0.0), 0.5);
  for (double x : {0.1, 1.0, 3.0, 7.5}) {
    EXPECT_NEAR(q_function(x) + q_function(-x), 1.0, 1e-15);
  }
  EXPECT_EQ(q_function(std::numeric_limits<double>::infinity()), 0.0);
  EXPECT_EQ(q_function(-std::numeric_limits<double>::infinity()), 1.0);
}

TEST(QFunctionTest, DeepTailKeepsRelativeAccuracy) {
  // Q(10) = 7.6198530241605e-24.
  EXPECT_NEAR(q_function(10.0) / 7.6198530241605e-24, 1.0, 1e-12);
  EXPECT_GT(q_function(30.0), 0.0);
}

TEST(ErrorProbabilitiesTest, RowsSumToOne) {
  ConfigSampler rng(11);
  for (int i = 0; i < 200; ++i) {
    const SignalPair s{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const DecisionRule r = rng.coin() ? DecisionRule::above(rng.uniform(-3, 3))
                                      : DecisionRule::below(rng.uniform(-3, 3));
    const ErrorProbabilities e = error_probabilities(s, r, rng.uniform(0.1, 2.0));
    EXPECT_EQ(e.p00 + e.p10, 1.0);
    EXPECT_EQ(e.p01 + e.p11, 1.0);
  }
}

TEST(ErrorProbabilitiesTest, KnownValues) {
  const ErrorProbabilities e = error_probabilities({-1.0, 1.0}, DecisionRule::above(0.0), 1.0);
  EXPECT_NEAR(e.p10, 0.15865525393145707, 1e-15);
  EXPECT_NEAR(e.p01, 0.15865525393145707, 1e-15);
  const ErrorProbabilities c = error_probabilities({-1.0, 1.0}, DecisionRule::always1(), 1.0);
  EXPECT_EQ(c.p10, 1.0);
  EXPECT_EQ(c.p11, 1.0);
}

TEST(ErrorProbabilitiesTest, RejectsBadInputs) {
  EXPECT_THROW(error_probabilities({0.0, 0.0}, DecisionRule::above(0.0), 0.0), Error);
  EXPECT_THROW(error_probabilities({std::nan(""), 0.0}, DecisionRule::above(0.0), 1.0), Error);
  EXPECT_THROW(error_probabilities({0.0, 0.0},
                                   DecisionRule::above(std::numeric_limits<double>::infinity()),
                                   1.0),
               Error);
}

TEST(BayesRiskTest, MatchesReferenceDefinition) {
  ConfigSampler rng(12);
  for (int i = 0; i < 100; ++i) {
    const AgentSpec a = rng.agent();
    const SignalPair s{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const DecisionRule r = rng.coin() ? DecisionRule::above(rng.uniform(-2, 2))
                                      : DecisionRule::below(rng.uniform(-2, 2));
    const double sigma = rng.uniform(0.3, 2.0);
    EXPECT_NEAR(agent_risk(a, s, r, sigma), reference_risk(a, s, r, sigma), 1e-10);
  }
}

TEST(PriorOnlyDecisionTest, FollowsWeightedPriors) {
  AgentSpec a{{0.3, 0.7}, {0, 1, 1, 0}};
  EXPECT_EQ(prior_only_decision(a), DecisionRule::always1());
  a.priors = {0.7, 0.3};
  EXPECT_EQ(prior_only_decision(a), DecisionRule::always0());
  a.priors = {0.5, 0.5};
  EXPECT_EQ(prior_only_decision(a), DecisionRule::always0());  // tie
}

TEST(LrtBestResponseTest, ThresholdFormula) {
  const AgentSpec a{{0.25, 0.75}, {0.0, 0.4, 0.9, 0.0}};  // tau = 0.75
  const double sigma = 0.5;
  const DecisionRule r = lrt_best_response(a, {-1.0, 2.0}, sigma);
  ASSERT_EQ(r.kind, DecisionRule::Kind::kThresholdAbove);
  EXPECT_NEAR(r.threshold, 0.5 + 0.25 * std::log(0.75) / 3.0, 1e-15);

  const DecisionRule flipped = lrt_best_response(a, {2.0, -1.0}, sigma);
  ASSERT_EQ(flipped.kind, DecisionRule::Kind::kThresholdBelow);
  EXPECT_NEAR(flipped.threshold, 0.5 - 0.25 * std::log(0.75) / 3.0, 1e-15);
}

TEST(LrtBestResponseTest, NegativeZetaReversesDirection) {
  const AgentSpec a{{0.5, 0.5}, {1.0, 0.0, 0.0, 1.0}};
  EXPECT_EQ(lrt_best_response(a, {-1.0, 1.0}, 1.0).kind, DecisionRule::Kind::kThresholdBelow);
}

TEST(LrtBestResponseTest, FallsBackToPriors) {
  const AgentSpec a{{0.3, 0.7}, {0, 1, 1, 0}};
  EXPECT_EQ(lrt_best_response(a, {0.5, 0.5}, 1.0), DecisionRule::always1());
  const AgentSpec neg{{0.5, 0.5}, {0.0, 1.0, 0.0, 0.5}};  // tau < 0
  EXPECT_TRUE(lrt_best_response(neg, {-1.0, 1.0}, 1.0).is_constant());
}

TEST(LrtBestResponseTest, ConfigOverloadChecksPower) {
  GameConfig g;
  EXPECT_NO_THROW(lrt_best_response(g, {-1.0, 1.0}));
  EXPECT_THROW(lrt_best_response(g, {-1.5, 1.0}), Error);
}

// The likelihood ratio response is at least as good as every threshold in a
// dense grid (both directions) and both constant rules.
TEST(LrtBestResponseTest, BeatsGridAlternatives) {
  ConfigSampler rng(13);
  for (int i = 0; i < 100; ++i) {
    const AgentSpec a = rng.agent();
    const SignalPair s{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double sigma = rng.uniform(0.2, 2.0);
    const double best = agent_risk(a, s, lrt_best_response(a, s, sigma), sigma);
    const double lo = std::min(s.s0, s.s1) - 6 * sigma;
    const double hi = std::max(s.s0, s.s1) + 6 * sigma;
    for (int k = 0; k <= 400; ++k) {
      const double t = lo + (hi - lo) * k / 400;
      EXPECT_LE(best, agent_risk(a, s, DecisionRule::above(t), sigma) + 1e-12);
      EXPECT_LE(best, agent_risk(a, s, DecisionRule::below(t), sigma) + 1e-12);
    }
    EXPECT_LE(best, agent_risk(a, s, DecisionRule::always0(), sigma) + 1e-12);
    EXPECT_LE(best, agent_risk(a, s, DecisionRule::always1(), sigma) + 1e-12);
  }
}

TEST(DecideProbabilityTest, TailAccurateComplement) {
  const DecisionRule r = DecisionRule::above(0.0);
  EXPECT_GT(decide_h0_probability(r, 12.0, 1.0), 0.0);
  EXPECT_NEAR(decide_h0_probability(r, 12.0, 1.0) / q_function(12.0), 1.0, 1e-14);
  EXPECT_EQ(decide_h1_probability(DecisionRule::always1(), 5.0, 1.0), 1.0);
}

}  // namespace
}  // namespace bsig
