#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "bsig/detection.hpp"
#include "bsig/nash.hpp"
#include "bsig/oracle.hpp"
#include "bsig/presets.hpp"
#include "bsig/team.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace bsig {
namespace {

using testing::ConfigSampler;

TEST(XiParamsTest, Values) {
  const XiParams same = xi_params(figure1_team_config());
  EXPECT_EQ(same.xi0, 1.0);
  EXPECT_EQ(same.xi1, 1.0);
  for (double alpha : {0.0, 0.3, 0.5, 0.9}) {
    const XiParams xi = xi_params(biased_cost_config({0.5, alpha, 1, 1, 1}));
    EXPECT_NEAR(xi.xi0, 2 * alpha - 1, 1e-15);
    EXPECT_NEAR(xi.xi1, 2 * alpha - 1, 1e-15);
  }
  GameConfig g;
  g.receiver.costs = {0.3, 1.0, 0.3, 0.0};
  EXPECT_TRUE(std::isnan(xi_params(g).xi0));
}

TEST(ClassifyNashTest, TableCells) {
  for (bool negative_zeta : {false, true}) {
    for (const auto& c : testing::nash_corpus(negative_zeta)) {
      EXPECT_EQ(to_string(classify_nash(c.config).tag), to_string(c.tag))
          << c.name << " negative_zeta=" << negative_zeta;
    }
  }
}

TEST(ClassifyNashTest, ChannelIgnoredIsNonInformative) {
  GameConfig g;
  g.receiver.costs = {0.0, 0.5, 0.0, 0.2};  // tau = 0
  g.transmitter.costs = {0.5, 0.0, 0.0, 0.5};  // xi0 < 0, xi1 < 0 would be no equilibrium
  EXPECT_EQ(classify_nash(g).tag, NashTag::kNonInformative);
  g.receiver.costs = {0.0, 0.0, 0.5, 0.0};  // tau = inf
  EXPECT_EQ(classify_nash(g).tag, NashTag::kNonInformative);
}

TEST(ClassifyNashTest, BiasedCostMap) {
  EXPECT_EQ(classify_nash(biased_cost_config({0.5, 0.3, 1, 1, 1})).tag, NashTag::kNoEquilibrium);
  EXPECT_EQ(classify_nash(biased_cost_config({0.5, 0.5, 1, 1, 1})).tag, NashTag::kNonInformative);
  EXPECT_EQ(classify_nash(biased_cost_config({0.5, 0.7, 1, 1, 1})).tag,
            NashTag::kUniqueInformative);
}

TEST(ClassifyNashTest, PriorsDoNotMatter) {
  ConfigSampler rng(41);
  for (int i = 0; i < 300; ++i) {
    GameConfig g = rng.game();
    const NashTag tag = classify_nash(g).tag;
    if (!channel_informative(tau_of(g.receiver))) continue;
    g.transmitter.priors = rng.priors();
    EXPECT_EQ(classify_nash(g).tag, tag);
  }
}

TEST(TransmitterBestResponseTest, TeamSeparates) {
  const GameConfig g = figure1_team_config();
  EXPECT_EQ(transmitter_best_response(g, DecisionRule::above(0.0)), (SignalPair{-1.0, 1.0}));
  EXPECT_EQ(transmitter_best_response(g, DecisionRule::below(0.3)), (SignalPair{1.0, -1.0}));
  EXPECT_EQ(transmitter_best_response(g, DecisionRule::always0()), (SignalPair{0.0, 0.0}));
}

TEST(TransmitterBestResponseTest, DeceptiveTransmitterCrossesSignals) {
  const GameConfig g = biased_cost_config({0.5, 0.2, 1.0, 1.0, 1.0});
  EXPECT_EQ(transmitter_best_response(g, DecisionRule::above(0.0)), (SignalPair{1.0, -1.0}));
}

// Per-coordinate 201-point grid check of the analytic response.
TEST(TransmitterBestResponseTest, MatchesCoordinateGrid) {
  ConfigSampler rng(42);
  for (int i = 0; i < 100; ++i) {
    const GameConfig g = rng.game();
    const DecisionRule rule = rng.coin() ? DecisionRule::above(rng.uniform(-1, 1))
                                         : DecisionRule::below(rng.uniform(-1, 1));
    const SignalPair br = transmitter_best_response(g, rule);
    const double best = agent_risk(g.transmitter, br, rule, g.sigma);
    for (double s0 : signal_axis(g.p0, 201)) {
      EXPECT_LE(best, agent_risk(g.transmitter, {s0, br.s1}, rule, g.sigma) + 1e-12);
    }
    for (double s1 : signal_axis(g.p1, 201)) {
      EXPECT_LE(best, agent_risk(g.transmitter, {br.s0, s1}, rule, g.sigma) + 1e-12);
    }
  }
}

TEST(ConstructNashTest, TeamIsMaxSeparationWithLrt) {
  const GameConfig g = figure1_team_config();
  const auto profile = construct_nash(g);
  ASSERT_TRUE(profile.has_value());
  EXPECT_EQ(profile->signals, (SignalPair{-1.0, 1.0}));
  EXPECT_EQ(profile->rule, lrt_best_response(g.receiver, profile->signals, g.sigma));
}

TEST(ConstructNashTest, BiasedCostOutcomes) {
  EXPECT_FALSE(construct_nash(biased_cost_config({0.5, 0.3, 1, 1, 1})).has_value());
  const GameConfig half = biased_cost_config({0.5, 0.5, 1, 1, 1});
  const auto babble = construct_nash(half);
  ASSERT_TRUE(babble.has_value());
  EXPECT_EQ(babble->signals, (SignalPair{0.0, 0.0}));
  EXPECT_TRUE(babble->rule.is_constant());
  for (double s0 : {-1.0, 0.0, 0.4}) {
    EXPECT_DOUBLE_EQ(agent_risk(half.transmitter, {s0, 1.0}, babble->rule, half.sigma), 0.5);
  }
}

TEST(ConstructNashTest, CorpusProfilesAreCertified) {
  for (bool negative_zeta : {false, true}) {
    for (const auto& c : testing::nash_corpus(negative_zeta)) {
      SCOPED_TRACE(c.name);
      const auto profile = construct_nash(c.config);
      ASSERT_EQ(profile.has_value(), c.tag != NashTag::kNoEquilibrium);
      if (!profile) continue;
      EXPECT_EQ(profile->rule.is_threshold(), c.tag == NashTag::kUniqueInformative);
      EXPECT_TRUE(verify_nash(c.config, profile->signals, profile->rule, GridSpec{}));
    }
  }
}

TEST(ConstructNashTest, MixedCellsUseUnequalPowers) {
  // Mixed-sign cells push both signals toward the same end of their ranges.
  for (const auto& c : testing::nash_corpus()) {
    if (c.tag != NashTag::kUniqueInformative || c.config.p0 == c.config.p1) continue;
    const auto profile = construct_nash(c.config);
    ASSERT_TRUE(profile.has_value());
    EXPECT_NEAR(std::abs(profile->signals.s1 - profile->signals.s0),
                std::abs(std::sqrt(c.config.p1) - std::sqrt(c.config.p0)), 1e-15)
        << c.name;
  }
}

TEST(DynamicsTest, TeamConvergesQuickly) {
  ConfigSampler rng(43);
  for (int i = 0; i < 50; ++i) {
    const GameConfig g = rng.informative_team();
    const auto expected = construct_nash(g, GridSpec{41, 61, 6.0, 1e-6});
    ASSERT_TRUE(expected.has_value());
    for (const DecisionRule init : {DecisionRule::above(rng.uniform(-1, 1)),
                                    DecisionRule::below(rng.uniform(-1, 1))}) {
      const BrTrajectory t = best_response_dynamics(g, init, 10);
      ASSERT_EQ(t.outcome, BrOutcome::kConverged);
      EXPECT_LE(t.steps.size(), 3u);
      // Either the constructed profile or its mirror image.
      const BrStep& last = t.steps.back();
      const double flip = last.rule.kind == expected->rule.kind ? 1.0 : -1.0;
      EXPECT_EQ(last.rule.kind, init.kind);
      EXPECT_NEAR(last.rule.threshold, flip * expected->rule.threshold, 1e-12);
      EXPECT_EQ(last.signals.s0, flip * expected->signals.s0);
      EXPECT_EQ(last.signals.s1, flip * expected->signals.s1);
    }
  }
}

TEST(DynamicsTest, BiasedCostCycles) {
  for (double alpha : {0.0, 0.3, 0.45}) {
    const BrTrajectory t =
        best_response_dynamics(biased_cost_config({0.5, alpha, 1, 1, 1}),
                               DecisionRule::above(0.2), 50);
    EXPECT_EQ(t.outcome, BrOutcome::kCycleDetected) << alpha;
  }
}

TEST(DynamicsTest, IndifferentTransmitterConverges) {
  const BrTrajectory t =
      best_response_dynamics(biased_cost_config({0.5, 0.5, 1, 1, 1}), DecisionRule::above(0.0), 10);
  EXPECT_EQ(t.outcome, BrOutcome::kConverged);
  EXPECT_EQ(t.steps.back().signals, (SignalPair{0.0, 0.0}));
}

TEST(DynamicsTest, SingleIterationCap) {
  const GameConfig g = figure1_team_config();
  EXPECT_EQ(best_response_dynamics(g, DecisionRule::below(3.0), 1).outcome,
            BrOutcome::kMaxItersReached);
  const DecisionRule fixed = construct_nash(g)->rule;
  EXPECT_EQ(best_response_dynamics(g, fixed, 1).outcome, BrOutcome::kConverged);
  EXPECT_THROW(best_response_dynamics(g, fixed, 0), Error);
}

TEST(DynamicsTest, StepsAlternateBestResponses) {
  const GameConfig g = biased_cost_config({0.5, 0.2, 1, 1, 1});
  const BrTrajectory t = best_response_dynamics(g, DecisionRule::above(0.0), 20);
  DecisionRule previous = DecisionRule::above(0.0);
  for (const BrStep& st : t.steps) {
    EXPECT_EQ(st.signals, transmitter_best_response(g, previous));
    EXPECT_EQ(st.rule, lrt_best_response(g.receiver, st.signals, g.sigma));
    previous = st.rule;
  }
}

// Random configs: the classification predicts what the dynamics and the
// exhaustive grid search find.
TEST(NashConsistencyTest, ClassificationMatchesDynamicsAndGrid) {
  ConfigSampler rng(44);
  const GridSpec certify{41, 61, 6.0, 1e-6};
  const GridSpec exhaustive{21, 41, 6.0, 1e-6};
  int unique = 0;
  int none = 0;
  int searched = 0;
  for (int i = 0; i < 200; ++i) {
    const GameConfig g = rng.game();
    const NashTag tag = classify_nash(g).tag;
    const DecisionRule init = rng.coin() ? DecisionRule::above(rng.uniform(-1, 1))
                                         : DecisionRule::below(rng.uniform(-1, 1));
    const BrTrajectory t = best_response_dynamics(g, init, 40);
    if (tag == NashTag::kUniqueInformative) {
      ++unique;
      ASSERT_EQ(t.outcome, BrOutcome::kConverged) << i;
      EXPECT_TRUE(verify_nash(g, t.steps.back().signals, t.steps.back().rule, certify)) << i;
    } else if (tag == NashTag::kNoEquilibrium) {
      ++none;
      EXPECT_NE(t.outcome, BrOutcome::kConverged) << i;
      // Only configs whose receiver thresholds stay near the signals.
      const CostMatrix& rc = g.receiver.costs;
      const double gap = std::abs(std::sqrt(g.p1) - std::sqrt(g.p0)) / g.sigma;
      const bool resolvable = std::abs(std::log(tau_of(g.receiver))) <= 1.5 && gap >= 0.5 &&
                              std::min(std::abs(rc.h0_excess()), std::abs(rc.h1_excess())) >= 0.05;
      if (resolvable) {
        ++searched;
        EXPECT_EQ(exhaustive_nash_search(g, exhaustive).passing, 0u) << i;
      }
    }
  }
  EXPECT_GT(unique, 10);
  EXPECT_GT(none, 10);
  EXPECT_GE(searched, 5);
}

}  // namespace
}  // namespace bsig
