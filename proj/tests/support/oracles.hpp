#ifndef BSIG_TESTS_SUPPORT_ORACLES_HPP_
#define BSIG_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "bsig/types.hpp"

namespace bsig::testing {

/// Q(x) by composite Simpson integration of the standard normal density on
/// [0, min(|x|, 12)]; independent of erfc.  The mass beyond 12 is below 1e-32.
inline double simpson_q(double x, int intervals = 4000) {
  const double a = std::min(std::abs(x), 12.0);
  if (a == 0.0) return 0.5;
  const double h = a / intervals;
  auto phi = [](double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * std::numbers::pi); };
  double sum = phi(0.0) + phi(a);
  for (int i = 1; i < intervals; ++i) sum += (i % 2 ? 4.0 : 2.0) * phi(i * h);
  const double integral = sum * h / 3.0;
  return x >= 0.0 ? 0.5 - integral : 0.5 + integral;
}

/// Bayes risk written out from the definition: for each hypothesis, the
/// probability that the observation y = s_i + N(0, sigma^2) lands in the
/// decide-H1 region, with tails from simpson_q.
inline double reference_risk(const AgentSpec& agent, const SignalPair& s,
                             const DecisionRule& rule, double sigma) {
  auto decide_h1 = [&](double si) {
    switch (rule.kind) {
      case DecisionRule::Kind::kAlways0:
        return 0.0;
      case DecisionRule::Kind::kAlways1:
        return 1.0;
      case DecisionRule::Kind::kThresholdAbove:
        return simpson_q((rule.threshold - si) / sigma);
      case DecisionRule::Kind::kThresholdBelow:
        return 1.0 - simpson_q((rule.threshold - si) / sigma);
    }
    return 0.0;
  };
  const double h1_given_0 = decide_h1(s.s0);
  const double h1_given_1 = decide_h1(s.s1);
  const auto& c = agent.costs;
  return agent.priors.pi0 * (c.c00 * (1.0 - h1_given_0) + c.c10 * h1_given_0) +
         agent.priors.pi1 * (c.c01 * (1.0 - h1_given_1) + c.c11 * h1_given_1);
}

/// Seeded generator of random game parameters for property tests.
class ConfigSampler {
 public:
  explicit ConfigSampler(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  CostMatrix costs() {
    return {uniform(0.0, 1.0), uniform(0.0, 1.0), uniform(0.0, 1.0), uniform(0.0, 1.0)};
  }
  Priors priors() { return Priors::from_pi0(uniform(0.05, 0.95)); }
  AgentSpec agent() { return {priors(), costs()}; }

  /// Independent agents and channel; not necessarily informative.
  GameConfig game() {
    GameConfig g;
    g.transmitter = agent();
    g.receiver = agent();
    g.p0 = uniform(0.1, 2.0);
    g.p1 = uniform(0.1, 2.0);
    g.sigma = uniform(0.2, 2.0);
    return g;
  }

  /// Team config whose receiver has 0 < tau < inf (cost excesses share a sign).
  GameConfig informative_team() {
    GameConfig g = game();
    AgentSpec a = agent();
    const double sign = coin() ? 1.0 : -1.0;
    const double e0 = uniform(0.1, 1.0);
    const double e1 = uniform(0.1, 1.0);
    a.costs.c00 = uniform(0.0, 0.5);
    a.costs.c11 = uniform(0.0, 0.5);
    if (sign > 0) {
      a.costs.c10 = a.costs.c00 + e0;
      a.costs.c01 = a.costs.c11 + e1;
    } else {
      a.costs.c00 += e0;
      a.costs.c10 = a.costs.c00 - e0;
      a.costs.c11 += e1;
      a.costs.c01 = a.costs.c11 - e1;
    }
    g.transmitter = g.receiver = a;
    return g;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace bsig::testing

#endif  // BSIG_TESTS_SUPPORT_ORACLES_HPP_
