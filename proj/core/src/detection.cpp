#include "bsig/detection.hpp"

#include <cmath>
#include <numbers>

#include "bsig/team.hpp"

namespace bsig {

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double decide_h1_probability(const DecisionRule& rule, double s, double sigma) {
  switch (rule.kind) {
    case DecisionRule::Kind::kThresholdAbove:
      return q_function((rule.threshold - s) / sigma);
    case DecisionRule::Kind::kThresholdBelow:
      return q_function((s - rule.threshold) / sigma);
    case DecisionRule::Kind::kAlways0:
      return 0.0;
    case DecisionRule::Kind::kAlways1:
      return 1.0;
  }
  return 0.0;
}

double decide_h0_probability(const DecisionRule& rule, double s, double sigma) {
  switch (rule.kind) {
    case DecisionRule::Kind::kThresholdAbove:
      return q_function((s - rule.threshold) / sigma);
    case DecisionRule::Kind::kThresholdBelow:
      return q_function((rule.threshold - s) / sigma);
    case DecisionRule::Kind::kAlways0:
      return 1.0;
    case DecisionRule::Kind::kAlways1:
      return 0.0;
  }
  return 1.0;
}

ErrorProbabilities error_probabilities(const SignalPair& s, const DecisionRule& rule,
                                       double sigma) {
  if (!std::isfinite(s.s0) || !std::isfinite(s.s1)) {
    throw Error("error_probabilities: signal levels must be finite");
  }
  if (!(sigma > 0.0)) throw Error("error_probabilities: sigma must be > 0");
  if (rule.is_threshold() && !std::isfinite(rule.threshold)) {
    throw Error("error_probabilities: threshold must be finite");
  }
  ErrorProbabilities e;
  e.p10 = decide_h1_probability(rule, s.s0, sigma);
  e.p11 = decide_h1_probability(rule, s.s1, sigma);
  e.p00 = 1.0 - e.p10;
  e.p01 = 1.0 - e.p11;
  return e;
}

double bayes_risk(const AgentSpec& agent, const ErrorProbabilities& e) {
  const auto& pr = agent.priors;
  const auto& c = agent.costs;
  return pr.pi0 * (c.c00 * e.p00 + c.c10 * e.p10) +
         pr.pi1 * (c.c01 * e.p01 + c.c11 * e.p11);
}

double agent_risk(const AgentSpec& agent, const SignalPair& s, const DecisionRule& rule,
                  double sigma) {
  return bayes_risk(agent, error_probabilities(s, rule, sigma));
}

DecisionRule prior_only_decision(const AgentSpec& receiver) {
  const RiskWeights w = risk_weights(receiver);
  return w.w1 > w.w0 ? DecisionRule::always1() : DecisionRule::always0();
}

DecisionRule lrt_best_response(const AgentSpec& receiver, const SignalPair& s,
                               double sigma) {
  if (!std::isfinite(s.s0) || !std::isfinite(s.s1)) {
    throw Error("lrt_best_response: signal levels must be finite");
  }
  if (!(sigma > 0.0)) throw Error("lrt_best_response: sigma must be > 0");

  const double tau = tau_of(receiver);
  if (s.s0 == s.s1 || !channel_informative(tau)) return prior_only_decision(receiver);

  // Decide H1 iff w1 p1(y) >= w0 p0(y).  With ln(p1/p0) = (s1-s0)(y-m)/sigma^2
  // this is a threshold on y; a negative w1 flips the comparison.
  const double gap = s.s1 - s.s0;
  const double t = 0.5 * (s.s0 + s.s1) + sigma * sigma * std::log(tau) / gap;
  if (!std::isfinite(t)) return prior_only_decision(receiver);

  const bool h1_weight_positive = risk_weights(receiver).w1 > 0.0;
  const bool above = (gap > 0.0) == h1_weight_positive;
  return above ? DecisionRule::above(t) : DecisionRule::below(t);
}

DecisionRule lrt_best_response(const GameConfig& config, const SignalPair& s) {
  if (!within_power(s, config.p0, config.p1)) {
    throw Error("lrt_best_response: signals violate the power constraints");
  }
  return lrt_best_response(config.receiver, s, config.sigma);
}

}  // namespace bsig
