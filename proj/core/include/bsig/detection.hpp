#ifndef BSIG_DETECTION_HPP_
#define BSIG_DETECTION_HPP_

#include "bsig/types.hpp"

namespace bsig {

/// Gaussian tail probability Q(x) = P(Z > x) for standard normal Z.
/// Accepts +-infinity.
double q_function(double x);

/// P(decide H1 | transmitted signal s) under `rule`.  Both this and
/// decide_h0_probability are evaluated directly from the tail that is small,
/// so differences between them keep relative accuracy deep in the tails.
double decide_h1_probability(const DecisionRule& rule, double s, double sigma);
double decide_h0_probability(const DecisionRule& rule, double s, double sigma);

/// Conditional decision probabilities for a signal pair.  Rows sum to one
/// exactly (p00 = 1 - p10, p01 = 1 - p11).
ErrorProbabilities error_probabilities(const SignalPair& s, const DecisionRule& rule,
                                       double sigma);

/// pi0 (c00 P00 + c10 P10) + pi1 (c01 P01 + c11 P11) with the agent's own
/// priors and costs.
double bayes_risk(const AgentSpec& agent, const ErrorProbabilities& e);

/// Convenience: bayes_risk(agent, error_probabilities(s, rule, sigma)).
double agent_risk(const AgentSpec& agent, const SignalPair& s, const DecisionRule& rule,
                  double sigma);

/// Receiver decision that uses the priors only.  Always1 when
/// pi1 (c01 - c11) > pi0 (c10 - c00), Always0 otherwise (ties included).
DecisionRule prior_only_decision(const AgentSpec& receiver);

/// Bayes-optimal (likelihood ratio) receiver response to the signals.
/// Returns a threshold rule at (s0 + s1)/2 + sigma^2 ln(tau) / (s1 - s0)
/// when the hypotheses are distinguishable and 0 < tau < inf; otherwise
/// the prior-only rule.
DecisionRule lrt_best_response(const AgentSpec& receiver, const SignalPair& s,
                               double sigma);

/// Same as above but also rejects signals outside the power limits.
DecisionRule lrt_best_response(const GameConfig& config, const SignalPair& s);

}  // namespace bsig

#endif  // BSIG_DETECTION_HPP_
