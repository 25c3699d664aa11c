#ifndef BSIG_TEAM_HPP_
#define BSIG_TEAM_HPP_

#include <limits>

#include "bsig/types.hpp"

namespace bsig {

/// pi0 (c10 - c00) / (pi1 (c01 - c11)) for the given agent.
///
/// Returns +inf (or -inf) when only the denominator vanishes and NaN when
/// both do.  A zero numerator yields 0 regardless of the denominator's sign.
double tau_of(const AgentSpec& agent);

/// True iff 0 < tau < inf, i.e. the agent's optimal decision depends on the
/// observation.  NaN (0/0) counts as uninformative.
inline bool channel_informative(double tau) {
  return tau > 0.0 && tau < std::numeric_limits<double>::infinity();
}

struct TeamSolution {
  double tau = 0.0;
  bool informative = false;
  SignalPair signals;
  DecisionRule rule;
  double risk = 0.0;
};

/// Solves the identical-priors, identical-costs problem.  Informative
/// solutions use maximum separation s0 = -sqrt(P0), s1 = +sqrt(P1) with the
/// likelihood ratio response.  Throws Error if the two agents differ.
TeamSolution solve_team(const GameConfig& config);

}  // namespace bsig

#endif  // BSIG_TEAM_HPP_
