#include "bsig/team.hpp"

#include <cmath>
#include <limits>

#include "bsig/detection.hpp"

namespace bsig {

double tau_of(const AgentSpec& agent) {
  const RiskWeights w = risk_weights(agent);
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (w.w1 == 0.0) {
    if (w.w0 == 0.0) return std::numeric_limits<double>::quiet_NaN();
    return w.w0 > 0.0 ? kInf : -kInf;
  }
  if (w.w0 == 0.0) return 0.0;
  return w.w0 / w.w1;
}

TeamSolution solve_team(const GameConfig& config) {
  config.validate();
  if (!config.is_team()) {
    throw Error("solve_team: transmitter and receiver specs differ; the team "
                "problem requires identical priors and costs");
  }
  TeamSolution out;
  out.tau = tau_of(config.receiver);
  // With no signalling power the two hypotheses cannot be separated.
  out.informative = channel_informative(out.tau) && config.d_max() > 0.0;
  if (out.informative) {
    out.signals = {-std::sqrt(config.p0), std::sqrt(config.p1)};
    out.rule = lrt_best_response(config.receiver, out.signals, config.sigma);
  } else {
    out.signals = {0.0, 0.0};
    out.rule = prior_only_decision(config.receiver);
  }
  out.risk = agent_risk(config.receiver, out.signals, out.rule, config.sigma);
  return out;
}

}  // namespace bsig
