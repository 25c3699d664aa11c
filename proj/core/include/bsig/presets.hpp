#ifndef BSIG_PRESETS_HPP_
#define BSIG_PRESETS_HPP_

#include <string>
#include <vector>

#include "bsig/types.hpp"

namespace bsig {

/// The transmitter's costs are aligned with the receiver's 0-1 costs with
/// probability alpha and flipped otherwise.
struct BiasedCostScenario {
  double pi0 = 0.5;
  double alpha = 1.0;
  double p0 = 1.0;
  double p1 = 1.0;
  double sigma = 1.0;

  void validate() const;
};

/// Transmitter costs c01 = c10 = alpha, c00 = c11 = 1 - alpha; receiver
/// costs c01 = c10 = 1, c00 = c11 = 0; both agents share the prior.
GameConfig biased_cost_config(const BiasedCostScenario& sc);

/// Shared costs with the transmitter holding prior pi0_t and the receiver
/// pi0_r.  Throws Error when one prior is degenerate and the other is not.
GameConfig subjective_priors_config(double pi0_t, double pi0_r, const CostMatrix& costs,
                                    double p0 = 1.0, double p1 = 1.0, double sigma = 1.0);

/// Receiver costs (0, 0.4, 0.9, 0), transmitter costs (0.6, 0.4, 0.4, 0.6)
/// in (c00, c01, c10, c11) order, P0 = P1 = 1, sigma = 0.1, pi0 = 0.25 for
/// both agents.
GameConfig figure1_config();

/// figure1_config with the receiver's spec copied to the transmitter.
GameConfig figure1_team_config();

/// Names accepted by preset_config.
std::vector<std::string> preset_names();

/// Scenario parameters used by the parameterized presets.
struct PresetOptions {
  double alpha = 0.3;
  double pi0_t = 0.3;
  double pi0_r = 0.6;
};

/// Looks up a preset by name ("figure1", "figure1-team", "biased-cost",
/// "subjective-priors").  Throws Error for an unknown name.
GameConfig preset_config(const std::string& name, const PresetOptions& options = {});

}  // namespace bsig

#endif  // BSIG_PRESETS_HPP_
