#include "bsig/presets.hpp"

#include <cmath>

namespace bsig {

void BiasedCostScenario::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0)) throw Error("biased-cost.alpha: must lie in [0, 1]");
  if (!(pi0 > 0.0 && pi0 < 1.0)) throw Error("biased-cost.pi0: must lie in (0, 1)");
}

GameConfig biased_cost_config(const BiasedCostScenario& sc) {
  sc.validate();
  GameConfig config;
  const Priors priors = Priors::from_pi0(sc.pi0);
  config.transmitter = {priors, {1.0 - sc.alpha, sc.alpha, sc.alpha, 1.0 - sc.alpha}};
  config.receiver = {priors, {0.0, 1.0, 1.0, 0.0}};
  config.p0 = sc.p0;
  config.p1 = sc.p1;
  config.sigma = sc.sigma;
  config.validate();
  return config;
}

GameConfig subjective_priors_config(double pi0_t, double pi0_r, const CostMatrix& costs,
                                    double p0, double p1, double sigma) {
  GameConfig config;
  config.transmitter = {Priors::from_pi0(pi0_t), costs};
  config.receiver = {Priors::from_pi0(pi0_r), costs};
  config.p0 = p0;
  config.p1 = p1;
  config.sigma = sigma;
  config.validate();
  return config;
}

GameConfig figure1_config() {
  GameConfig config;
  const Priors priors = Priors::from_pi0(0.25);
  config.transmitter = {priors, {0.6, 0.4, 0.4, 0.6}};
  config.receiver = {priors, {0.0, 0.4, 0.9, 0.0}};
  config.p0 = 1.0;
  config.p1 = 1.0;
  config.sigma = 0.1;
  return config;
}

GameConfig figure1_team_config() {
  GameConfig config = figure1_config();
  config.transmitter = config.receiver;
  return config;
}

std::vector<std::string> preset_names() {
  return {"figure1", "figure1-team", "biased-cost", "subjective-priors"};
}

GameConfig preset_config(const std::string& name, const PresetOptions& options) {
  if (name == "figure1") return figure1_config();
  if (name == "figure1-team") return figure1_team_config();
  if (name == "biased-cost") {
    BiasedCostScenario sc;
    sc.alpha = options.alpha;
    return biased_cost_config(sc);
  }
  if (name == "subjective-priors") {
    return subjective_priors_config(options.pi0_t, options.pi0_r, CostMatrix{});
  }
  std::string known;
  for (const std::string& n : preset_names()) known += (known.empty() ? "" : ", ") + n;
  throw Error("unknown preset '" + name + "' (known: " + known + ")");
}

}  // namespace bsig
