#include "bsig/report.hpp"

#include <cmath>

#include "bsig/detection.hpp"
#include "bsig/nash.hpp"
#include "bsig/stackelberg.hpp"
#include "bsig/team.hpp"

namespace bsig {

namespace {

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

std::optional<double> finite_or_empty(double x) {
  if (std::isfinite(x)) return x;
  return std::nullopt;
}

void fill_profile(EquilibriumReport& r, const GameConfig& config, const SignalPair& s,
                  const DecisionRule& rule) {
  r.signals = s;
  r.rule = rule;
  const ErrorProbabilities e = error_probabilities(s, rule, config.sigma);
  r.errors = e;
  r.transmitter_risk = bayes_risk(config.transmitter, e);
  r.receiver_risk = bayes_risk(config.receiver, e);
}

EquilibriumReport base_report(SolutionMode mode, const GameConfig& config) {
  config.validate();
  EquilibriumReport r;
  r.mode = mode;
  r.tau = tau_of(config.receiver);
  r.zeta = sign_of(config.receiver.costs.h1_excess());
  r.d_max = config.d_max();
  return r;
}

}  // namespace

std::string to_string(SolutionMode mode) {
  switch (mode) {
    case SolutionMode::kTeam:
      return "team";
    case SolutionMode::kStackelberg:
      return "stackelberg";
    case SolutionMode::kNash:
      return "nash";
  }
  return "?";
}

SolutionMode solution_mode_from_string(const std::string& name) {
  if (name == "team") return SolutionMode::kTeam;
  if (name == "stackelberg") return SolutionMode::kStackelberg;
  if (name == "nash") return SolutionMode::kNash;
  throw Error("unknown mode '" + name + "' (expected team, stackelberg or nash)");
}

EquilibriumReport team_report(const GameConfig& config) {
  EquilibriumReport r = base_report(SolutionMode::kTeam, config);
  const TeamSolution sol = solve_team(config);
  r.informative = sol.informative;
  r.tag = sol.informative ? "informative" : "non-informative";
  r.d_star = sol.informative ? r.d_max : 0.0;
  fill_profile(r, config, sol.signals, sol.rule);
  return r;
}

EquilibriumReport stackelberg_report(const GameConfig& config) {
  EquilibriumReport r = base_report(SolutionMode::kStackelberg, config);
  const StackelbergSolution sol = solve_stackelberg(config);
  r.informative = sol.informative;
  r.tag = sol.informative ? "informative" : "non-informative";
  r.cell = to_string(sol.cell);
  r.k0 = finite_or_empty(sol.params.k0);
  r.k1 = finite_or_empty(sol.params.k1);
  r.d_star = sol.d_star;
  fill_profile(r, config, sol.signals, sol.rule);
  return r;
}

EquilibriumReport nash_report(const GameConfig& config, const GridSpec& grid) {
  EquilibriumReport r = base_report(SolutionMode::kNash, config);
  const NashClassification cls = classify_nash(config);
  r.tag = to_string(cls.tag);
  r.xi0 = finite_or_empty(cls.xi0);
  r.xi1 = finite_or_empty(cls.xi1);
  if (const auto profile = construct_nash(config, grid)) {
    fill_profile(r, config, profile->signals, profile->rule);
    r.d_star = std::abs(profile->signals.s1 - profile->signals.s0) / config.sigma;
    r.informative = profile->rule.is_threshold();
  }
  return r;
}

EquilibriumReport solve_report(SolutionMode mode, const GameConfig& config,
                               const GridSpec& grid) {
  switch (mode) {
    case SolutionMode::kTeam:
      return team_report(config);
    case SolutionMode::kStackelberg:
      return stackelberg_report(config);
    case SolutionMode::kNash:
      return nash_report(config, grid);
  }
  throw Error("unknown mode");
}

}  // namespace bsig
