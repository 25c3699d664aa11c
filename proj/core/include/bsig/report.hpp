#ifndef BSIG_REPORT_HPP_
#define BSIG_REPORT_HPP_

#include <optional>
#include <string>

#include "bsig/oracle.hpp"
#include "bsig/types.hpp"

namespace bsig {

enum class SolutionMode { kTeam, kStackelberg, kNash };

std::string to_string(SolutionMode mode);
SolutionMode solution_mode_from_string(const std::string& name);

/// Outcome of one solution concept on one config.  Quantities that do not
/// apply to the mode are left empty, and the profile fields are empty when no
/// equilibrium exists.
struct EquilibriumReport {
  SolutionMode mode = SolutionMode::kTeam;
  std::string tag;
  bool informative = false;
  double tau = 0.0;
  int zeta = 0;
  double d_max = 0.0;
  std::optional<double> k0;
  std::optional<double> k1;
  std::optional<double> xi0;
  std::optional<double> xi1;
  std::optional<double> d_star;
  std::string cell;

  std::optional<SignalPair> signals;
  std::optional<DecisionRule> rule;
  std::optional<double> transmitter_risk;
  std::optional<double> receiver_risk;
  std::optional<ErrorProbabilities> errors;
};

EquilibriumReport team_report(const GameConfig& config);
EquilibriumReport stackelberg_report(const GameConfig& config);
/// `grid` is used to certify the constructed profile.
EquilibriumReport nash_report(const GameConfig& config, const GridSpec& grid = {});

EquilibriumReport solve_report(SolutionMode mode, const GameConfig& config,
                               const GridSpec& grid = {});

}  // namespace bsig

#endif  // BSIG_REPORT_HPP_
