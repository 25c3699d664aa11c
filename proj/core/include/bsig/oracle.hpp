#ifndef BSIG_ORACLE_HPP_
#define BSIG_ORACLE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "bsig/types.hpp"

namespace bsig {

/// Brute-force search resolution.  Receiver responses scan `threshold_points`
/// thresholds per direction over [min(s) - span*sigma, max(s) + span*sigma]
/// and then refine the best grid cell by golden-section search.
struct GridSpec {
  int signal_points = 201;
  int threshold_points = 201;
  double threshold_span = 6.0;
  double tolerance = 1e-6;

  void validate() const;
};

/// `n` evenly spaced levels on [-sqrt(power), +sqrt(power)] with exact
/// endpoints; a single 0 when power is zero.
std::vector<double> signal_axis(double power, int n);

/// Receiver's best rule among both constant rules and every grid threshold
/// in both directions.  Ties keep the earlier candidate in the order
/// Always0, Always1, thresholds above (ascending), thresholds below.
DecisionRule grid_receiver_best_response(const SignalPair& s, const GameConfig& config,
                                         const GridSpec& grid);

/// Transmitter's best signal pair on the signal grid for a fixed rule.
/// Ties keep the lexicographically first pair (s0, then s1 ascending).
SignalPair grid_transmitter_best_response(const DecisionRule& rule, const GameConfig& config,
                                          const GridSpec& grid);

/// Breakdown of a simultaneous-move equilibrium check.
///
/// receiver_ok / transmitter_ok: no grid deviation lowers the owner's risk
/// by more than the tolerance.  For threshold rules transmitter_ok also
/// requires that no grid level strictly lowers either conditional risk
/// (compared tail-accurately, so far-away thresholds still register).
///
/// unmanipulable: when the receiver ignores the observation while a
/// separated signal pair would make it respond, the transmitter must not
/// strictly prefer separating signals against threshold rules of both
/// orientations.  Otherwise the forced prior-only decision is exploitable
/// and the babbling profile is not an equilibrium.
struct NashVerdict {
  bool receiver_ok = false;
  bool transmitter_ok = false;
  bool unmanipulable = true;

  bool passed() const { return receiver_ok && transmitter_ok && unmanipulable; }
};

NashVerdict check_nash(const GameConfig& config, const SignalPair& s,
                       const DecisionRule& rule, const GridSpec& grid);

bool verify_nash(const GameConfig& config, const SignalPair& s, const DecisionRule& rule,
                 const GridSpec& grid);

/// True iff the receiver-ignoring profiles of this config are exploitable
/// (see NashVerdict::unmanipulable).
bool babbling_manipulable(const GameConfig& config, const GridSpec& grid);

/// Leader's risk when committing to `s` and the follower answers with
/// grid_receiver_best_response.
double committed_transmitter_risk(const GameConfig& config, const SignalPair& s,
                                  const GridSpec& grid);

struct StackelbergGridOptimum {
  SignalPair signals;
  double transmitter_risk = 0.0;
};

/// Minimum of committed_transmitter_risk over the signal grid.
StackelbergGridOptimum stackelberg_grid_optimum(const GameConfig& config,
                                                const GridSpec& grid);

/// r_t(s, BR(s)) <= r_t(s', BR(s')) + tolerance for every grid s'.
bool verify_stackelberg(const GameConfig& config, const SignalPair& s, const GridSpec& grid);

struct NashProfileCandidate {
  SignalPair signals;
  DecisionRule rule;
};

struct NashSearchResult {
  std::size_t profiles_checked = 0;
  std::size_t passing = 0;
  std::vector<NashProfileCandidate> examples;  // first few passing profiles
};

/// Applies the check_nash predicate to every profile of a finite grid:
/// grid.signal_points levels per signal, grid.threshold_points thresholds in
/// each direction over the whole signal box widened by threshold_span * sigma,
/// plus both constant rules.  Deviations are searched on the same grid.
/// Grid-resolution evidence, not a proof.
NashSearchResult exhaustive_nash_search(const GameConfig& config, const GridSpec& grid);

}  // namespace bsig

#endif  // BSIG_ORACLE_HPP_
