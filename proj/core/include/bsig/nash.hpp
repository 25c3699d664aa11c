#ifndef BSIG_NASH_HPP_
#define BSIG_NASH_HPP_

#include <optional>
#include <string>
#include <vector>

#include "bsig/oracle.hpp"
#include "bsig/types.hpp"

namespace bsig {

enum class NashTag { kUniqueInformative, kNonInformative, kNoEquilibrium };

std::string to_string(NashTag tag);

/// Ratios of transmitter to receiver cost differences,
/// xi0 = (c10t - c00t) / (c10r - c00r) and xi1 = (c01t - c11t) / (c01r - c11r).
/// A ratio with a zero receiver denominator is NaN.
struct XiParams {
  double xi0 = 0.0;
  double xi1 = 0.0;
};

XiParams xi_params(const GameConfig& config);

struct NashClassification {
  NashTag tag = NashTag::kNonInformative;
  double xi0 = 0.0;
  double xi1 = 0.0;
};

/// Non-informative whenever tau lies outside (0, inf).  Otherwise the sign
/// pattern of (xi0, xi1) decides, and the mixed-sign patterns additionally
/// depend on how P0 compares with P1 (exact comparison of the inputs):
///
///                xi0 > 0            xi0 = 0     xi0 < 0
///   xi1 > 0      unique             non-inf.    P0>P1 none, = non-inf., < unique
///   xi1 = 0      non-inf.           non-inf.    non-inf.
///   xi1 < 0      P0>P1 unique,      non-inf.    none
///                = non-inf., < none
NashClassification classify_nash(const GameConfig& config);

/// Transmitter's exact best response to a fixed rule.  Against a threshold
/// rule each signal goes to the end of its power range that its own cost
/// difference favours (0 when that difference or the prior is zero).
/// Constant rules leave the risk flat and give (0, 0).
SignalPair transmitter_best_response(const GameConfig& config, const DecisionRule& rule);

struct NashProfile {
  SignalPair signals;
  DecisionRule rule;
};

/// Equilibrium profile for the classified structure, or nullopt when no
/// equilibrium exists.  Informative profiles are the transmitter best
/// response to a threshold orientation that the receiver's likelihood ratio
/// test reproduces; non-informative profiles are (0, 0) with the prior-only
/// rule.  Every returned profile is checked with verify_nash on `grid`, and a
/// failed check throws Error.
std::optional<NashProfile> construct_nash(const GameConfig& config, const GridSpec& grid = {});

enum class BrOutcome { kConverged, kCycleDetected, kMaxItersReached };

std::string to_string(BrOutcome outcome);

struct BrStep {
  int iteration = 0;
  SignalPair signals;
  DecisionRule rule;
  double transmitter_risk = 0.0;
  double receiver_risk = 0.0;
};

struct BrTrajectory {
  std::vector<BrStep> steps;
  BrOutcome outcome = BrOutcome::kMaxItersReached;
};

/// Alternating best responses starting from the receiver rule `init`.  Each
/// iteration moves the transmitter against the current rule and then lets the
/// receiver answer with its likelihood ratio test.  Converged when the new
/// rule equals the previous one; CycleDetected when a profile (quantized to
/// 1e-9) reappears that is not the immediately preceding one.
BrTrajectory best_response_dynamics(const GameConfig& config, const DecisionRule& init,
                                    int max_iters);

}  // namespace bsig

#endif  // BSIG_NASH_HPP_
