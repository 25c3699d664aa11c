#ifndef BSIG_STACKELBERG_HPP_
#define BSIG_STACKELBERG_HPP_

#include <string>

#include "bsig/types.hpp"

namespace bsig {

/// Quantities that drive the leader-follower analysis.  k0, k1 and ln_tau
/// are NaN unless 0 < tau < inf.  When k0 and k1 agree (or cancel) to within
/// 32 ulps of their magnitude, k1 is set to exactly k0 (or -k0).
struct StackelbergParams {
  double tau = 0.0;
  int zeta = 0;  // sgn(receiver c01 - c11)
  double k0 = 0.0;
  double k1 = 0.0;
  double d_max = 0.0;
  double ln_tau = 0.0;

  bool defined() const;
};

/// Which branch of the optimal-distance case analysis produced d*.
///
///   k0+k1 <  0, ln(tau)(k0-k1) <  0: kInterior / kInteriorClamped
///   k0+k1 <  0, ln(tau)(k0-k1) >= 0: kZeroSeparation
///   k0+k1 >= 0, ln(tau)(k0-k1) <  0: kMaxSeparation
///   k0+k1 >= 0, ln(tau)(k0-k1) >= 0: kBoundExceeded, kDiscriminantPositive,
///                                   kDiscriminantNonPositive or kFlat
///
/// kChannelIgnored marks tau outside (0, inf), where the receiver never
/// looks at the observation.
enum class StackelbergCell {
  kInterior,
  kInteriorClamped,
  kZeroSeparation,
  kMaxSeparation,
  kBoundExceeded,
  kDiscriminantPositive,
  kDiscriminantNonPositive,
  kFlat,
  kChannelIgnored,
};

std::string to_string(StackelbergCell cell);
/// Quadrant letter a-d (or "-" for kChannelIgnored).
char quadrant_of(StackelbergCell cell);

struct OptimalDistance {
  double d_star = 0.0;
  StackelbergCell cell = StackelbergCell::kChannelIgnored;
};

struct StackelbergSolution {
  StackelbergParams params;
  double d_star = 0.0;
  bool informative = false;
  SignalPair signals;
  DecisionRule rule;
  double transmitter_risk = 0.0;
  double receiver_risk = 0.0;
  StackelbergCell cell = StackelbergCell::kChannelIgnored;
};

StackelbergParams derived_params(const GameConfig& config);

/// |2 ln(tau) (k0 - k1) / (k0 + k1)|, the squared location of the interior
/// stationary point of the transmitter's risk curve.  +inf when only the
/// denominator vanishes, NaN for 0/0.
double stationary_bound(const StackelbergParams& p);

/// (k1 / (k0 tau))^sgn(ln tau) Q(|ln tau|/d_max - d_max/2)
///   - Q(|ln tau|/d_max + d_max/2).
/// Positive when the transmitter prefers maximum separation to babbling.
double separation_discriminant(const StackelbergParams& p);

/// Likelihood-ratio error probabilities (P10, P01) at normalized distance
/// d > 0, for receiver sign zeta and ln(tau).  Other fields are completed so
/// rows sum to one.
ErrorProbabilities lrt_errors_at_distance(int zeta, double ln_tau, double d);

/// Transmitter / receiver Bayes risk when |s1 - s0| / sigma = d and the
/// receiver best-responds.  At d = 0 the receiver uses the priors only.
/// Requires 0 < tau < inf and 0 <= d <= d_max.
double transmitter_risk_of_distance(double d, const GameConfig& config);
double receiver_risk_of_distance(double d, const GameConfig& config);

/// Closed-form optimal normalized distance.  Requires 0 < tau < inf.
OptimalDistance optimal_distance(const GameConfig& config);

/// Canonical signals s0 = -a, s1 = +b with a/sqrt(P0) = b/sqrt(P1) realizing
/// normalized distance d.
SignalPair signals_at_distance(const GameConfig& config, double d);

StackelbergSolution solve_stackelberg(const GameConfig& config);

/// Case analysis for agents that share costs but hold different priors.
enum class PriorRatioQuadrant {
  kLowerRatioLowTau,    // pi0t/pi1t <  pi0r/pi1r, 0 < tau < 1
  kLowerRatioHighTau,   // pi0t/pi1t <  pi0r/pi1r, tau >= 1
  kHigherRatioLowTau,   // pi0t/pi1t >= pi0r/pi1r, 0 < tau < 1
  kHigherRatioHighTau,  // pi0t/pi1t >= pi0r/pi1r, tau >= 1
  kChannelIgnored,
};

std::string to_string(PriorRatioQuadrant q);

struct SubjectivePriorsOutcome {
  PriorRatioQuadrant quadrant = PriorRatioQuadrant::kChannelIgnored;
  double d_star = 0.0;
  bool informative = false;
  StackelbergCell cell = StackelbergCell::kChannelIgnored;
};

/// Throws Error when the two cost matrices differ.
SubjectivePriorsOutcome classify_subjective_priors(const GameConfig& config);

}  // namespace bsig

#endif  // BSIG_STACKELBERG_HPP_
