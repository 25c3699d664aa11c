#ifndef BSIG_TYPES_HPP_
#define BSIG_TYPES_HPP_

#include <stdexcept>
#include <string>

namespace bsig {

/// Raised for invalid game parameters, violated preconditions, and
/// internal consistency failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Prior probabilities of H0 and H1 as held by one agent.
struct Priors {
  double pi0 = 0.5;
  double pi1 = 0.5;

  static Priors from_pi0(double pi0) { return {pi0, 1.0 - pi0}; }

  void validate(const std::string& where = "priors") const;
  friend bool operator==(const Priors&, const Priors&) = default;
};

/// Cost c_ji of deciding H_j when H_i is true.
struct CostMatrix {
  double c00 = 0.0;
  double c01 = 1.0;
  double c10 = 1.0;
  double c11 = 0.0;

  /// c10 - c00: extra cost of a false alarm under H0.
  double h0_excess() const { return c10 - c00; }
  /// c01 - c11: extra cost of a miss under H1.
  double h1_excess() const { return c01 - c11; }

  void validate(const std::string& where = "costs") const;
  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;
};

struct AgentSpec {
  Priors priors;
  CostMatrix costs;

  void validate(const std::string& where = "agent") const;
  friend bool operator==(const AgentSpec&, const AgentSpec&) = default;
};

/// Bayes risk of an agent written as base + w0 * P10 + w1 * P01.
struct RiskWeights {
  double base = 0.0;  // pi0 c00 + pi1 c11
  double w0 = 0.0;    // pi0 (c10 - c00)
  double w1 = 0.0;    // pi1 (c01 - c11)
};

RiskWeights risk_weights(const AgentSpec& agent);

/// A full game instance: both agents, power limits, and the noise level.
struct GameConfig {
  AgentSpec transmitter;
  AgentSpec receiver;
  double p0 = 1.0;
  double p1 = 1.0;
  double sigma = 1.0;

  /// Throws Error naming the offending field.
  void validate() const;
  bool is_team() const { return transmitter == receiver; }
  /// (sqrt(P0) + sqrt(P1)) / sigma.
  double d_max() const;

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

/// Transmitter strategy: the signal level sent under each hypothesis.
struct SignalPair {
  double s0 = 0.0;
  double s1 = 0.0;

  friend bool operator==(const SignalPair&, const SignalPair&) = default;
};

/// True iff s0^2 <= P0 and s1^2 <= P1 (with a few ulps of slack).
bool within_power(const SignalPair& s, double p0, double p1);

/// Deterministic receiver strategy.  Threshold rules decide H1 on one side
/// of `threshold`; constant rules ignore the observation.
struct DecisionRule {
  enum class Kind { kThresholdAbove, kThresholdBelow, kAlways0, kAlways1 };

  Kind kind = Kind::kAlways0;
  double threshold = 0.0;  // meaningful for threshold kinds only

  static DecisionRule above(double t) { return {Kind::kThresholdAbove, t}; }
  static DecisionRule below(double t) { return {Kind::kThresholdBelow, t}; }
  static DecisionRule always0() { return {Kind::kAlways0, 0.0}; }
  static DecisionRule always1() { return {Kind::kAlways1, 0.0}; }

  bool is_threshold() const {
    return kind == Kind::kThresholdAbove || kind == Kind::kThresholdBelow;
  }
  bool is_constant() const { return !is_threshold(); }
  /// Decision for a single observation.
  bool decides_h1(double y) const;

  friend bool operator==(const DecisionRule& a, const DecisionRule& b) {
    return a.kind == b.kind && (a.is_constant() || a.threshold == b.threshold);
  }
};

std::string to_string(DecisionRule::Kind kind);
DecisionRule::Kind rule_kind_from_string(const std::string& name);
std::string to_string(const DecisionRule& rule);

/// P_ji = P(decide H_j | H_i true).
struct ErrorProbabilities {
  double p00 = 1.0;
  double p01 = 1.0;
  double p10 = 0.0;
  double p11 = 0.0;
};

}  // namespace bsig

#endif  // BSIG_TYPES_HPP_
