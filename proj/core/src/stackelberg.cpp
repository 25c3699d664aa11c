#include "bsig/stackelberg.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "bsig/detection.hpp"
#include "bsig/team.hpp"

namespace bsig {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTie = 32.0 * std::numeric_limits<double>::epsilon();

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

// Mills ratio Q(x) / phi(x), by continued fraction for x >= 5.
double mills_ratio(double x) {
  if (x < 5.0) {
    const double phi = std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi);
    return phi == 0.0 ? kInf : q_function(x) / phi;
  }
  // Q(x)/phi(x) = 1/(x + 1/(x + 2/(x + 3/(x + ...)))), evaluated bottom-up.
  double tail = x;
  for (int n = 60; n >= 1; --n) tail = x + n / tail;
  return 1.0 / tail;
}

// separation_discriminant divided by phi(|ln tau|/d_max + d_max/2) > 0, which
// reduces to (k_near / k_far) R(a - b) - R(a + b) with R the Mills ratio.
double scaled_separation_discriminant(const StackelbergParams& p) {
  const int s = sign_of(p.ln_tau);
  double ratio = 1.0;
  if (s > 0) ratio = p.k1 / p.k0;
  if (s < 0) ratio = p.k0 / p.k1;
  const double a = std::abs(p.ln_tau) / p.d_max;
  const double b = p.d_max / 2.0;
  return ratio * mills_ratio(a - b) - mills_ratio(a + b);
}

void require_informative(const StackelbergParams& p, const char* who) {
  if (!p.defined()) {
    throw Error(std::string(who) +
                ": requires 0 < tau < inf (the receiver ignores the channel)");
  }
}

// The curve lives on [0, d_max]; allow rounding in a caller's d_max.
void require_in_range(double d, double d_max, const char* who) {
  if (!(d >= 0.0) || d > d_max * (1.0 + 1e-12)) {
    throw Error(std::string(who) + ": distance must lie in [0, d_max]");
  }
}

double risk_of_distance(double d, const GameConfig& config, const AgentSpec& agent,
                        const char* who) {
  config.validate();
  const StackelbergParams p = derived_params(config);
  require_informative(p, who);
  require_in_range(d, p.d_max, who);
  if (d == 0.0) {
    return agent_risk(agent, {0.0, 0.0}, prior_only_decision(config.receiver),
                      config.sigma);
  }
  const RiskWeights w = risk_weights(agent);
  const ErrorProbabilities e = lrt_errors_at_distance(p.zeta, p.ln_tau, d);
  return w.base + w.w0 * e.p10 + w.w1 * e.p01;
}

}  // namespace

bool StackelbergParams::defined() const { return channel_informative(tau); }

std::string to_string(StackelbergCell cell) {
  switch (cell) {
    case StackelbergCell::kInterior:
      return "a-interior";
    case StackelbergCell::kInteriorClamped:
      return "a-clamped";
    case StackelbergCell::kZeroSeparation:
      return "b-zero";
    case StackelbergCell::kMaxSeparation:
      return "c-max";
    case StackelbergCell::kBoundExceeded:
      return "d-bound";
    case StackelbergCell::kDiscriminantPositive:
      return "d-disc-pos";
    case StackelbergCell::kDiscriminantNonPositive:
      return "d-disc-nonpos";
    case StackelbergCell::kFlat:
      return "d-flat";
    case StackelbergCell::kChannelIgnored:
      return "channel-ignored";
  }
  return "?";
}

char quadrant_of(StackelbergCell cell) {
  switch (cell) {
    case StackelbergCell::kInterior:
    case StackelbergCell::kInteriorClamped:
      return 'a';
    case StackelbergCell::kZeroSeparation:
      return 'b';
    case StackelbergCell::kMaxSeparation:
      return 'c';
    case StackelbergCell::kBoundExceeded:
    case StackelbergCell::kDiscriminantPositive:
    case StackelbergCell::kDiscriminantNonPositive:
    case StackelbergCell::kFlat:
      return 'd';
    case StackelbergCell::kChannelIgnored:
      return '-';
  }
  return '?';
}

StackelbergParams derived_params(const GameConfig& config) {
  StackelbergParams p;
  p.tau = tau_of(config.receiver);
  p.zeta = sign_of(config.receiver.costs.h1_excess());
  p.d_max = config.d_max();
  if (!p.defined()) {
    p.k0 = p.k1 = p.ln_tau = kNaN;
    return p;
  }
  const AgentSpec& t = config.transmitter;
  const double root_tau = std::sqrt(p.tau);
  p.k0 = t.priors.pi0 * p.zeta * t.costs.h0_excess() / root_tau;
  p.k1 = t.priors.pi1 * p.zeta * t.costs.h1_excess() * root_tau;
  const double scale = kTie * (std::abs(p.k0) + std::abs(p.k1));
  if (std::abs(p.k0 - p.k1) <= scale) p.k1 = p.k0;
  if (std::abs(p.k0 + p.k1) <= scale) p.k1 = -p.k0;
  p.ln_tau = std::log(p.tau);
  return p;
}

double stationary_bound(const StackelbergParams& p) {
  const double num = 2.0 * p.ln_tau * (p.k0 - p.k1);
  const double den = p.k0 + p.k1;
  if (den == 0.0) return num == 0.0 ? kNaN : kInf;
  return std::abs(num / den);
}

double separation_discriminant(const StackelbergParams& p) {
  const int s = sign_of(p.ln_tau);
  double ratio = 1.0;
  if (s > 0) ratio = p.k1 / (p.k0 * p.tau);
  if (s < 0) ratio = p.k0 * p.tau / p.k1;
  const double a = std::abs(p.ln_tau) / p.d_max;
  const double b = p.d_max / 2.0;
  return ratio * q_function(a - b) - q_function(a + b);
}

ErrorProbabilities lrt_errors_at_distance(int zeta, double ln_tau, double d) {
  const double half = d / 2.0;
  const double shift = ln_tau / d;
  ErrorProbabilities e;
  if (zeta > 0) {
    e.p10 = q_function(half + shift);
    e.p01 = q_function(half - shift);
  } else {
    e.p10 = q_function(-half - shift);
    e.p01 = q_function(shift - half);
  }
  e.p00 = 1.0 - e.p10;
  e.p11 = 1.0 - e.p01;
  return e;
}

double transmitter_risk_of_distance(double d, const GameConfig& config) {
  return risk_of_distance(d, config, config.transmitter, "transmitter_risk_of_distance");
}

double receiver_risk_of_distance(double d, const GameConfig& config) {
  return risk_of_distance(d, config, config.receiver, "receiver_risk_of_distance");
}

OptimalDistance optimal_distance(const GameConfig& config) {
  const StackelbergParams p = derived_params(config);
  require_informative(p, "optimal_distance");

  const double product = p.ln_tau * (p.k0 - p.k1);
  const double sum = p.k0 + p.k1;

  if (sum < 0.0) {
    if (product < 0.0) {
      const double root = std::sqrt(stationary_bound(p));
      if (root < p.d_max) return {root, StackelbergCell::kInterior};
      return {p.d_max, StackelbergCell::kInteriorClamped};
    }
    return {0.0, StackelbergCell::kZeroSeparation};
  }
  if (product < 0.0) return {p.d_max, StackelbergCell::kMaxSeparation};

  // Both coefficients of the curve's derivative vanish: the risk is constant.
  if (sum == 0.0 && product == 0.0) return {0.0, StackelbergCell::kFlat};
  if (p.d_max * p.d_max < stationary_bound(p)) {
    return {0.0, StackelbergCell::kBoundExceeded};
  }
  if (p.d_max > 0.0 && scaled_separation_discriminant(p) > 0.0) {
    return {p.d_max, StackelbergCell::kDiscriminantPositive};
  }
  return {0.0, StackelbergCell::kDiscriminantNonPositive};
}

SignalPair signals_at_distance(const GameConfig& config, double d) {
  const double d_max = config.d_max();
  require_in_range(d, d_max, "signals_at_distance");
  if (d == 0.0) return {0.0, 0.0};
  if (d >= d_max) return {-std::sqrt(config.p0), std::sqrt(config.p1)};
  const double scale = d / d_max;
  return {-std::sqrt(config.p0) * scale, std::sqrt(config.p1) * scale};
}

StackelbergSolution solve_stackelberg(const GameConfig& config) {
  config.validate();
  StackelbergSolution out;
  out.params = derived_params(config);
  if (out.params.defined()) {
    const OptimalDistance od = optimal_distance(config);
    out.d_star = od.d_star;
    out.cell = od.cell;
  }
  out.informative = out.d_star > 0.0;
  out.signals = signals_at_distance(config, out.d_star);
  out.rule = lrt_best_response(config.receiver, out.signals, config.sigma);
  out.transmitter_risk = agent_risk(config.transmitter, out.signals, out.rule, config.sigma);
  out.receiver_risk = agent_risk(config.receiver, out.signals, out.rule, config.sigma);
  return out;
}

std::string to_string(PriorRatioQuadrant q) {
  switch (q) {
    case PriorRatioQuadrant::kLowerRatioLowTau:
      return "lower-ratio/low-tau";
    case PriorRatioQuadrant::kLowerRatioHighTau:
      return "lower-ratio/high-tau";
    case PriorRatioQuadrant::kHigherRatioLowTau:
      return "higher-ratio/low-tau";
    case PriorRatioQuadrant::kHigherRatioHighTau:
      return "higher-ratio/high-tau";
    case PriorRatioQuadrant::kChannelIgnored:
      return "channel-ignored";
  }
  return "?";
}

SubjectivePriorsOutcome classify_subjective_priors(const GameConfig& config) {
  config.validate();
  if (!(config.transmitter.costs == config.receiver.costs)) {
    throw Error("classify_subjective_priors: transmitter and receiver cost "
                "matrices must be identical");
  }
  SubjectivePriorsOutcome out;
  const StackelbergParams p = derived_params(config);
  if (!p.defined()) return out;

  const Priors& t = config.transmitter.priors;
  const Priors& r = config.receiver.priors;
  // pi0t/pi1t < pi0r/pi1r without dividing by a possibly tiny pi1.
  const bool lower_ratio = t.pi0 * r.pi1 < r.pi0 * t.pi1;
  const bool low_tau = p.tau < 1.0;
  if (lower_ratio) {
    out.quadrant = low_tau ? PriorRatioQuadrant::kLowerRatioLowTau
                           : PriorRatioQuadrant::kLowerRatioHighTau;
  } else {
    out.quadrant = low_tau ? PriorRatioQuadrant::kHigherRatioLowTau
                           : PriorRatioQuadrant::kHigherRatioHighTau;
  }

  const bool diagonal = lower_ratio == low_tau;
  if (!diagonal) {
    out.d_star = p.d_max;
    out.cell = StackelbergCell::kMaxSeparation;
  } else if (p.d_max * p.d_max < stationary_bound(p)) {
    out.d_star = 0.0;
    out.cell = StackelbergCell::kBoundExceeded;
  } else if (p.d_max > 0.0 && scaled_separation_discriminant(p) > 0.0) {
    out.d_star = p.d_max;
    out.cell = StackelbergCell::kDiscriminantPositive;
  } else {
    out.d_star = 0.0;
    out.cell = StackelbergCell::kDiscriminantNonPositive;
  }
  out.informative = out.d_star > 0.0;
  return out;
}

}  // namespace bsig
