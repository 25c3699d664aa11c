#include "bsig/nash.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <tuple>

#include "bsig/detection.hpp"
#include "bsig/team.hpp"

namespace bsig {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kQuantum = 1e-9;

int sign_of(double x) { return (x > 0.0) - (x < 0.0); }

double ratio_or_nan(double num, double den) { return den == 0.0 ? kNaN : num / den; }

bool same_rule(const DecisionRule& a, const DecisionRule& b) {
  if (a.kind != b.kind) return false;
  return a.is_constant() || std::abs(a.threshold - b.threshold) <= kQuantum;
}

using ProfileKey = std::tuple<long long, long long, int, long long>;

ProfileKey quantize(const SignalPair& s, const DecisionRule& r) {
  auto q = [](double x) { return std::llround(x / kQuantum); };
  return {q(s.s0), q(s.s1), static_cast<int>(r.kind), r.is_threshold() ? q(r.threshold) : 0};
}

}  // namespace

std::string to_string(NashTag tag) {
  switch (tag) {
    case NashTag::kUniqueInformative:
      return "unique-informative";
    case NashTag::kNonInformative:
      return "non-informative";
    case NashTag::kNoEquilibrium:
      return "no-equilibrium";
  }
  return "?";
}

std::string to_string(BrOutcome outcome) {
  switch (outcome) {
    case BrOutcome::kConverged:
      return "converged";
    case BrOutcome::kCycleDetected:
      return "cycle-detected";
    case BrOutcome::kMaxItersReached:
      return "max-iters-reached";
  }
  return "?";
}

XiParams xi_params(const GameConfig& config) {
  const CostMatrix& t = config.transmitter.costs;
  const CostMatrix& r = config.receiver.costs;
  return {ratio_or_nan(t.h0_excess(), r.h0_excess()), ratio_or_nan(t.h1_excess(), r.h1_excess())};
}

NashClassification classify_nash(const GameConfig& config) {
  config.validate();
  NashClassification out;
  const XiParams xi = xi_params(config);
  out.xi0 = xi.xi0;
  out.xi1 = xi.xi1;
  if (!channel_informative(tau_of(config.receiver))) {
    out.tag = NashTag::kNonInformative;
    return out;
  }
  const int s0 = sign_of(xi.xi0);
  const int s1 = sign_of(xi.xi1);
  if (s0 == 0 || s1 == 0) {
    out.tag = NashTag::kNonInformative;
  } else if (s0 > 0 && s1 > 0) {
    out.tag = NashTag::kUniqueInformative;
  } else if (s0 < 0 && s1 < 0) {
    out.tag = NashTag::kNoEquilibrium;
  } else if (config.p0 == config.p1) {
    out.tag = NashTag::kNonInformative;
  } else {
    const bool h1_aligned = s1 > 0;
    const bool h1_stronger = config.p1 > config.p0;
    out.tag = h1_aligned == h1_stronger ? NashTag::kUniqueInformative : NashTag::kNoEquilibrium;
  }
  return out;
}

SignalPair transmitter_best_response(const GameConfig& config, const DecisionRule& rule) {
  if (rule.is_constant()) return {0.0, 0.0};
  const AgentSpec& t = config.transmitter;
  const int a = sign_of(t.priors.pi0 * t.costs.h0_excess());
  const int b = sign_of(t.priors.pi1 * t.costs.h1_excess());
  const int dir = rule.kind == DecisionRule::Kind::kThresholdAbove ? 1 : -1;
  SignalPair s{-dir * a * std::sqrt(config.p0), dir * b * std::sqrt(config.p1)};
  // Free coordinates are +0.0.
  if (s.s0 == 0.0) s.s0 = 0.0;
  if (s.s1 == 0.0) s.s1 = 0.0;
  return s;
}

std::optional<NashProfile> construct_nash(const GameConfig& config, const GridSpec& grid) {
  grid.validate();
  const NashClassification cls = classify_nash(config);
  if (cls.tag == NashTag::kNoEquilibrium) return std::nullopt;

  NashProfile profile{{0.0, 0.0}, prior_only_decision(config.receiver)};
  if (cls.tag == NashTag::kUniqueInformative && config.d_max() > 0.0) {
    std::optional<NashProfile> found;
    for (auto kind : {DecisionRule::Kind::kThresholdAbove, DecisionRule::Kind::kThresholdBelow}) {
      const SignalPair s = transmitter_best_response(config, DecisionRule{kind, 0.0});
      const DecisionRule r = lrt_best_response(config.receiver, s, config.sigma);
      if (r.kind != kind) continue;
      // Prefer the orientation with s0 below s1 when both are consistent.
      if (!found || s.s1 > s.s0) found = NashProfile{s, r};
    }
    if (!found) {
      throw Error("construct_nash: no threshold orientation is reproduced by the "
                  "receiver's best response");
    }
    profile = *found;
  }

  const NashVerdict verdict = check_nash(config, profile.signals, profile.rule, grid);
  if (!verdict.passed()) {
    throw Error("construct_nash: constructed profile (" + std::to_string(profile.signals.s0) +
                ", " + std::to_string(profile.signals.s1) + ", " + to_string(profile.rule) +
                ") failed the oracle check [receiver_ok=" + std::to_string(verdict.receiver_ok) +
                " transmitter_ok=" + std::to_string(verdict.transmitter_ok) +
                " unmanipulable=" + std::to_string(verdict.unmanipulable) + "]");
  }
  return profile;
}

BrTrajectory best_response_dynamics(const GameConfig& config, const DecisionRule& init,
                                    int max_iters) {
  config.validate();
  if (max_iters < 1) throw Error("best_response_dynamics: max_iters must be >= 1");
  if (init.is_threshold() && !std::isfinite(init.threshold)) {
    throw Error("best_response_dynamics: initial threshold must be finite");
  }

  BrTrajectory traj;
  std::map<ProfileKey, int> seen;
  DecisionRule previous = init;
  for (int it = 1; it <= max_iters; ++it) {
    BrStep step;
    step.iteration = it;
    step.signals = transmitter_best_response(config, previous);
    step.rule = lrt_best_response(config.receiver, step.signals, config.sigma);
    step.transmitter_risk =
        agent_risk(config.transmitter, step.signals, step.rule, config.sigma);
    step.receiver_risk = agent_risk(config.receiver, step.signals, step.rule, config.sigma);
    traj.steps.push_back(step);

    if (same_rule(step.rule, previous)) {
      traj.outcome = BrOutcome::kConverged;
      return traj;
    }
    const ProfileKey key = quantize(step.signals, step.rule);
    if (const auto hit = seen.find(key); hit != seen.end() && hit->second != it - 1) {
      traj.outcome = BrOutcome::kCycleDetected;
      return traj;
    }
    seen[key] = it;
    previous = step.rule;
  }
  traj.outcome = BrOutcome::kMaxItersReached;
  return traj;
}

}  // namespace bsig
