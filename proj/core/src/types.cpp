#include "bsig/types.hpp"

#include <cmath>
#include <sstream>

namespace bsig {

namespace {

constexpr double kPriorSumTolerance = 1e-12;

void require(bool ok, const std::string& where, const std::string& what) {
  if (!ok) throw Error(where + ": " + what);
}

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

}  // namespace

void Priors::validate(const std::string& where) const {
  require(is_probability(pi0), where + ".pi0", "must be a probability in [0, 1]");
  require(is_probability(pi1), where + ".pi1", "must be a probability in [0, 1]");
  require(std::abs(pi0 + pi1 - 1.0) <= kPriorSumTolerance, where,
          "pi0 + pi1 must equal 1");
}

void CostMatrix::validate(const std::string& where) const {
  const double entries[] = {c00, c01, c10, c11};
  const char* names[] = {"c00", "c01", "c10", "c11"};
  for (int i = 0; i < 4; ++i) {
    require(std::isfinite(entries[i]) && entries[i] >= 0.0,
            where + "." + names[i], "must be a finite nonnegative cost");
  }
}

void AgentSpec::validate(const std::string& where) const {
  priors.validate(where + ".priors");
  costs.validate(where + ".costs");
}

RiskWeights risk_weights(const AgentSpec& agent) {
  const auto& pr = agent.priors;
  const auto& c = agent.costs;
  return {pr.pi0 * c.c00 + pr.pi1 * c.c11, pr.pi0 * c.h0_excess(),
          pr.pi1 * c.h1_excess()};
}

void GameConfig::validate() const {
  transmitter.validate("transmitter");
  receiver.validate("receiver");
  require(std::isfinite(p0) && p0 >= 0.0, "channel.p0", "must be finite and >= 0");
  require(std::isfinite(p1) && p1 >= 0.0, "channel.p1", "must be finite and >= 0");
  require(std::isfinite(sigma) && sigma > 0.0, "channel.sigma",
          "must be finite and > 0");
  // An event impossible for one agent must be impossible for both.
  const double t[] = {transmitter.priors.pi0, transmitter.priors.pi1};
  const double r[] = {receiver.priors.pi0, receiver.priors.pi1};
  for (int i = 0; i < 2; ++i) {
    const bool t_zero = t[i] == 0.0;
    const bool r_zero = r[i] == 0.0;
    require(t_zero == r_zero, "priors",
            "transmitter and receiver priors must be mutually absolutely "
            "continuous (pi" + std::to_string(i) + " is zero for only one agent)");
  }
}

double GameConfig::d_max() const { return (std::sqrt(p0) + std::sqrt(p1)) / sigma; }

bool within_power(const SignalPair& s, double p0, double p1) {
  auto ok = [](double v, double p) {
    return std::isfinite(v) && std::abs(v) <= std::sqrt(p) * (1.0 + 4e-16);
  };
  return ok(s.s0, p0) && ok(s.s1, p1);
}

bool DecisionRule::decides_h1(double y) const {
  switch (kind) {
    case Kind::kThresholdAbove:
      return y > threshold;
    case Kind::kThresholdBelow:
      return y < threshold;
    case Kind::kAlways0:
      return false;
    case Kind::kAlways1:
      return true;
  }
  return false;
}

std::string to_string(DecisionRule::Kind kind) {
  switch (kind) {
    case DecisionRule::Kind::kThresholdAbove:
      return "above";
    case DecisionRule::Kind::kThresholdBelow:
      return "below";
    case DecisionRule::Kind::kAlways0:
      return "always0";
    case DecisionRule::Kind::kAlways1:
      return "always1";
  }
  return "?";
}

DecisionRule::Kind rule_kind_from_string(const std::string& name) {
  if (name == "above") return DecisionRule::Kind::kThresholdAbove;
  if (name == "below") return DecisionRule::Kind::kThresholdBelow;
  if (name == "always0") return DecisionRule::Kind::kAlways0;
  if (name == "always1") return DecisionRule::Kind::kAlways1;
  throw Error("unknown decision rule kind '" + name + "'");
}

std::string to_string(const DecisionRule& rule) {
  std::ostringstream out;
  out << to_string(rule.kind);
  if (rule.is_threshold()) out << ":" << rule.threshold;
  return out.str();
}

}  // namespace bsig
