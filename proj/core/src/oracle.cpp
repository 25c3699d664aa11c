#include "bsig/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "bsig/detection.hpp"
#include "parallel.hpp"

namespace bsig {

namespace {

constexpr int kGoldenIterations = 48;
constexpr std::size_t kMaxExamples = 8;

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

struct ScalarMin {
  double x;
  double value;
};

// Golden-section search for a unimodal f on [a, b].
template <class F>
ScalarMin golden_section_minimize(F&& f, double a, double b) {
  constexpr double kInvPhi = std::numbers::phi - 1.0;
  double c = b - kInvPhi * (b - a);
  double d = a + kInvPhi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int i = 0; i < kGoldenIterations && c < d; ++i) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvPhi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvPhi * (b - a);
      fd = f(d);
    }
  }
  return fc <= fd ? ScalarMin{c, fc} : ScalarMin{d, fd};
}

// R_i(a) - R_i(b): change in the conditional risk under hypothesis i when the
// signal for H_i moves from b to a, with the decision probability difference
// taken in whichever tail is small.
double conditional_risk_delta(const CostMatrix& c, int i, const DecisionRule& rule,
                              double sigma, double a, double b) {
  const double excess = i == 0 ? c.c10 - c.c00 : c.c11 - c.c01;
  if (excess == 0.0) return 0.0;
  const double h1a = decide_h1_probability(rule, a, sigma);
  const double h1b = decide_h1_probability(rule, b, sigma);
  double dp;
  if (h1a <= 0.5 && h1b <= 0.5) {
    dp = h1a - h1b;
  } else {
    dp = decide_h0_probability(rule, b, sigma) - decide_h0_probability(rule, a, sigma);
  }
  return excess * dp;
}

double prior_of(const AgentSpec& agent, int i) {
  return i == 0 ? agent.priors.pi0 : agent.priors.pi1;
}

// For each level on the axis of hypothesis i: true iff no other level gives a
// strictly lower conditional transmitter risk against `rule`.
std::vector<char> unimprovable_levels(const GameConfig& config, int i,
                                      const DecisionRule& rule,
                                      const std::vector<double>& axis) {
  std::vector<char> ok(axis.size(), 1);
  if (prior_of(config.transmitter, i) == 0.0) return ok;
  // Against a threshold rule the conditional risk is monotone in the level,
  // but comparing against every level keeps this a plain brute force.
  for (std::size_t k = 0; k < axis.size(); ++k) {
    for (double v : axis) {
      if (conditional_risk_delta(config.transmitter.costs, i, rule, config.sigma, v,
                                 axis[k]) < 0.0) {
        ok[k] = 0;
        break;
      }
    }
  }
  return ok;
}

bool strictly_improvable(const GameConfig& config, int i, const DecisionRule& rule,
                         double own, const std::vector<double>& axis) {
  if (prior_of(config.transmitter, i) == 0.0) return false;
  for (double v : axis) {
    if (conditional_risk_delta(config.transmitter.costs, i, rule, config.sigma, v, own) <
        0.0) {
      return true;
    }
  }
  return false;
}

struct AxisPreference {
  bool strict = false;
  double best = 0.0;
};

AxisPreference axis_preference(const GameConfig& config, int i, const DecisionRule& rule,
                               const std::vector<double>& axis) {
  AxisPreference pref;
  pref.best = axis.front();
  if (prior_of(config.transmitter, i) == 0.0) return pref;
  for (double v : axis) {
    const double delta =
        conditional_risk_delta(config.transmitter.costs, i, rule, config.sigma, v, pref.best);
    if (delta < 0.0) {
      pref.best = v;
      pref.strict = true;
    } else if (delta > 0.0) {
      pref.strict = true;
    }
  }
  return pref;
}

}  // namespace

void GridSpec::validate() const {
  if (signal_points < 3 || threshold_points < 3) {
    throw Error("grid: point counts must be >= 3");
  }
  if (!(tolerance > 0.0)) throw Error("grid: tolerance must be > 0");
  if (!(threshold_span >= 0.0) || !std::isfinite(threshold_span)) {
    throw Error("grid: threshold span must be finite and >= 0");
  }
}

std::vector<double> signal_axis(double power, int n) {
  if (power == 0.0) return {0.0};
  const double a = std::sqrt(power);
  return linspace(-a, a, n);
}

DecisionRule grid_receiver_best_response(const SignalPair& s, const GameConfig& config,
                                         const GridSpec& grid) {
  const AgentSpec& rx = config.receiver;
  const double sigma = config.sigma;
  auto risk = [&](const DecisionRule& r) { return agent_risk(rx, s, r, sigma); };

  DecisionRule best = DecisionRule::always0();
  double best_risk = risk(best);
  if (const double r1 = risk(DecisionRule::always1()); r1 < best_risk) {
    best = DecisionRule::always1();
    best_risk = r1;
  }

  const double lo = std::min(s.s0, s.s1) - grid.threshold_span * sigma;
  const double hi = std::max(s.s0, s.s1) + grid.threshold_span * sigma;
  const std::vector<double> ts = linspace(lo, hi, grid.threshold_points);

  // One pair of tail probabilities per threshold serves both directions.
  std::vector<double> above_risk(ts.size());
  std::vector<double> below_risk(ts.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double q0 = q_function((ts[k] - s.s0) / sigma);
    const double q1 = q_function((ts[k] - s.s1) / sigma);
    above_risk[k] = bayes_risk(rx, {1.0 - q0, 1.0 - q1, q0, q1});
    below_risk[k] = bayes_risk(rx, {q0, q1, 1.0 - q0, 1.0 - q1});
  }

  for (auto kind : {DecisionRule::Kind::kThresholdAbove, DecisionRule::Kind::kThresholdBelow}) {
    const std::vector<double>& scan =
        kind == DecisionRule::Kind::kThresholdAbove ? above_risk : below_risk;
    auto at = [&](double t) { return risk(DecisionRule{kind, t}); };
    std::size_t arg = 0;
    for (std::size_t k = 1; k < ts.size(); ++k) {
      if (scan[k] < scan[arg]) arg = k;
    }
    double t_best = ts[arg];
    double arg_risk = at(t_best);
    // Risk is unimodal in the threshold (monotone likelihood ratio), so the
    // bracket around the best grid point contains the continuous optimum.
    const double a = ts[arg == 0 ? 0 : arg - 1];
    const double b = ts[std::min(arg + 1, ts.size() - 1)];
    if (const ScalarMin m = golden_section_minimize(at, a, b); m.value < arg_risk) {
      t_best = m.x;
      arg_risk = m.value;
    }
    if (arg_risk < best_risk) {
      best = DecisionRule{kind, t_best};
      best_risk = arg_risk;
    }
  }
  return best;
}

SignalPair grid_transmitter_best_response(const DecisionRule& rule, const GameConfig& config,
                                          const GridSpec& grid) {
  const std::vector<double> a0 = signal_axis(config.p0, grid.signal_points);
  const std::vector<double> a1 = signal_axis(config.p1, grid.signal_points);
  SignalPair best{a0.front(), a1.front()};
  double best_risk = agent_risk(config.transmitter, best, rule, config.sigma);
  for (double s0 : a0) {
    for (double s1 : a1) {
      const double r = agent_risk(config.transmitter, {s0, s1}, rule, config.sigma);
      if (r < best_risk) {
        best = {s0, s1};
        best_risk = r;
      }
    }
  }
  return best;
}

bool babbling_manipulable(const GameConfig& config, const GridSpec& grid) {
  if (config.p0 == 0.0 && config.p1 == 0.0) return false;
  const double a = std::sqrt(config.p0);
  const double b = std::sqrt(config.p1);
  const bool responds =
      grid_receiver_best_response({-a, b}, config, grid).is_threshold() ||
      grid_receiver_best_response({a, -b}, config, grid).is_threshold();
  if (!responds) return false;

  const std::vector<double> a0 = signal_axis(config.p0, grid.signal_points);
  const std::vector<double> a1 = signal_axis(config.p1, grid.signal_points);
  // The transmitter's preferred level for each hypothesis against a threshold
  // rule does not depend on where the threshold sits, so a constant rule is
  // judged through threshold rules of either orientation.
  auto separates = [&](const DecisionRule& rule) {
    const AxisPreference p0 = axis_preference(config, 0, rule, a0);
    const AxisPreference p1 = axis_preference(config, 1, rule, a1);
    return p0.strict && p1.strict && p0.best != p1.best;
  };
  return separates(DecisionRule::above(0.0)) && separates(DecisionRule::below(0.0));
}

NashVerdict check_nash(const GameConfig& config, const SignalPair& s,
                       const DecisionRule& rule, const GridSpec& grid) {
  NashVerdict v;
  const double sigma = config.sigma;

  const DecisionRule rx_br = grid_receiver_best_response(s, config, grid);
  v.receiver_ok = agent_risk(config.receiver, s, rule, sigma) -
                      agent_risk(config.receiver, s, rx_br, sigma) <=
                  grid.tolerance;

  const SignalPair tx_br = grid_transmitter_best_response(rule, config, grid);
  v.transmitter_ok = agent_risk(config.transmitter, s, rule, sigma) -
                         agent_risk(config.transmitter, tx_br, rule, sigma) <=
                     grid.tolerance;
  if (v.transmitter_ok && rule.is_threshold()) {
    v.transmitter_ok =
        !strictly_improvable(config, 0, rule, s.s0, signal_axis(config.p0, grid.signal_points)) &&
        !strictly_improvable(config, 1, rule, s.s1, signal_axis(config.p1, grid.signal_points));
  }

  if (rule.is_constant()) v.unmanipulable = !babbling_manipulable(config, grid);
  return v;
}

bool verify_nash(const GameConfig& config, const SignalPair& s, const DecisionRule& rule,
                 const GridSpec& grid) {
  grid.validate();
  return check_nash(config, s, rule, grid).passed();
}

double committed_transmitter_risk(const GameConfig& config, const SignalPair& s,
                                  const GridSpec& grid) {
  const DecisionRule br = grid_receiver_best_response(s, config, grid);
  return agent_risk(config.transmitter, s, br, config.sigma);
}

StackelbergGridOptimum stackelberg_grid_optimum(const GameConfig& config,
                                                const GridSpec& grid) {
  grid.validate();
  const std::vector<double> a0 = signal_axis(config.p0, grid.signal_points);
  const std::vector<double> a1 = signal_axis(config.p1, grid.signal_points);
  std::vector<double> risks(a0.size() * a1.size());
  detail::parallel_for(risks.size(), [&](std::size_t idx) {
    const SignalPair s{a0[idx / a1.size()], a1[idx % a1.size()]};
    risks[idx] = committed_transmitter_risk(config, s, grid);
  });
  const auto it = std::min_element(risks.begin(), risks.end());
  const auto idx = static_cast<std::size_t>(it - risks.begin());
  return {{a0[idx / a1.size()], a1[idx % a1.size()]}, *it};
}

bool verify_stackelberg(const GameConfig& config, const SignalPair& s, const GridSpec& grid) {
  grid.validate();
  const double own = committed_transmitter_risk(config, s, grid);
  return own <= stackelberg_grid_optimum(config, grid).transmitter_risk + grid.tolerance;
}

NashSearchResult exhaustive_nash_search(const GameConfig& config, const GridSpec& grid) {
  grid.validate();
  const double sigma = config.sigma;
  const std::vector<double> a0 = signal_axis(config.p0, grid.signal_points);
  const std::vector<double> a1 = signal_axis(config.p1, grid.signal_points);
  const std::size_t n_signals = a0.size() * a1.size();
  auto pair_at = [&](std::size_t idx) {
    return SignalPair{a0[idx / a1.size()], a1[idx % a1.size()]};
  };

  const double reach = std::max(std::sqrt(config.p0), std::sqrt(config.p1)) +
                       grid.threshold_span * sigma;
  const std::vector<double> ts = linspace(-reach, reach, grid.threshold_points);
  std::vector<DecisionRule> rules = {DecisionRule::always0(), DecisionRule::always1()};
  for (double t : ts) rules.push_back(DecisionRule::above(t));
  for (double t : ts) rules.push_back(DecisionRule::below(t));

  std::vector<double> rx_best(n_signals);
  detail::parallel_for(n_signals, [&](std::size_t idx) {
    const SignalPair s = pair_at(idx);
    rx_best[idx] = agent_risk(config.receiver, s,
                              grid_receiver_best_response(s, config, grid), sigma);
  });

  const bool unmanipulable = !babbling_manipulable(config, grid);

  std::vector<std::vector<char>> passes(rules.size());
  detail::parallel_for(rules.size(), [&](std::size_t r) {
    const DecisionRule& rule = rules[r];
    std::vector<char>& out = passes[r];
    out.assign(n_signals, 0);
    if (rule.is_constant() && !unmanipulable) return;

    std::vector<double> tx(n_signals);
    for (std::size_t idx = 0; idx < n_signals; ++idx) {
      tx[idx] = agent_risk(config.transmitter, pair_at(idx), rule, sigma);
    }
    // Same minimum and tie rule as grid_transmitter_best_response.
    double tx_min = tx[0];
    for (double v : tx) tx_min = std::min(tx_min, v);

    std::vector<char> ok0(a0.size(), 1);
    std::vector<char> ok1(a1.size(), 1);
    if (rule.is_threshold()) {
      ok0 = unimprovable_levels(config, 0, rule, a0);
      ok1 = unimprovable_levels(config, 1, rule, a1);
    }
    for (std::size_t idx = 0; idx < n_signals; ++idx) {
      if (tx[idx] - tx_min > grid.tolerance) continue;
      if (!ok0[idx / a1.size()] || !ok1[idx % a1.size()]) continue;
      const double rr = agent_risk(config.receiver, pair_at(idx), rule, sigma);
      if (rr - rx_best[idx] > grid.tolerance) continue;
      out[idx] = 1;
    }
  });

  NashSearchResult result;
  result.profiles_checked = rules.size() * n_signals;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    for (std::size_t idx = 0; idx < n_signals; ++idx) {
      if (!passes[r][idx]) continue;
      ++result.passing;
      if (result.examples.size() < kMaxExamples) {
        result.examples.push_back({pair_at(idx), rules[r]});
      }
    }
  }
  return result;
}

}  // namespace bsig
