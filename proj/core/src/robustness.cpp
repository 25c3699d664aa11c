#include "bsig/robustness.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "bsig/team.hpp"

namespace bsig {

namespace {

constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
constexpr double kInsideFactor = 1.0 - 1.0 / 1073741824.0;  // 1 - 2^-30
constexpr int kMaxAttemptsPerSample = 64;

void require_team_base(const GameConfig& config, const char* who) {
  config.validate();
  if (!config.is_team()) {
    throw Error(std::string(who) + ": base config must be a team config "
                "(identical transmitter and receiver specs)");
  }
  if (!channel_informative(tau_of(config.receiver))) {
    throw Error(std::string(who) + ": requires 0 < tau < inf at the base config");
  }
}

void require_bound(double bound, const char* who) {
  if (!std::isfinite(bound) || bound < 0.0) {
    throw Error(std::string(who) + ": eps_bound must be finite and >= 0");
  }
}

std::optional<GameConfig> try_perturb(const GameConfig& config, const Perturbation& eps) {
  try {
    return perturb(config, eps);
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::vector<Perturbation> sign_patterns(const GameConfig& config, double m) {
  std::vector<Perturbation> out;
  if (m == 0.0) return out;
  constexpr std::array<int, 3> kSigns = {-1, 0, 1};
  for (int sp : kSigns) {
    for (int a : kSigns) {
      for (int b : kSigns) {
        for (int c : kSigns) {
          for (int d : kSigns) {
            const Perturbation eps{sp * m, -sp * m, a * m, b * m, c * m, d * m};
            if (try_perturb(config, eps)) out.push_back(eps);
          }
        }
      }
    }
  }
  return out;
}

// Uniform draw from the box |eps| <= bound clipped to the region where the
// transmitter stays valid.
std::optional<Perturbation> sample_perturbation(const GameConfig& config, double bound,
                                                SweepRng& rng) {
  const Priors& pr = config.transmitter.priors;
  const CostMatrix& c = config.transmitter.costs;
  auto draw = [&](double lo, double hi) { return lo + (hi - lo) * rng.uniform(); };
  for (int attempt = 0; attempt < kMaxAttemptsPerSample; ++attempt) {
    Perturbation eps;
    eps.eps_pi0 = draw(std::max(-bound, -pr.pi0), std::min(bound, pr.pi1));
    eps.eps_pi1 = -eps.eps_pi0;
    eps.eps_00 = draw(std::max(-bound, -c.c00), bound);
    eps.eps_01 = draw(std::max(-bound, -c.c01), bound);
    eps.eps_10 = draw(std::max(-bound, -c.c10), bound);
    eps.eps_11 = draw(std::max(-bound, -c.c11), bound);
    if (try_perturb(config, eps)) return eps;
  }
  return std::nullopt;
}

bool differs(RobustnessTarget target, const RobustnessRecord& a, const RobustnessRecord& b) {
  if (target == RobustnessTarget::kStackelberg) {
    return a.stackelberg_informative != b.stackelberg_informative;
  }
  return a.nash_tag != b.nash_tag;
}

void add_record(RobustnessReport& report, const GameConfig& config, const Perturbation& eps) {
  RobustnessRecord rec = evaluate_perturbation(config, eps);
  if (differs(report.target, rec, report.base) && !report.flipped) {
    report.flipped = true;
    report.witness = eps;
  }
  report.records.push_back(rec);
}

}  // namespace

double Perturbation::max_abs() const {
  return std::max({std::abs(eps_pi0), std::abs(eps_pi1), std::abs(eps_00), std::abs(eps_01),
                   std::abs(eps_10), std::abs(eps_11)});
}

Perturbation Perturbation::operator-() const {
  return {-eps_pi0, -eps_pi1, -eps_00, -eps_01, -eps_10, -eps_11};
}

GameConfig perturb(const GameConfig& config, const Perturbation& eps) {
  const double parts[] = {eps.eps_pi0, eps.eps_pi1, eps.eps_00,
                          eps.eps_01,  eps.eps_10,  eps.eps_11};
  for (double v : parts) {
    if (!std::isfinite(v)) throw Error("perturbation: components must be finite");
  }
  if (eps.eps_pi0 + eps.eps_pi1 != 0.0) {
    throw Error("perturbation: eps_pi0 + eps_pi1 must be 0 so the priors still sum to 1");
  }
  GameConfig out = config;
  AgentSpec& t = out.transmitter;
  t.priors.pi0 += eps.eps_pi0;
  t.priors.pi1 += eps.eps_pi1;
  t.costs.c00 += eps.eps_00;
  t.costs.c01 += eps.eps_01;
  t.costs.c10 += eps.eps_10;
  t.costs.c11 += eps.eps_11;
  try {
    out.validate();
  } catch (const Error& e) {
    throw Error(std::string("perturbation: perturbed config is invalid: ") + e.what());
  }
  return out;
}

RobustnessRecord evaluate_perturbation(const GameConfig& base, const Perturbation& eps) {
  const GameConfig config = perturb(base, eps);
  RobustnessRecord rec;
  rec.eps = eps;
  const StackelbergSolution st = solve_stackelberg(config);
  rec.tau = st.params.tau;
  rec.k0 = st.params.k0;
  rec.k1 = st.params.k1;
  rec.stackelberg_informative = st.informative;
  rec.stackelberg_cell = st.cell;
  const NashClassification nash = classify_nash(config);
  rec.xi0 = nash.xi0;
  rec.xi1 = nash.xi1;
  rec.nash_tag = nash.tag;
  return rec;
}

std::string to_string(RobustnessTarget target) {
  return target == RobustnessTarget::kNash ? "nash" : "stackelberg";
}

RobustnessTarget robustness_target_from_string(const std::string& name) {
  if (name == "nash") return RobustnessTarget::kNash;
  if (name == "stackelberg") return RobustnessTarget::kStackelberg;
  throw Error("unknown robustness target '" + name + "' (expected nash or stackelberg)");
}

std::vector<Perturbation> corner_perturbations(const GameConfig& config, double bound) {
  require_bound(bound, "corner_perturbations");
  std::vector<Perturbation> out;
  for (double m : {bound, bound / 2.0, bound / 4.0}) {
    const std::vector<Perturbation> level = sign_patterns(config, m);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::optional<Perturbation> stackelberg_flip_witness(const GameConfig& config, double bound) {
  require_team_base(config, "stackelberg_flip_witness");
  require_bound(bound, "stackelberg_flip_witness");
  const bool base = solve_stackelberg(config).informative;
  for (const Perturbation& eps : corner_perturbations(config, bound)) {
    if (solve_stackelberg(perturb(config, eps)).informative != base) return eps;
  }
  return std::nullopt;
}

RobustnessReport stackelberg_robustness_sweep(const GameConfig& config, double bound,
                                              int samples, std::uint64_t seed) {
  require_team_base(config, "stackelberg_robustness_sweep");
  require_bound(bound, "stackelberg_robustness_sweep");
  if (samples < 0) throw Error("stackelberg_robustness_sweep: samples must be >= 0");
  RobustnessReport report;
  report.target = RobustnessTarget::kStackelberg;
  report.base = evaluate_perturbation(config, {});
  for (const Perturbation& eps : corner_perturbations(config, bound)) {
    add_record(report, config, eps);
  }
  if (bound > 0.0) {
    SweepRng rng(seed);
    for (int i = 0; i < samples; ++i) {
      if (auto eps = sample_perturbation(config, bound, rng)) add_record(report, config, *eps);
    }
  }
  return report;
}

RobustnessReport nash_robustness_check(const GameConfig& config, double bound, int samples,
                                       std::uint64_t seed) {
  require_team_base(config, "nash_robustness_check");
  require_bound(bound, "nash_robustness_check");
  if (samples < 0) throw Error("nash_robustness_check: samples must be >= 0");
  const CostMatrix& c = config.receiver.costs;
  const double limit = std::min(std::abs(c.h0_excess()), std::abs(c.h1_excess()));
  if (2.0 * bound > limit) {
    throw Error("nash_robustness_check: eps_bound " + std::to_string(bound) +
                " is too large; perturbed cost differences can move by up to 2 * eps_bound, "
                "which must not exceed the smallest receiver cost difference " +
                std::to_string(limit) + " (use eps_bound <= " + std::to_string(limit / 2.0) +
                ")");
  }
  RobustnessReport report;
  report.target = RobustnessTarget::kNash;
  report.base = evaluate_perturbation(config, {});
  for (const Perturbation& eps : sign_patterns(config, bound * kInsideFactor)) {
    add_record(report, config, eps);
  }
  if (bound > 0.0) {
    SweepRng rng(seed);
    for (int i = 0; i < samples; ++i) {
      if (auto eps = sample_perturbation(config, bound, rng)) add_record(report, config, *eps);
    }
  }
  return report;
}

SweepRng::SweepRng(std::uint64_t seed) : engine_(seed) {}

double SweepRng::uniform() { return static_cast<double>(engine_() >> 11) * kTwoPowMinus53; }

double SweepRng::symmetric(double bound) { return bound * (2.0 * uniform() - 1.0); }

}  // namespace bsig
