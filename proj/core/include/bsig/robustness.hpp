#ifndef BSIG_ROBUSTNESS_HPP_
#define BSIG_ROBUSTNESS_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "bsig/nash.hpp"
#include "bsig/stackelberg.hpp"
#include "bsig/types.hpp"

namespace bsig {

/// Shift of the transmitter's priors and costs away from the receiver's.
struct Perturbation {
  double eps_pi0 = 0.0;
  double eps_pi1 = 0.0;
  double eps_00 = 0.0;
  double eps_01 = 0.0;
  double eps_10 = 0.0;
  double eps_11 = 0.0;

  double max_abs() const;
  Perturbation operator-() const;
  friend bool operator==(const Perturbation&, const Perturbation&) = default;
};

/// Adds `eps` to the transmitter's priors and costs; the receiver is left
/// alone.  Throws Error when eps_pi0 + eps_pi1 != 0 or the shifted
/// transmitter is not a valid agent.
GameConfig perturb(const GameConfig& config, const Perturbation& eps);

/// Equilibrium summary of one perturbed config.
struct RobustnessRecord {
  Perturbation eps;
  double tau = 0.0;
  double k0 = 0.0;
  double k1 = 0.0;
  double xi0 = 0.0;
  double xi1 = 0.0;
  bool stackelberg_informative = false;
  StackelbergCell stackelberg_cell = StackelbergCell::kChannelIgnored;
  NashTag nash_tag = NashTag::kNonInformative;
};

RobustnessRecord evaluate_perturbation(const GameConfig& base, const Perturbation& eps);

enum class RobustnessTarget { kStackelberg, kNash };

std::string to_string(RobustnessTarget target);
RobustnessTarget robustness_target_from_string(const std::string& name);

/// `flipped` is true iff some record differs from `base` in the target's
/// classification (informative flag or Nash tag); `witness` is the first such
/// record's perturbation.
struct RobustnessReport {
  RobustnessTarget target = RobustnessTarget::kStackelberg;
  RobustnessRecord base;
  std::vector<RobustnessRecord> records;
  bool flipped = false;
  std::optional<Perturbation> witness;
};

/// Valid perturbations whose components are each -m, 0 or +m (with
/// eps_pi1 = -eps_pi0) for m in {bound, bound/2, bound/4}, in a fixed order:
/// magnitudes descending, then sign patterns lexicographically.
std::vector<Perturbation> corner_perturbations(const GameConfig& config, double bound);

/// First perturbation (in corner_perturbations order) with max_abs <= bound
/// that changes solve_stackelberg's informative flag.  Requires a team config
/// with 0 < tau < inf.
std::optional<Perturbation> stackelberg_flip_witness(const GameConfig& config, double bound);

/// Corners plus `samples` uniform draws from the box; tracks the informative
/// flag.
RobustnessReport stackelberg_robustness_sweep(const GameConfig& config, double bound,
                                              int samples, std::uint64_t seed);

/// Uniform draws from the box plus corners just inside it; tracks the Nash
/// tag.  Requires a team config with 0 < tau < inf and 2 * bound no larger
/// than either receiver cost difference, which keeps every |eps_10 - eps_00|
/// and |eps_01 - eps_11| below the matching difference.
RobustnessReport nash_robustness_check(const GameConfig& config, double bound, int samples,
                                       std::uint64_t seed);

/// The seeded generator used by the sweeps: mt19937_64, with doubles formed
/// from the top 53 bits of each output.
class SweepRng {
 public:
  explicit SweepRng(std::uint64_t seed);
  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [-bound, bound).
  double symmetric(double bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace bsig

#endif  // BSIG_ROBUSTNESS_HPP_
