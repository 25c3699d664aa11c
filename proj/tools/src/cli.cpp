#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bsig/detection.hpp"
#include "bsig/nash.hpp"
#include "bsig/oracle.hpp"
#include "bsig/presets.hpp"
#include "bsig/report.hpp"
#include "bsig/robustness.hpp"
#include "bsig/stackelberg.hpp"
#include "bsig/team.hpp"
#include "config_io.hpp"
#include "csv.hpp"

namespace bsig::cli {

namespace {

constexpr std::uint64_t kDefaultSeed = 20170101;

struct SourceOptions {
  std::string preset;
  std::string config_path;
  double alpha = 0.3;
  double pi0_t = 0.3;
  double pi0_r = 0.6;
  std::optional<double> sigma;
  std::optional<double> p0;
  std::optional<double> p1;
  bool dump = false;
};

struct GridOptions {
  std::optional<int> signal_points;
  std::optional<int> threshold_points;
  std::optional<double> threshold_span;
  std::optional<double> tolerance;

  GridSpec resolve(const GridSpec& defaults) const {
    GridSpec g = defaults;
    if (signal_points) g.signal_points = *signal_points;
    if (threshold_points) g.threshold_points = *threshold_points;
    if (threshold_span) g.threshold_span = *threshold_span;
    if (tolerance) g.tolerance = *tolerance;
    g.validate();
    return g;
  }
};

struct Options {
  SourceOptions source;
  GridOptions grid;
  std::string mode;
  std::string out_path;
  bool json = false;
  int points = 2000;
  int max_iters = 50;
  std::string init = "above:0";
  std::optional<double> eps_bound;
  int samples = 1000;
  std::uint64_t seed = kDefaultSeed;
  std::string target = "nash";
};

void add_source_options(CLI::App* cmd, SourceOptions& o) {
  auto* preset = cmd->add_option("--preset", o.preset, "Built-in config: figure1, figure1-team, "
                                                       "biased-cost, subjective-priors");
  auto* config = cmd->add_option("--config", o.config_path, "JSON config file");
  preset->excludes(config);
  config->excludes(preset);
  cmd->add_option("--alpha", o.alpha, "biased-cost alignment probability")
      ->capture_default_str();
  cmd->add_option("--pi0-t", o.pi0_t, "subjective-priors transmitter pi0")
      ->capture_default_str();
  cmd->add_option("--pi0-r", o.pi0_r, "subjective-priors receiver pi0")->capture_default_str();
  cmd->add_option("--sigma", o.sigma, "Override the noise standard deviation");
  cmd->add_option("--p0", o.p0, "Override the H0 power limit");
  cmd->add_option("--p1", o.p1, "Override the H1 power limit");
  cmd->add_flag("--dump-config", o.dump, "Print the resolved config as JSON and exit");
}

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--signal-points", g.signal_points, "Oracle levels per signal axis");
  cmd->add_option("--threshold-points", g.threshold_points, "Oracle thresholds per direction");
  cmd->add_option("--threshold-span", g.threshold_span,
                  "Oracle threshold range beyond the signals, in units of sigma");
  cmd->add_option("--tolerance", g.tolerance, "Oracle tolerance for equilibrium verdicts");
}

GameConfig resolve_config(const SourceOptions& o) {
  if (o.preset.empty() && o.config_path.empty()) {
    throw Error("a config source is required: --preset NAME or --config PATH");
  }
  GameConfig config;
  if (!o.preset.empty()) {
    PresetOptions po;
    po.alpha = o.alpha;
    po.pi0_t = o.pi0_t;
    po.pi0_r = o.pi0_r;
    config = preset_config(o.preset, po);
  } else {
    config = load_config_file(o.config_path);
  }
  if (o.sigma) config.sigma = *o.sigma;
  if (o.p0) config.p0 = *o.p0;
  if (o.p1) config.p1 = *o.p1;
  config.validate();
  return config;
}

DecisionRule parse_rule(const std::string& text) {
  const auto colon = text.find(':');
  const DecisionRule::Kind kind = rule_kind_from_string(text.substr(0, colon));
  DecisionRule rule{kind, 0.0};
  if (rule.is_threshold()) {
    if (colon == std::string::npos) {
      throw Error("--init: threshold rules need a value, e.g. above:0.5");
    }
    try {
      std::size_t used = 0;
      const std::string value = text.substr(colon + 1);
      rule.threshold = std::stod(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw Error("--init: cannot parse threshold in '" + text + "'");
    }
  } else if (colon != std::string::npos) {
    throw Error("--init: constant rules take no threshold");
  }
  return rule;
}

// Destination for tabular output: --out PATH or the normal output stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error("cannot open output file '" + path + "'");
      stream_ = file_.get();
    }
  }
  std::ostream& stream() { return *stream_; }
  bool to_file() const { return file_ != nullptr; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

std::string fmt(double x) { return format_number(x); }

std::string rule_threshold(const DecisionRule& r) {
  return r.is_threshold() ? fmt(r.threshold) : "";
}

void print_report(std::ostream& out, const EquilibriumReport& r) {
  out << "mode: " << to_string(r.mode) << '\n';
  out << "tag: " << r.tag << '\n';
  if (!r.cell.empty()) out << "cell: " << r.cell << '\n';
  out << "tau: " << fmt(r.tau) << '\n';
  out << "zeta: " << r.zeta << '\n';
  if (r.k0) out << "k0: " << fmt(*r.k0) << '\n';
  if (r.k1) out << "k1: " << fmt(*r.k1) << '\n';
  if (r.mode == SolutionMode::kNash) {
    out << "xi0: " << (r.xi0 ? fmt(*r.xi0) : "undefined") << '\n';
    out << "xi1: " << (r.xi1 ? fmt(*r.xi1) : "undefined") << '\n';
  }
  out << "d_max: " << fmt(r.d_max) << '\n';
  if (!r.signals) {
    out << "equilibrium: none\n";
    return;
  }
  if (r.d_star) out << "d_star: " << fmt(*r.d_star) << '\n';
  out << "s0: " << fmt(r.signals->s0) << '\n';
  out << "s1: " << fmt(r.signals->s1) << '\n';
  out << "rule: " << to_string(r.rule->kind);
  if (r.rule->is_threshold()) out << ' ' << fmt(r.rule->threshold);
  out << '\n';
  out << "P10: " << fmt(r.errors->p10) << '\n';
  out << "P01: " << fmt(r.errors->p01) << '\n';
  out << "transmitter_risk: " << fmt(*r.transmitter_risk) << '\n';
  out << "receiver_risk: " << fmt(*r.receiver_risk) << '\n';
}

int cmd_solve(const Options& o, std::ostream& out) {
  const GameConfig config = resolve_config(o.source);
  const SolutionMode mode = solution_mode_from_string(o.mode);
  const EquilibriumReport report = solve_report(mode, config, o.grid.resolve({}));
  Sink sink(o.out_path, out);
  if (o.json) {
    sink.stream() << report_to_json(report) << '\n';
  } else {
    print_report(sink.stream(), report);
  }
  return kExitOk;
}

int cmd_curve(const Options& o, std::ostream& out) {
  const GameConfig config = resolve_config(o.source);
  if (!channel_informative(tau_of(config.receiver))) {
    throw Error("curve: the risk-versus-distance curve is undefined unless 0 < tau < inf "
                "(the receiver ignores the observation)");
  }
  if (o.points < 1) throw Error("--points must be >= 1");
  const double d_max = config.d_max();
  if (!(d_max > 0.0)) throw Error("curve: d_max is zero, there is no distance range");
  const double d_star = optimal_distance(config).d_star;

  Sink sink(o.out_path, out);
  CsvWriter csv(sink.stream());
  csv.row({"d", "transmitter_risk", "receiver_risk", "kind"});
  auto emit = [&](double d, const char* kind) {
    csv.row({fmt(d), fmt(transmitter_risk_of_distance(d, config)),
             fmt(receiver_risk_of_distance(d, config)), kind});
  };
  emit(0.0, "prior-only");
  bool star_done = d_star == 0.0;
  if (star_done) emit(0.0, "d-star");
  for (int k = 1; k <= o.points; ++k) {
    const double d = k == o.points ? d_max : d_max * k / o.points;
    if (!star_done && d_star < d) {
      emit(d_star, "d-star");
      star_done = true;
    }
    emit(d, "grid");
  }
  if (!star_done) emit(d_star, "d-star");
  return kExitOk;
}

int cmd_dynamics(const Options& o, std::ostream& out) {
  const GameConfig config = resolve_config(o.source);
  const BrTrajectory traj = best_response_dynamics(config, parse_rule(o.init), o.max_iters);
  {
    Sink sink(o.out_path, out);
    CsvWriter csv(sink.stream());
    csv.row({"iteration", "s0", "s1", "rule", "threshold", "transmitter_risk", "receiver_risk"});
    for (const BrStep& st : traj.steps) {
      csv.row({std::to_string(st.iteration), fmt(st.signals.s0), fmt(st.signals.s1),
               to_string(st.rule.kind), rule_threshold(st.rule), fmt(st.transmitter_risk),
               fmt(st.receiver_risk)});
    }
  }
  out << "outcome: " << to_string(traj.outcome) << '\n';
  return kExitOk;
}

std::string describe(const Perturbation& e) {
  return "eps_pi0=" + fmt(e.eps_pi0) + " eps_pi1=" + fmt(e.eps_pi1) + " eps_00=" +
         fmt(e.eps_00) + " eps_01=" + fmt(e.eps_01) + " eps_10=" + fmt(e.eps_10) +
         " eps_11=" + fmt(e.eps_11);
}

int cmd_robustness(const Options& o, std::ostream& out) {
  const GameConfig config = resolve_config(o.source);
  if (!config.is_team()) {
    throw Error("robustness: the base config must be a team config "
                "(identical transmitter and receiver specs)");
  }
  const RobustnessTarget target = robustness_target_from_string(o.target);
  if (o.samples < 0) throw Error("--samples must be >= 0");

  RobustnessReport report;
  std::optional<Perturbation> witness;
  double bound = 0.0;
  if (target == RobustnessTarget::kNash) {
    const CostMatrix& c = config.receiver.costs;
    bound = o.eps_bound.value_or(
        0.5 * std::min(std::abs(c.h0_excess()), std::abs(c.h1_excess())));
    report = nash_robustness_check(config, bound, o.samples, o.seed);
    witness = report.witness;
  } else {
    bound = o.eps_bound.value_or(1e-3);
    witness = stackelberg_flip_witness(config, bound);
    report = stackelberg_robustness_sweep(config, bound, o.samples, o.seed);
    if (!witness) witness = report.witness;
  }

  {
    Sink sink(o.out_path, out);
    CsvWriter csv(sink.stream());
    csv.row({"eps_pi0", "eps_pi1", "eps_00", "eps_01", "eps_10", "eps_11", "tau", "k0", "k1",
             "xi0", "xi1", "stackelberg", "stackelberg_cell", "nash"});
    auto emit = [&](const RobustnessRecord& r) {
      csv.row({fmt(r.eps.eps_pi0), fmt(r.eps.eps_pi1), fmt(r.eps.eps_00), fmt(r.eps.eps_01),
               fmt(r.eps.eps_10), fmt(r.eps.eps_11), fmt(r.tau), fmt(r.k0), fmt(r.k1),
               fmt(r.xi0), fmt(r.xi1),
               r.stackelberg_informative ? "informative" : "non-informative",
               to_string(r.stackelberg_cell), to_string(r.nash_tag)});
    };
    emit(report.base);
    for (const RobustnessRecord& r : report.records) emit(r);
  }
  const bool flipped = report.flipped || witness.has_value();
  out << "target: " << to_string(target) << '\n';
  out << "eps_bound: " << fmt(bound) << '\n';
  out << "records: " << report.records.size() << '\n';
  out << "flipped: " << (flipped ? "true" : "false") << '\n';
  if (witness) out << "witness: " << describe(*witness) << '\n';
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const GameConfig config = resolve_config(o.source);
  const SolutionMode mode = solution_mode_from_string(o.mode);

  if (mode == SolutionMode::kNash) {
    const NashClassification cls = classify_nash(config);
    if (cls.tag == NashTag::kNoEquilibrium) {
      const GridSpec grid = o.grid.resolve({51, 101, 6.0, 1e-6});
      const NashSearchResult res = exhaustive_nash_search(config, grid);
      const bool ok = res.passing == 0;
      out << (ok ? "PASS" : "FAIL") << " nash " << to_string(cls.tag) << ": " << res.passing
          << " of " << res.profiles_checked << " grid profiles pass the equilibrium check"
          << (ok ? " (no-equilibrium confirmed at grid resolution)" : "") << '\n';
      return ok ? kExitOk : kExitVerificationFailed;
    }
    const GridSpec grid = o.grid.resolve({});
    std::optional<NashProfile> profile;
    try {
      profile = construct_nash(config, grid);
    } catch (const Error& e) {
      out << "FAIL nash " << to_string(cls.tag) << ": " << e.what() << '\n';
      return kExitVerificationFailed;
    }
    const NashVerdict v = check_nash(config, profile->signals, profile->rule, grid);
    out << (v.passed() ? "PASS" : "FAIL") << " nash " << to_string(cls.tag)
        << ": s=(" << fmt(profile->signals.s0) << ", " << fmt(profile->signals.s1)
        << ") rule=" << to_string(profile->rule.kind) << ' ' << rule_threshold(profile->rule)
        << '\n';
    return v.passed() ? kExitOk : kExitVerificationFailed;
  }

  const GridSpec grid = o.grid.resolve({});
  const EquilibriumReport report = solve_report(mode, config, grid);
  const bool ok = verify_stackelberg(config, *report.signals, grid);
  const StackelbergGridOptimum best = stackelberg_grid_optimum(config, grid);
  out << (ok ? "PASS" : "FAIL") << ' ' << to_string(mode) << ' ' << report.tag
      << ": committed risk " << fmt(committed_transmitter_risk(config, *report.signals, grid))
      << ", grid optimum " << fmt(best.transmitter_risk) << '\n';
  return ok ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary Gaussian signaling games: team, Stackelberg and Nash equilibria"};
  app.name("bsig");
  app.require_subcommand(1);
  Options o;

  auto* solve = app.add_subcommand("solve", "Solve one equilibrium concept");
  solve->add_option("mode", o.mode, "team | stackelberg | nash")->required();
  add_source_options(solve, o.source);
  add_grid_options(solve, o.grid);
  solve->add_flag("--json", o.json, "Emit the full report as JSON");
  solve->add_option("--out", o.out_path, "Write the report to a file");

  auto* curve = app.add_subcommand("curve", "Risk versus normalized distance as CSV");
  add_source_options(curve, o.source);
  curve->add_option("--points", o.points, "Number of grid distances in (0, d_max]")
      ->capture_default_str();
  curve->add_option("--out", o.out_path, "Write CSV to a file");

  auto* dynamics = app.add_subcommand("dynamics", "Best-response dynamics trajectory as CSV");
  add_source_options(dynamics, o.source);
  dynamics->add_option("--max-iters", o.max_iters, "Iteration cap")->capture_default_str();
  dynamics
      ->add_option("--init", o.init, "Initial receiver rule (above:T, below:T, always0, always1)")
      ->capture_default_str();
  dynamics->add_option("--out", o.out_path, "Write CSV to a file");

  auto* robust = app.add_subcommand("robustness", "Perturbation analysis around a team config");
  add_source_options(robust, o.source);
  robust->add_option("--target", o.target, "nash | stackelberg")->capture_default_str();
  robust->add_option("--eps-bound", o.eps_bound,
                     "Max-norm bound (default: nash half the smallest receiver cost "
                     "difference, stackelberg 1e-3)");
  robust->add_option("--samples", o.samples, "Random perturbations to draw")
      ->capture_default_str();
  robust->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
  robust->add_option("--out", o.out_path, "Write the record CSV to a file");

  auto* verify =
      app.add_subcommand("verify", "Check the analytic solution with the brute-force oracle");
  verify->add_option("mode", o.mode, "team | stackelberg | nash")->required();
  add_source_options(verify, o.source);
  add_grid_options(verify, o.grid);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (o.source.dump) {
      out << dump_config(resolve_config(o.source)) << '\n';
      return kExitOk;
    }
    if (solve->parsed()) return cmd_solve(o, out);
    if (curve->parsed()) return cmd_curve(o, out);
    if (dynamics->parsed()) return cmd_dynamics(o, out);
    if (robust->parsed()) return cmd_robustness(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace bsig::cli
