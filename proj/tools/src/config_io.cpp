#include "config_io.hpp"

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "bsig/stackelberg.hpp"
#include "json.hpp"

namespace bsig::cli {

namespace {

using nlohmann::json;

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) throw Error(path + ": expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) throw Error(path + "." + key + ": missing");
  return *it;
}

double number(const json& v, const std::string& path) {
  if (!v.is_number()) throw Error(path + ": expected a number");
  return v.get<double>();
}

std::vector<double> numbers(const json& v, std::size_t n, const std::string& path) {
  if (!v.is_array() || v.size() != n) {
    throw Error(path + ": expected an array of " + std::to_string(n) + " numbers");
  }
  std::vector<double> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(number(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

AgentSpec parse_agent(const json& root, const char* name) {
  const json& obj = member(root, name, "config");
  const std::string path = name;
  const auto pr = numbers(member(obj, "priors", path), 2, path + ".priors");
  const auto c = numbers(member(obj, "costs", path), 4, path + ".costs");
  return {{pr[0], pr[1]}, {c[0], c[1], c[2], c[3]}};
}

json agent_json(const AgentSpec& a) {
  return {{"priors", {a.priors.pi0, a.priors.pi1}},
          {"costs", {a.costs.c00, a.costs.c01, a.costs.c10, a.costs.c11}}};
}

template <class T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

}  // namespace

GameConfig parse_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(std::string("config: invalid JSON: ") + e.what());
  }
  if (!root.is_object()) throw Error("config: expected a JSON object");
  GameConfig config;
  config.transmitter = parse_agent(root, "transmitter");
  config.receiver = parse_agent(root, "receiver");
  const json& ch = member(root, "channel", "config");
  config.p0 = number(member(ch, "p0", "channel"), "channel.p0");
  config.p1 = number(member(ch, "p1", "channel"), "channel.p1");
  config.sigma = number(member(ch, "sigma", "channel"), "channel.sigma");
  config.validate();
  return config;
}

GameConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string dump_config(const GameConfig& config) {
  const json root = {{"transmitter", agent_json(config.transmitter)},
                     {"receiver", agent_json(config.receiver)},
                     {"channel", {{"p0", config.p0}, {"p1", config.p1}, {"sigma", config.sigma}}}};
  return root.dump(2);
}

std::string report_to_json(const EquilibriumReport& r) {
  json j;
  j["mode"] = to_string(r.mode);
  j["tag"] = r.tag;
  j["informative"] = r.informative;
  j["tau"] = std::isfinite(r.tau) ? json(r.tau) : json(std::to_string(r.tau));
  j["zeta"] = r.zeta;
  j["d_max"] = r.d_max;
  j["k0"] = optional_json(r.k0);
  j["k1"] = optional_json(r.k1);
  j["xi0"] = optional_json(r.xi0);
  j["xi1"] = optional_json(r.xi1);
  j["d_star"] = optional_json(r.d_star);
  j["cell"] = r.cell.empty() ? json(nullptr) : json(r.cell);
  if (r.signals) {
    j["signals"] = {{"s0", r.signals->s0}, {"s1", r.signals->s1}};
  } else {
    j["signals"] = nullptr;
  }
  if (r.rule) {
    j["rule"] = {{"kind", to_string(r.rule->kind)},
                 {"threshold", r.rule->is_threshold() ? json(r.rule->threshold)
                                                      : json(nullptr)}};
  } else {
    j["rule"] = nullptr;
  }
  j["transmitter_risk"] = optional_json(r.transmitter_risk);
  j["receiver_risk"] = optional_json(r.receiver_risk);
  if (r.errors) {
    j["error_probabilities"] = {
        {"p00", r.errors->p00},
        {"p01", r.errors->p01},
        {"p10", r.errors->p10},
        {"p11", r.errors->p11}};
  } else {
    j["error_probabilities"] = nullptr;
  }
  return j.dump(2);
}

}  // namespace bsig::cli
