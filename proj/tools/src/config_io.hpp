#ifndef BSIG_TOOLS_CONFIG_IO_HPP_
#define BSIG_TOOLS_CONFIG_IO_HPP_

#include <string>

#include "bsig/report.hpp"
#include "bsig/types.hpp"

namespace bsig::cli {

/// Parses
///   {"transmitter": {"priors": [pi0, pi1], "costs": [c00, c01, c10, c11]},
///    "receiver": {...same shape...},
///    "channel": {"p0": P0, "p1": P1, "sigma": sigma}}
/// into a validated GameConfig.  Errors name the offending field path.
GameConfig parse_config(const std::string& text);
GameConfig load_config_file(const std::string& path);

/// Inverse of parse_config (numbers keep full round-trip precision).
std::string dump_config(const GameConfig& config);

std::string report_to_json(const EquilibriumReport& report);

}  // namespace bsig::cli

#endif  // BSIG_TOOLS_CONFIG_IO_HPP_
