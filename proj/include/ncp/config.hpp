#pragma once

#include <iosfwd>
#include <map>
#include <string>

#include "ncp/types.hpp"

namespace ncp {

/// Thrown for malformed config files / missing keys (CLI exit code 2).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ModelConfig {
    PhysicalParams params;
    SeparationConstants consts;
};

/// Parses `key = value` lines ('#' starts a comment, blank lines ignored).
/// Recognised keys: mu, kappa, rho, gamma, hbar, energy_abs, alpha_theta, alpha_phi.
/// mu, kappa, energy_abs, alpha_theta, alpha_phi are required; the rest default
/// (rho = gamma = 0, hbar = 1).
ModelConfig parse_config(std::istream& in);
ModelConfig load_config(const std::string& path);

/// Raw key-value view, for callers that need to overlay flags.
std::map<std::string, double> parse_key_values(std::istream& in);
ModelConfig config_from_map(const std::map<std::string, double>& kv);

}  // namespace ncp
