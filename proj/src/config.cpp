#include "ncp/config.hpp"

#include <fstream>
#include <sstream>

namespace ncp {

namespace {

const char* kKnownKeys[] = {"mu", "kappa", "rho", "gamma", "hbar",
                            "energy_abs", "alpha_theta", "alpha_phi"};

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

}  // namespace

std::map<std::string, double> parse_key_values(std::istream& in) {
    std::map<std::string, double> kv;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected `key = value`");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        bool known = false;
        for (const char* k : kKnownKeys) known = known || key == k;
        if (!known) throw ConfigError("line " + std::to_string(lineno) + ": unknown key `" + key + "`");
        try {
            std::size_t pos = 0;
            const double v = std::stod(value, &pos);
            if (pos != value.size()) throw std::invalid_argument(value);
            kv[key] = v;
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(lineno) + ": bad numeric value `" + value + "`");
        }
    }
    return kv;
}

ModelConfig config_from_map(const std::map<std::string, double>& kv) {
    for (const char* k : {"mu", "kappa", "energy_abs", "alpha_theta", "alpha_phi"})
        if (!kv.count(k)) throw ConfigError(std::string("missing required key `") + k + "`");
    ModelConfig cfg;
    auto get = [&kv](const char* k, double dflt) {
        auto it = kv.find(k);
        return it == kv.end() ? dflt : it->second;
    };
    cfg.params.mu = kv.at("mu");
    cfg.params.kappa = kv.at("kappa");
    cfg.params.rho = get("rho", 0.0);
    cfg.params.gamma = get("gamma", 0.0);
    cfg.params.hbar = get("hbar", 1.0);
    cfg.consts.energy_abs = kv.at("energy_abs");
    cfg.consts.alpha_theta = kv.at("alpha_theta");
    cfg.consts.alpha_phi = kv.at("alpha_phi");
    return cfg;
}

ModelConfig parse_config(std::istream& in) { return config_from_map(parse_key_values(in)); }

ModelConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in);
}

}  // namespace ncp
