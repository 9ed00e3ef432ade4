#include "experiment_config.hpp"

#include <fstream>
#include <sstream>

namespace murmur::cli {

namespace {
std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}
}  // namespace

Config Config::from_file(const std::string& path) {
    Config c;
    if (path.empty()) return c;
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError("config: expected key=value, got '" + line + "'");
        c.values_[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return c;
}

void Config::apply_override(const std::string& keyval) {
    const auto eq = keyval.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + keyval + "'");
    values_[trim(keyval.substr(0, eq))] = trim(keyval.substr(eq + 1));
}

std::string Config::get_string(const std::string& key, const std::string& fallback) const {
    mark_known(key);
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key, double fallback) const {
    mark_known(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const double v = std::stod(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ConfigError("config: key '" + key + "' is not a number: " + it->second);
    }
}

int64_t Config::get_int(const std::string& key, int64_t fallback) const {
    mark_known(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    try {
        std::size_t pos = 0;
        const int64_t v = std::stoll(it->second, &pos);
        if (pos != it->second.size()) throw std::invalid_argument("");
        return v;
    } catch (...) {
        throw ConfigError("config: key '" + key + "' is not an integer: " + it->second);
    }
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    mark_known(key);
    const auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    if (it->second == "1" || it->second == "true" || it->second == "yes") return true;
    if (it->second == "0" || it->second == "false" || it->second == "no") return false;
    throw ConfigError("config: key '" + key + "' is not a boolean: " + it->second);
}

double Config::require_double(const std::string& key) const {
    if (!has(key)) throw ConfigError("config: missing required key '" + key + "'");
    return get_double(key, 0.0);
}

int64_t Config::require_int(const std::string& key) const {
    if (!has(key)) throw ConfigError("config: missing required key '" + key + "'");
    return get_int(key, 0);
}

void Config::mark_known(const std::string& key) const { touched_[key] = true; }

std::vector<std::string> Config::unknown_keys() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : values_)
        if (!touched_.count(k)) out.push_back(k);
    return out;
}

}  // namespace murmur::cli
