#pragma once

#include <map>
#include <stdexcept>
#include <optional>
#include <string>
#include <vector>

namespace murmur::cli {

/// Flat key=value configuration: file plus command-line overrides.
/// Unknown keys are rejected at validation time by the experiment runners.
class Config {
public:
    static Config from_file(const std::string& path);
    void apply_override(const std::string& keyval);  // "key=value"

    bool has(const std::string& key) const { return values_.count(key) > 0; }
    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key, double fallback) const;
    int64_t get_int(const std::string& key, int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    /// Same, but the key must be present.
    double require_double(const std::string& key) const;
    int64_t require_int(const std::string& key) const;

    const std::map<std::string, std::string>& values() const { return values_; }
    void mark_known(const std::string& key) const;
    std::vector<std::string> unknown_keys() const;

private:
    std::map<std::string, std::string> values_;
    mutable std::map<std::string, bool> touched_;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace murmur::cli
