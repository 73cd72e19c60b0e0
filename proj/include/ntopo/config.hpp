#pragma once

#include <map>
#include <string>
#include <vector>

namespace ntopo {

// Flat "section.key = value" text config; '#' starts a comment. CLI flags
// override file values key for key.
class ConfigMap {
public:
    static ConfigMap from_file(const std::string& path);

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    bool has(const std::string& key) const { return values_.count(key) > 0; }

    std::string get(const std::string& key, const std::string& fallback) const;
    long get_int(const std::string& key, long fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    const std::map<std::string, std::string>& values() const { return values_; }
    std::string canonical() const;  // sorted key=value lines

private:
    std::map<std::string, std::string> values_;
};

struct ConfigKey {
    const char* name;
    const char* help;
};

// Every recognized key, for CLI flag registration and validation.
const std::vector<ConfigKey>& config_keys();

}  // namespace ntopo
