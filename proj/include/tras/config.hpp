#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace tras {

// Flat `key = value` configuration file. Lines starting with '#' are
// comments; keys are dotted lowercase (`plant.j_v`). Unknown keys are
// kept so experiment configs can carry module-specific sections.
class KeyValueConfig {
public:
    KeyValueConfig() = default;

    static KeyValueConfig from_file(const std::string& path);
    static KeyValueConfig from_string(const std::string& text);

    bool has(const std::string& key) const { return values_.count(key) != 0; }

    // Typed getters. The no-default overloads throw ConfigError when the
    // key is missing; all of them throw on unparseable values.
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    std::int64_t get_int(const std::string& key) const;
    std::int64_t get_int(const std::string& key, std::int64_t fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::string get_string(const std::string& key, const std::string& fallback) const;

    void set(const std::string& key, const std::string& value) { values_[key] = value; }
    void set_double(const std::string& key, double value);
    void set_int(const std::string& key, std::int64_t value);

    // Canonical text: sorted keys, one `key = value` per line. The config
    // hash embedded in every output artifact is FNV-1a 64 over this text.
    std::string canonical_text() const;
    std::uint64_t hash() const;

    const std::map<std::string, std::string>& values() const { return values_; }

private:
    std::map<std::string, std::string> values_;
};

std::uint64_t fnv1a64(const std::string& text);

}  // namespace tras
