#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "sincdens/errors.hpp"

namespace sincdens {

// Flat key-value experiment config: one `section.key = value` per line,
// '#' comments, insertion order preserved for serialization.
class Config {
public:
    Config() = default;

    static Config parse_file(const std::string& path);
    static Config parse_string(const std::string& text, const std::string& origin = "<string>");

    std::string serialize() const;

    bool has(const std::string& key) const;
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double_or(const std::string& key, double fallback) const;
    long long get_int(const std::string& key) const;
    long long get_int_or(const std::string& key, long long fallback) const;
    std::uint64_t get_seed(const std::string& key) const;
    bool get_bool_or(const std::string& key, bool fallback) const;
    std::vector<double> get_double_list(const std::string& key) const;
    std::vector<std::size_t> get_count_list(const std::string& key) const;

    void set(const std::string& key, const std::string& value);

    // Unknown keys are config errors; diagnostics name the offending key.
    void require_known(const std::set<std::string>& allowed) const;
    void require_present(const std::vector<std::string>& keys) const;

    // FNV-1a over the canonical serialization; stamped into output metadata.
    std::uint64_t hash() const;

    const std::vector<std::string>& keys() const { return order_; }

private:
    std::map<std::string, std::string> values_;
    std::vector<std::string> order_;
    std::string origin_ = "<empty>";
    std::map<std::string, int> lines_;

    [[noreturn]] void fail(const std::string& key, const std::string& what) const;
};

}  // namespace sincdens
