#include "sincdens/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace sincdens {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) parts.push_back(trim(item));
    return parts;
}

}  // namespace

Config Config::parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw config_error("cannot open config file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_string(buf.str(), path);
}

Config Config::parse_string(const std::string& text, const std::string& origin) {
    Config cfg;
    cfg.origin_ = origin;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        const std::string stripped = trim(line);
        if (stripped.empty() || stripped.front() == '#') continue;
        const auto eq = stripped.find('=');
        if (eq == std::string::npos) {
            throw config_error(origin + ":" + std::to_string(lineno) +
                               ": expected 'key = value', got '" + stripped + "'");
        }
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty()) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": empty key");
        }
        if (cfg.values_.count(key)) {
            throw config_error(origin + ":" + std::to_string(lineno) + ": duplicate key '" +
                               key + "'");
        }
        cfg.values_[key] = value;
        cfg.order_.push_back(key);
        cfg.lines_[key] = lineno;
    }
    return cfg;
}

std::string Config::serialize() const {
    std::ostringstream out;
    for (const auto& key : order_) out << key << " = " << values_.at(key) << "\n";
    return out.str();
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

void Config::fail(const std::string& key, const std::string& what) const {
    auto it = lines_.find(key);
    std::string where = origin_;
    if (it != lines_.end()) where += ":" + std::to_string(it->second);
    throw config_error(where + ": field '" + key + "': " + what);
}

const std::string& Config::get(const std::string& key) const {
    auto it = values_.find(key);
    if (it == values_.end()) {
        throw config_error(origin_ + ": missing required field '" + key + "'");
    }
    return it->second;
}

std::string Config::get_or(const std::string& key, const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_double(const std::string& key) const {
    const std::string& s = get(key);
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) fail(key, "trailing characters in number '" + s + "'");
        return v;
    } catch (const config_error&) {
        throw;
    } catch (const std::exception&) {
        fail(key, "not a number: '" + s + "'");
    }
}

double Config::get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
}

long long Config::get_int(const std::string& key) const {
    const std::string& s = get(key);
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) fail(key, "not an integer: '" + s + "'");
    return v;
}

long long Config::get_int_or(const std::string& key, long long fallback) const {
    return has(key) ? get_int(key) : fallback;
}

std::uint64_t Config::get_seed(const std::string& key) const {
    const long long v = get_int(key);
    if (v < 0) fail(key, "seed must be >= 0");
    return static_cast<std::uint64_t>(v);
}

bool Config::get_bool_or(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string& s = get(key);
    if (s == "true" || s == "1" || s == "yes") return true;
    if (s == "false" || s == "0" || s == "no") return false;
    fail(key, "not a boolean: '" + s + "'");
}

std::vector<double> Config::get_double_list(const std::string& key) const {
    std::vector<double> out;
    for (const auto& part : split_commas(get(key))) {
        try {
            out.push_back(std::stod(part));
        } catch (const std::exception&) {
            fail(key, "not a number in list: '" + part + "'");
        }
    }
    if (out.empty()) fail(key, "empty list");
    return out;
}

std::vector<std::size_t> Config::get_count_list(const std::string& key) const {
    std::vector<std::size_t> out;
    for (const auto& part : split_commas(get(key))) {
        long long v = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
        if (ec != std::errc{} || ptr != part.data() + part.size() || v < 0)
            fail(key, "not a count in list: '" + part + "'");
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) fail(key, "empty list");
    return out;
}

void Config::set(const std::string& key, const std::string& value) {
    if (!values_.count(key)) order_.push_back(key);
    values_[key] = value;
}

void Config::require_known(const std::set<std::string>& allowed) const {
    for (const auto& key : order_) {
        if (!allowed.count(key)) fail(key, "unknown key");
    }
}

void Config::require_present(const std::vector<std::string>& keys) const {
    for (const auto& key : keys) (void)get(key);
}

std::uint64_t Config::hash() const {
    // canonical form: sorted key=value lines
    std::uint64_t h = 1469598103934665603ULL;
    auto mix = [&h](const std::string& s) {
        for (unsigned char c : s) {
            h ^= c;
            h *= 1099511628211ULL;
        }
    };
    for (const auto& [key, value] : values_) {
        mix(key);
        mix("=");
        mix(value);
        mix("\n");
    }
    return h;
}

}  // namespace sincdens
