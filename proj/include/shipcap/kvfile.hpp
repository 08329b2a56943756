#pragma once
/*
  Plain-text key/value files used for scenario and demand inputs:

    # comment
    name = lng_first
    base_annual_pool_cgt = 3993414
    lng_newbuild_tankers = 2050:171
    knots = 2030:210, 2050:530

  Keys are unique. Series values are comma-separated year:value pairs.
*/

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shipcap/error.hpp"

namespace shipcap {

class KeyValueFile {
 public:
  static KeyValueFile parse(std::istream& in, const std::string& origin = "<input>") {
    KeyValueFile kv;
    kv.origin_ = origin;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      auto hash = line.find('#');
      std::string_view body(line.data(), hash == std::string::npos ? line.size() : hash);
      body = trim(body);
      if (body.empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string_view::npos) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": expected 'key = value'");
      }
      const std::string key(trim(body.substr(0, eq)));
      const std::string value(trim(body.substr(eq + 1)));
      if (key.empty()) throw ConfigError(origin + ":" + std::to_string(lineno) + ": empty key");
      if (!kv.values_.emplace(key, value).second) {
        throw ConfigError(origin + ":" + std::to_string(lineno) + ": duplicate key '" + key + "'");
      }
    }
    return kv;
  }

  static KeyValueFile load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "'");
    return parse(in, path);
  }

  static KeyValueFile from_string(const std::string& text, const std::string& origin = "<string>") {
    std::istringstream in(text);
    return parse(in, origin);
  }

  bool has(const std::string& key) const { return values_.contains(key); }
  const std::string& origin() const { return origin_; }
  const std::map<std::string, std::string>& values() const { return values_; }

  const std::string& get(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw ConfigError(origin_ + ": missing key '" + key + "'");
    return it->second;
  }

  std::string get_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
  }

  double get_double(const std::string& key) const { return to_double(get(key), key); }
  double get_double_or(const std::string& key, double fallback) const {
    return has(key) ? get_double(key) : fallback;
  }
  int get_int(const std::string& key) const {
    const double v = get_double(key);
    if (v != static_cast<int>(v)) throw ConfigError(origin_ + ": '" + key + "' must be an integer");
    return static_cast<int>(v);
  }
  int get_int_or(const std::string& key, int fallback) const { return has(key) ? get_int(key) : fallback; }

  std::map<int, double> get_series(const std::string& key) const {
    std::map<int, double> out;
    const std::string& text = get(key);
    std::string_view rest(text);
    if (trim(rest).empty() || trim(rest) == "none") return out;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = trim(rest.substr(0, comma));
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      const auto colon = item.find(':');
      if (colon == std::string_view::npos) {
        throw ConfigError(origin_ + ": '" + key + "' entries must be year:value");
      }
      const double year = to_double(std::string(trim(item.substr(0, colon))), key);
      const double value = to_double(std::string(trim(item.substr(colon + 1))), key);
      if (!out.emplace(static_cast<int>(year), value).second) {
        throw ConfigError(origin_ + ": '" + key + "' repeats year " + std::to_string(static_cast<int>(year)));
      }
    }
    return out;
  }
  std::map<int, double> get_series_or_empty(const std::string& key) const {
    return has(key) ? get_series(key) : std::map<int, double>{};
  }

 private:
  static std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
  }

  double to_double(const std::string& s, const std::string& key) const {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || ptr != end) throw ConfigError(origin_ + ": '" + key + "' is not numeric: '" + s + "'");
    return v;
  }

  std::string origin_;
  std::map<std::string, std::string> values_;
};

}  // namespace shipcap
