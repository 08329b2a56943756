#pragma once
/*
  Report bundles: labeled tables, plot-ready series, the full scenario result
  as JSON, a comparison against published reference values, and provenance.
  Everything is written without timestamps so identical inputs give
  byte-identical output.
*/

#include <fmt/format.h>
#include <openssl/evp.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "shipcap/error.hpp"
#include "shipcap/scenario.hpp"

#ifndef SHIPCAP_VERSION
#define SHIPCAP_VERSION "0.0.0"
#endif

namespace shipcap {

inline constexpr const char* kEngineVersion = SHIPCAP_VERSION;

// ---------------------------------------------------------------------------
// Hashing

inline std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("SHA-256 digest failed");
  }
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) out += fmt::format("{:02x}", digest[i]);
  return out;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string sha256_file(const std::filesystem::path& path) { return sha256_hex(read_file(path)); }

// ---------------------------------------------------------------------------
// JSON mapping of the engine types

namespace detail {

template <typename V>
nlohmann::json year_map_to_json(const std::map<int, V>& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [y, v] : m) j[std::to_string(y)] = v;
  return j;
}

template <typename V>
std::map<int, V> year_map_from_json(const nlohmann::json& j) {
  std::map<int, V> out;
  for (const auto& [k, v] : j.items()) out[std::stoi(k)] = v.template get<V>();
  return out;
}

inline Carrier carrier_from_string(const std::string& s) {
  for (auto c : {Carrier::lng, Carrier::lh2, Carrier::lnh3, Carrier::lnh3_small}) {
    if (to_string(c) == s) return c;
  }
  throw SchemaError("unknown carrier '" + s + "'");
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const TankerSpec& s) {
  j = {{"carrier", std::string(to_string(s.carrier))},
       {"cargo_capacity_m3", s.cargo_capacity_m3},
       {"cgt", s.cgt},
       {"lh2eq_per_tanker_m3", s.lh2eq_per_tanker_m3},
       {"first_delivery_year", s.first_delivery_year},
       {"construction_years", s.construction_years}};
}
inline void from_json(const nlohmann::json& j, TankerSpec& s) {
  s.carrier = detail::carrier_from_string(j.at("carrier").get<std::string>());
  j.at("cargo_capacity_m3").get_to(s.cargo_capacity_m3);
  j.at("cgt").get_to(s.cgt);
  j.at("lh2eq_per_tanker_m3").get_to(s.lh2eq_per_tanker_m3);
  j.at("first_delivery_year").get_to(s.first_delivery_year);
  j.at("construction_years").get_to(s.construction_years);
}

inline void to_json(nlohmann::json& j, const WindowResult& w) {
  const auto& c = w.window;
  const auto& b = w.bounds;
  j = {{"end_year", c.end_year},
       {"years_lh2", c.years_lh2},
       {"years_lnh3", c.years_lnh3},
       {"deduction_lh2_cgt", c.deduction_lh2},
       {"deduction_lnh3_cgt", c.deduction_lnh3},
       {"raw_pool_lh2_cgt", c.raw_pool_lh2},
       {"raw_pool_lnh3_cgt", c.raw_pool_lnh3},
       {"pool_lh2_cgt", c.pool_lh2},
       {"pool_lnh3_cgt", c.pool_lnh3},
       {"max_lh2_capacity_m3", b.max_lh2_capacity},
       {"max_lnh3_capacity_m3", b.max_lnh3_capacity},
       {"max_lh2_count", b.max_lh2_count},
       {"max_lnh3_count", b.max_lnh3_count}};
}
inline void from_json(const nlohmann::json& j, WindowResult& w) {
  auto& c = w.window;
  auto& b = w.bounds;
  j.at("end_year").get_to(c.end_year);
  j.at("years_lh2").get_to(c.years_lh2);
  j.at("years_lnh3").get_to(c.years_lnh3);
  j.at("deduction_lh2_cgt").get_to(c.deduction_lh2);
  j.at("deduction_lnh3_cgt").get_to(c.deduction_lnh3);
  j.at("raw_pool_lh2_cgt").get_to(c.raw_pool_lh2);
  j.at("raw_pool_lnh3_cgt").get_to(c.raw_pool_lnh3);
  j.at("pool_lh2_cgt").get_to(c.pool_lh2);
  j.at("pool_lnh3_cgt").get_to(c.pool_lnh3);
  j.at("max_lh2_capacity_m3").get_to(b.max_lh2_capacity);
  j.at("max_lnh3_capacity_m3").get_to(b.max_lnh3_capacity);
  j.at("max_lh2_count").get_to(b.max_lh2_count);
  j.at("max_lnh3_count").get_to(b.max_lnh3_count);
}

inline void to_json(nlohmann::json& j, const CumulativeBounds& c) {
  j = {{"year", c.year}, {"lower_m3", c.lower}, {"upper_m3", c.upper}};
}
inline void from_json(const nlohmann::json& j, CumulativeBounds& c) {
  j.at("year").get_to(c.year);
  j.at("lower_m3").get_to(c.lower);
  j.at("upper_m3").get_to(c.upper);
}

inline void to_json(nlohmann::json& j, const MinLnh3& m) {
  if (m.feasible) {
    j = m.count;
  } else {
    j = "infeasible";
  }
}
inline void from_json(const nlohmann::json& j, MinLnh3& m) {
  if (j.is_string()) {
    if (j.get<std::string>() != "infeasible") throw SchemaError("min_lnh3 must be a count or \"infeasible\"");
    m = {false, 0};
  } else {
    m = {true, j.get<long>()};
  }
}

inline void to_json(nlohmann::json& j, const BottleneckInterval& b) {
  j = {{"shortage", b.shortage}, {"start", b.start}};
  j["resolve_crossing"] = b.resolve_crossing ? nlohmann::json(*b.resolve_crossing) : nlohmann::json(nullptr);
  j["resolve_year"] = b.resolve_year ? nlohmann::json(*b.resolve_year) : nlohmann::json(nullptr);
}
inline void from_json(const nlohmann::json& j, BottleneckInterval& b) {
  j.at("shortage").get_to(b.shortage);
  j.at("start").get_to(b.start);
  b.resolve_crossing = j.at("resolve_crossing").is_null() ? std::nullopt
                                                           : std::optional<double>(j.at("resolve_crossing").get<double>());
  b.resolve_year = j.at("resolve_year").is_null() ? std::nullopt : std::optional<int>(j.at("resolve_year").get<int>());
}

inline void to_json(nlohmann::json& j, const ScenarioResult& r) {
  j = {{"name", r.name},
       {"kind", std::string(to_string(r.kind))},
       {"annual_pool_cgt", r.annual_pool_cgt},
       {"lh2_spec", r.lh2_spec},
       {"lnh3_spec", r.lnh3_spec},
       {"windows", r.windows},
       {"cumulative", r.cumulative},
       {"demand_m3", detail::year_map_to_json(r.demand)},
       {"gap_m3", detail::year_map_to_json(r.gap)},
       {"min_lnh3", detail::year_map_to_json(r.min_lnh3)},
       {"min_lnh3_two_pool", detail::year_map_to_json(r.min_lnh3_two_pool)},
       {"bottleneck_lh2_only", r.bottleneck_lh2_only}};
}
inline void from_json(const nlohmann::json& j, ScenarioResult& r) {
  j.at("name").get_to(r.name);
  const auto kind = parse_scenario_kind(j.at("kind").get<std::string>());
  if (!kind) throw SchemaError("unknown scenario kind in result");
  r.kind = *kind;
  j.at("annual_pool_cgt").get_to(r.annual_pool_cgt);
  j.at("lh2_spec").get_to(r.lh2_spec);
  j.at("lnh3_spec").get_to(r.lnh3_spec);
  j.at("windows").get_to(r.windows);
  j.at("cumulative").get_to(r.cumulative);
  r.demand = detail::year_map_from_json<double>(j.at("demand_m3"));
  r.gap = detail::year_map_from_json<double>(j.at("gap_m3"));
  r.min_lnh3 = detail::year_map_from_json<MinLnh3>(j.at("min_lnh3"));
  r.min_lnh3_two_pool = detail::year_map_from_json<MinLnh3>(j.at("min_lnh3_two_pool"));
  j.at("bottleneck_lh2_only").get_to(r.bottleneck_lh2_only);
}

// ---------------------------------------------------------------------------
// Tables and series

struct Table {
  std::string id;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  bool operator==(const Table&) const = default;
};

struct SeriesPoint {
  double year = 0.0;
  double value = 0.0;
  std::string label;

  bool operator==(const SeriesPoint&) const = default;
};

struct Figure {
  std::string id;
  std::string title;
  std::vector<SeriesPoint> points;

  bool operator==(const Figure&) const = default;
};

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cells[i]);
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

inline std::string to_csv(const Figure& f) {
  std::string out = "year,value,series\n";
  for (const auto& p : f.points) out += fmt::format("{:.2f},{:.1f},{}\n", p.year, p.value, csv_escape(p.label));
  return out;
}

inline std::string fmt_fixed(double v, int decimals) {
  if (v == 0.0) v = 0.0;  // no "-0.0"
  return fmt::format("{:.{}f}", v, decimals);
}

inline std::string fmt_min(const MinLnh3& m) { return m.feasible ? std::to_string(m.count) : "infeasible"; }

// Per-carrier output when the whole annual pool goes to one carrier.
inline Table effort_table(double annual_pool_cgt, const std::vector<TankerSpec>& specs) {
  Table t{"effort",
          "Annual output per carrier with the whole yard pool on one carrier",
          {"carrier", "cargo_capacity_m3", "cgt_per_tanker", "max_tankers_per_year", "cargo_per_year_m3",
           "lh2eq_per_year_m3"},
          {}};
  for (const auto& s : specs) {
    const auto o = max_tankers(annual_pool_cgt, s);
    t.rows.push_back({std::string(to_string(s.carrier)), fmt_fixed(s.cargo_capacity_m3, 0), fmt_fixed(s.cgt, 1),
                      std::to_string(o.count), fmt_fixed(o.cargo_total_m3, 0), fmt_fixed(o.lh2eq_total_m3, 0)});
  }
  return t;
}

inline Table windows_table(const ScenarioResult& r) {
  Table t{"windows",
          "Shipyard capacity and carrier production per five-year window (" + r.name + ")",
          {"end_year", "years_lh2", "years_lnh3", "deduction_lh2_cgt", "deduction_lnh3_cgt", "raw_pool_lh2_cgt",
           "raw_pool_lnh3_cgt", "pool_lh2_cgt", "pool_lnh3_cgt", "max_lh2_capacity_m3", "max_lnh3_capacity_m3",
           "max_lh2_count", "max_lnh3_count", "cumulative_lower_m3", "cumulative_upper_m3", "demand_m3", "gap_m3",
           "min_lnh3", "min_lnh3_two_pool"},
          {}};
  for (std::size_t i = 0; i < r.windows.size(); ++i) {
    const auto& w = r.windows[i];
    const int y = w.window.end_year;
    t.rows.push_back({std::to_string(y), std::to_string(w.window.years_lh2), std::to_string(w.window.years_lnh3),
                      fmt_fixed(w.window.deduction_lh2, 1), fmt_fixed(w.window.deduction_lnh3, 1),
                      fmt_fixed(w.window.raw_pool_lh2, 1), fmt_fixed(w.window.raw_pool_lnh3, 1),
                      fmt_fixed(w.window.pool_lh2, 1), fmt_fixed(w.window.pool_lnh3, 1),
                      fmt_fixed(w.bounds.max_lh2_capacity, 1), fmt_fixed(w.bounds.max_lnh3_capacity, 1),
                      std::to_string(w.bounds.max_lh2_count), std::to_string(w.bounds.max_lnh3_count),
                      fmt_fixed(r.cumulative[i].lower, 1), fmt_fixed(r.cumulative[i].upper, 1),
                      fmt_fixed(r.demand.at(y), 1), fmt_fixed(r.gap.at(y), 1), fmt_min(r.min_lnh3.at(y)),
                      fmt_min(r.min_lnh3_two_pool.at(y))});
  }
  return t;
}

inline Table demand_table(const ScenarioResult& r) {
  Table t{"demand", "Hydrogen transport capacity demand (" + r.name + ")", {"year", "demand_m3"}, {}};
  for (const auto& [y, d] : r.demand) t.rows.push_back({std::to_string(y), fmt_fixed(d, 1)});
  return t;
}

// Cross-scenario gaps and minimum LNH3 counts at the given years.
inline Table gap_summary_table(const std::vector<ScenarioResult>& results, const std::vector<int>& years = {2030, 2035}) {
  Table t{"gap_summary", "All-LH2 capacity gap and minimum LNH3 tankers per scenario", {"scenario"}, {}};
  for (int y : years) t.header.push_back(fmt::format("min_lnh3_{}", y));
  for (int y : years) t.header.push_back(fmt::format("gap_{}_m3", y));
  for (const auto& r : results) {
    std::vector<std::string> row{r.name};
    for (int y : years) row.push_back(fmt_min(r.min_lnh3.at(y)));
    for (int y : years) row.push_back(fmt_fixed(r.gap.at(y), 1));
    t.rows.push_back(std::move(row));
  }
  return t;
}

struct Portfolio {
  double lnh3_fraction = 0.0;
  std::string label = "lh2-only";
};

inline Portfolio parse_portfolio(const std::string& s) {
  if (s == "lh2-only") return {0.0, s};
  if (s == "lnh3-only") return {1.0, s};
  if (s.rfind("mix:", 0) == 0) {
    double f = 0.0;
    try {
      std::size_t used = 0;
      f = std::stod(s.substr(4), &used);
      if (used != s.size() - 4) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw UsageError("portfolio fraction in '" + s + "' is not a number");
    }
    if (f < 0.0 || f > 1.0) throw UsageError("portfolio fraction must lie in [0, 1]");
    return {f, s};
  }
  throw UsageError("portfolio must be lh2-only, lnh3-only or mix:<fraction>");
}

// Yearly capacity envelope, demand, the chosen portfolio and its shortfall,
// interpolated linearly between window end years.
inline Figure capacity_figure(const ScenarioResult& r, const Portfolio& p) {
  Figure f{"capacity", "Cumulative hydrogen transport capacity and demand (" + r.name + ")", {}};
  if (r.cumulative.empty()) return f;
  auto lerp = [&](double y, auto value) {
    for (std::size_t i = 1; i < r.cumulative.size(); ++i) {
      const double y0 = r.cumulative[i - 1].year, y1 = r.cumulative[i].year;
      if (y <= y1) {
        const double t = (y - y0) / (y1 - y0);
        return value(i - 1) + t * (value(i) - value(i - 1));
      }
    }
    return value(r.cumulative.size() - 1);
  };
  const int first = r.cumulative.front().year, last = r.cumulative.back().year;
  for (int y = first; y <= last; ++y) {
    const double lo = lerp(y, [&](std::size_t i) { return r.cumulative[i].lower; });
    const double hi = lerp(y, [&](std::size_t i) { return r.cumulative[i].upper; });
    const double d = lerp(y, [&](std::size_t i) { return r.demand.at(r.cumulative[i].year); });
    const double cap = p.lnh3_fraction * hi + (1.0 - p.lnh3_fraction) * lo;
    f.points.push_back({double(y), lo, "lower_all_lh2"});
    f.points.push_back({double(y), hi, "upper_all_lnh3"});
    f.points.push_back({double(y), d, "demand"});
    f.points.push_back({double(y), cap, "portfolio_" + p.label});
    f.points.push_back({double(y), std::max(0.0, d - cap), "shortage_" + p.label});
  }
  return f;
}

// Solution frames at the first two window ends for the standard and the
// small ammonia carrier.
inline Figure small_lnh3_figure(const ScenarioResult& base, const ScenarioResult& small) {
  Figure f{"small_lnh3", "Solution space with standard and small LNH3 carriers (" + base.name + ")", {}};
  for (std::size_t i = 0; i < base.cumulative.size() && i < 2; ++i) {
    const double y = base.cumulative[i].year;
    f.points.push_back({y, base.cumulative[i].lower, "lower_all_lh2"});
    f.points.push_back({y, base.cumulative[i].upper, "upper_all_lnh3"});
    f.points.push_back({y, small.cumulative[i].upper, "upper_all_small_lnh3"});
    f.points.push_back({y, base.demand.at(base.cumulative[i].year), "demand"});
  }
  return f;
}

// ---------------------------------------------------------------------------
// Comparison with published values

struct Discrepancy {
  std::string scenario;
  std::string quantity;
  int year = 0;
  std::string published;
  std::string computed;
  // relative for continuous quantities, absolute for counts and years
  double deviation = 0.0;
  bool matches = true;

  bool operator==(const Discrepancy&) const = default;
};

struct ReferenceTolerances {
  double relative = 0.005;
  long count = 1;
  long min_lnh3 = 3;
  int year = 1;
};

namespace detail {

inline std::string fmt_ref(const nlohmann::json& v) {
  if (v.is_null()) return "none";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  return fmt::format("{}", v.get<double>());
}

inline void compare_relative(std::vector<Discrepancy>& out, const std::string& scen, const std::string& q, int y,
                             const nlohmann::json& pub, double computed, double tol) {
  const double p = pub.get<double>();
  const double dev = p == 0.0 ? std::abs(computed) : std::abs(computed - p) / std::abs(p);
  const bool ok = p == 0.0 ? std::abs(computed) < 1e-6 : dev <= tol;
  out.push_back({scen, q, y, fmt_ref(pub), fmt::format("{:.4f}", computed), dev, ok});
}

inline void compare_count(std::vector<Discrepancy>& out, const std::string& scen, const std::string& q, int y,
                          const nlohmann::json& pub, long computed, long tol) {
  const long p = pub.get<long>();
  const double dev = static_cast<double>(std::labs(computed - p));
  out.push_back({scen, q, y, fmt_ref(pub), std::to_string(computed), dev, std::labs(computed - p) <= tol});
}

}  // namespace detail

inline ReferenceTolerances reference_tolerances(const nlohmann::json& ref) {
  ReferenceTolerances t;
  if (ref.contains("tolerances")) {
    const auto& j = ref.at("tolerances");
    t.relative = j.value("relative", t.relative);
    t.count = j.value("count", t.count);
    t.min_lnh3 = j.value("min_lnh3", t.min_lnh3);
    t.year = j.value("year", t.year);
  }
  return t;
}

// Every published cell for the scenario, compared with the computed value.
// Pools are compared raw (before clamping), capacities in million m3 LH2eq.
inline std::vector<Discrepancy> compare_with_reference(const ScenarioResult& r, const nlohmann::json& ref,
                                                       const std::optional<SmallLnh3Variant>& small = std::nullopt) {
  std::vector<Discrepancy> out;
  if (!ref.contains("scenarios") || !ref.at("scenarios").contains(r.name)) return out;
  const auto tol = reference_tolerances(ref);
  const auto& s = ref.at("scenarios").at(r.name);
  std::map<int, const WindowResult*> by_year;
  for (const auto& w : r.windows) by_year[w.window.end_year] = &w;

  auto each = [&](const char* key, auto fn) {
    if (!s.contains(key)) return;
    for (const auto& [k, v] : s.at(key).items()) fn(std::stoi(k), v);
  };
  auto window = [&](int y) -> const WindowResult& {
    const auto it = by_year.find(y);
    if (it == by_year.end()) throw SchemaError("reference year " + std::to_string(y) + " is not a window end");
    return *it->second;
  };
  const std::string& n = r.name;
  each("pool_lh2", [&](int y, const nlohmann::json& v) {
    detail::compare_relative(out, n, "pool_lh2", y, v, window(y).window.raw_pool_lh2 / 1e6, tol.relative);
  });
  each("pool_lnh3", [&](int y, const nlohmann::json& v) {
    detail::compare_relative(out, n, "pool_lnh3", y, v, window(y).window.raw_pool_lnh3 / 1e6, tol.relative);
  });
  each("max_lh2_capacity", [&](int y, const nlohmann::json& v) {
    detail::compare_relative(out, n, "max_lh2_capacity", y, v, window(y).bounds.max_lh2_capacity / 1e6, tol.relative);
  });
  each("max_lnh3_capacity", [&](int y, const nlohmann::json& v) {
    detail::compare_relative(out, n, "max_lnh3_capacity", y, v, window(y).bounds.max_lnh3_capacity / 1e6,
                             tol.relative);
  });
  each("max_lh2_count", [&](int y, const nlohmann::json& v) {
    detail::compare_count(out, n, "max_lh2_count", y, v, window(y).bounds.max_lh2_count, tol.count);
  });
  each("max_lnh3_count", [&](int y, const nlohmann::json& v) {
    detail::compare_count(out, n, "max_lnh3_count", y, v, window(y).bounds.max_lnh3_count, tol.count);
  });
  each("demand", [&](int y, const nlohmann::json& v) {
    detail::compare_relative(out, n, "demand", y, v, r.demand.at(y) / 1e6, tol.relative);
  });
  each("gap", [&](int y, const nlohmann::json& v) {
    detail::compare_relative(out, n, "gap", y, v, r.gap.at(y) / 1e6, tol.relative);
  });
  each("min_lnh3", [&](int y, const nlohmann::json& v) {
    const auto& m = r.min_lnh3.at(y);
    if (v.is_string() || !m.feasible) {
      const bool ok = v.is_string() && !m.feasible;
      out.push_back({n, "min_lnh3", y, detail::fmt_ref(v), fmt_min(m), ok ? 0.0 : 1.0, ok});
    } else {
      detail::compare_count(out, n, "min_lnh3", y, v, m.count, tol.min_lnh3);
    }
  });
  if (small) {
    each("small_lnh3_shortage", [&](int y, const nlohmann::json& v) {
      const bool shortage = !small->feasible.at(y);
      const bool ok = shortage == v.get<bool>();
      out.push_back({n, "small_lnh3_shortage", y, detail::fmt_ref(v), shortage ? "true" : "false", ok ? 0.0 : 1.0, ok});
    });
  }
  if (s.contains("bottleneck_resolve_year")) {
    const auto& v = s.at("bottleneck_resolve_year");
    const auto& b = r.bottleneck_lh2_only;
    const std::string computed = b.resolve_year ? std::to_string(*b.resolve_year) : "none";
    if (v.is_null() || !b.resolve_year) {
      const bool ok = v.is_null() && !b.resolve_year;
      out.push_back({n, "bottleneck_resolve_year", 0, detail::fmt_ref(v), computed, ok ? 0.0 : 1.0, ok});
    } else {
      const int dy = std::abs(*b.resolve_year - v.get<int>());
      out.push_back({n, "bottleneck_resolve_year", 0, detail::fmt_ref(v), computed, double(dy), dy <= tol.year});
    }
  }
  return out;
}

inline Table discrepancy_table(const std::vector<Discrepancy>& ds) {
  Table t{"discrepancies",
          "Computed values against published reference values",
          {"scenario", "quantity", "year", "published", "computed", "deviation", "status"},
          {}};
  for (const auto& d : ds) {
    t.rows.push_back({d.scenario, d.quantity, d.year ? std::to_string(d.year) : "", d.published, d.computed,
                      fmt::format("{:.4f}", d.deviation), d.matches ? "match" : "discrepancy"});
  }
  return t;
}

inline nlohmann::json to_json_value(const Discrepancy& d) {
  return {{"scenario", d.scenario}, {"quantity", d.quantity}, {"year", d.year},       {"published", d.published},
          {"computed", d.computed}, {"deviation", d.deviation}, {"status", d.matches ? "match" : "discrepancy"}};
}

inline nlohmann::json load_reference(const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError("reference file '" + path.string() + "': " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Bundles

struct Provenance {
  std::string engine_version = kEngineVersion;
  // file label -> SHA-256
  std::map<std::string, std::string> inputs;
  std::map<std::string, std::string> settings;

  bool operator==(const Provenance&) const = default;
};

struct ReportBundle {
  std::string scenario;
  ScenarioResult result;
  Portfolio portfolio;
  BottleneckInterval portfolio_bottleneck;
  std::optional<SmallLnh3Variant> small_lnh3;
  std::vector<Table> tables;
  std::vector<Figure> figures;
  std::vector<Discrepancy> discrepancies;
  Provenance provenance;
};

inline ReportBundle make_bundle(const ScenarioConfig& config, const Portfolio& portfolio, bool with_small_lnh3,
                                const nlohmann::json* reference, Provenance provenance) {
  ReportBundle b;
  b.scenario = config.name;
  b.result = run_scenario(config);
  b.portfolio = portfolio;
  b.portfolio_bottleneck = bottleneck_interval(b.result, b.result.demand, portfolio.lnh3_fraction);
  if (with_small_lnh3) b.small_lnh3 = small_lnh3_variant(config);
  b.tables.push_back(effort_table(config.annual_pool(), {config.lng_spec, config.lh2_spec, config.lnh3_spec,
                                                         config.small_lnh3_spec}));
  b.tables.push_back(windows_table(b.result));
  b.tables.push_back(demand_table(b.result));
  b.figures.push_back(capacity_figure(b.result, portfolio));
  if (b.small_lnh3) {
    b.tables.push_back(windows_table(b.small_lnh3->result));
    b.tables.back().id = "windows_small_lnh3";
    b.figures.push_back(small_lnh3_figure(b.result, b.small_lnh3->result));
  }
  if (reference) {
    // the small-carrier claims are checked even when its tables are not emitted
    const auto small = b.small_lnh3 ? b.small_lnh3 : std::optional<SmallLnh3Variant>(small_lnh3_variant(config));
    b.discrepancies = compare_with_reference(b.result, *reference, small);
    b.tables.push_back(discrepancy_table(b.discrepancies));
  }
  provenance.settings["portfolio"] = portfolio.label;
  provenance.settings["small_lnh3"] = with_small_lnh3 ? "true" : "false";
  b.provenance = std::move(provenance);
  return b;
}

inline nlohmann::json bundle_json(const ReportBundle& b) {
  nlohmann::json j;
  j["scenario"] = b.scenario;
  j["result"] = b.result;
  j["portfolio"] = {{"label", b.portfolio.label}, {"lnh3_fraction", b.portfolio.lnh3_fraction}};
  j["portfolio_bottleneck"] = b.portfolio_bottleneck;
  if (b.small_lnh3) {
    j["small_lnh3"] = {{"result", b.small_lnh3->result},
                       {"feasible", detail::year_map_to_json(b.small_lnh3->feasible)}};
  }
  nlohmann::json ds = nlohmann::json::array();
  std::size_t flagged = 0;
  for (const auto& d : b.discrepancies) {
    ds.push_back(to_json_value(d));
    flagged += d.matches ? 0 : 1;
  }
  j["reference_comparison"] = {{"cells", ds}, {"discrepancies", flagged}};
  j["provenance"] = {{"engine_version", b.provenance.engine_version},
                     {"inputs", b.provenance.inputs},
                     {"settings", b.provenance.settings}};
  return j;
}

inline ScenarioResult result_from_bundle_json(const nlohmann::json& j) {
  try {
    return j.at("result").get<ScenarioResult>();
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("bundle result: ") + e.what());
  }
}

inline void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

// `emit` selects table/figure ids; empty means everything. result.json is
// always written.
inline std::vector<std::filesystem::path> write_bundle(const ReportBundle& b, const std::filesystem::path& dir,
                                                       const std::vector<std::string>& emit = {}) {
  std::filesystem::create_directories(dir);
  auto wanted = [&](const std::string& id) {
    return emit.empty() || std::find(emit.begin(), emit.end(), id) != emit.end();
  };
  std::vector<std::filesystem::path> written;
  for (const auto& t : b.tables) {
    if (!wanted(t.id)) continue;
    written.push_back(dir / (t.id + ".csv"));
    write_text(written.back(), to_csv(t));
  }
  for (const auto& f : b.figures) {
    if (!wanted(f.id)) continue;
    written.push_back(dir / ("figure_" + f.id + ".csv"));
    write_text(written.back(), to_csv(f));
  }
  written.push_back(dir / "result.json");
  write_text(written.back(), bundle_json(b).dump(1) + "\n");
  return written;
}

// ---------------------------------------------------------------------------
// Bundle comparison

struct CellDiff {
  std::string path;
  std::string left;
  std::string right;
};

namespace detail {

inline void diff_json(const nlohmann::json& a, const nlohmann::json& b, const std::string& path, double rel_tol,
                      std::vector<CellDiff>& out) {
  if (a.is_number() && b.is_number()) {
    const double x = a.get<double>(), y = b.get<double>();
    const double scale = std::max({std::abs(x), std::abs(y), 1e-12});
    if (std::abs(x - y) / scale > rel_tol) out.push_back({path, a.dump(), b.dump()});
    return;
  }
  if (a.type() != b.type()) {
    out.push_back({path, a.dump(), b.dump()});
    return;
  }
  if (a.is_object()) {
    for (const auto& [k, v] : a.items()) {
      if (!b.contains(k)) {
        out.push_back({path + "/" + k, v.dump(), "<missing>"});
      } else {
        diff_json(v, b.at(k), path + "/" + k, rel_tol, out);
      }
    }
    for (const auto& [k, v] : b.items()) {
      if (!a.contains(k)) out.push_back({path + "/" + k, "<missing>", v.dump()});
    }
  } else if (a.is_array()) {
    if (a.size() != b.size()) out.push_back({path + "/#", std::to_string(a.size()), std::to_string(b.size())});
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
      diff_json(a[i], b[i], path + "/" + std::to_string(i), rel_tol, out);
    }
  } else if (a != b) {
    out.push_back({path, a.dump(), b.dump()});
  }
}

}  // namespace detail

inline std::vector<CellDiff> diff_bundles(const nlohmann::json& left, const nlohmann::json& right,
                                          double rel_tol = 1e-9) {
  std::vector<CellDiff> out;
  detail::diff_json(left, right, "", rel_tol, out);
  return out;
}

}  // namespace shipcap
