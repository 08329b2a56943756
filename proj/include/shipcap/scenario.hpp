#pragma once
/*
  Scenario engine.

  Shipyard output is pooled over five-year windows ending 2030, 2035, ...,
  2050. Within a window, scenario-specific "other" work (LNG replacement
  hulls, crude oil tankers, container ships) is served first; whatever CGT is
  left forms the portfolio space for hydrogen carriers. LNH3 tankers can be
  delivered from 2027 and LH2 tankers from 2028, so the first window holds
  four LNH3 years but only three LH2 years.

  The cumulative capacity built through a window end lies between two
  extremes: every CGT spent on LH2 tankers (lower bound) or on LNH3 tankers
  (upper bound). Any mix is a convex combination of the two.
*/

#include <algorithm>
#include <array>
#include <cmath>
#include <filesystem>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shipcap/demand.hpp"
#include "shipcap/error.hpp"
#include "shipcap/fleet.hpp"
#include "shipcap/model.hpp"
#include "shipcap/tanker.hpp"

namespace shipcap {

enum class ScenarioKind {
  lng_first,
  lower_hydrogen_demand,
  hydrogen_priority,
  repurpose_shipyards,
  crude_oil_inclusion,
  container_inclusion,
};

inline constexpr std::array<ScenarioKind, 6> kAllScenarios = {
    ScenarioKind::lng_first,           ScenarioKind::lower_hydrogen_demand, ScenarioKind::hydrogen_priority,
    ScenarioKind::repurpose_shipyards, ScenarioKind::crude_oil_inclusion,   ScenarioKind::container_inclusion};

inline constexpr std::string_view to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::lng_first: return "lng_first";
    case ScenarioKind::lower_hydrogen_demand: return "lower_hydrogen_demand";
    case ScenarioKind::hydrogen_priority: return "hydrogen_priority";
    case ScenarioKind::repurpose_shipyards: return "repurpose_shipyards";
    case ScenarioKind::crude_oil_inclusion: return "crude_oil_inclusion";
    case ScenarioKind::container_inclusion: return "container_inclusion";
  }
  return "lng_first";
}

inline std::optional<ScenarioKind> parse_scenario_kind(std::string_view s) {
  for (auto k : kAllScenarios) {
    if (to_string(k) == s) return k;
  }
  return std::nullopt;
}

inline std::string scenario_names() {
  std::string out;
  for (auto k : kAllScenarios) {
    if (!out.empty()) out += ", ";
    out += to_string(k);
  }
  return out;
}

// CGT served before hydrogen carriers, per window end year.
struct Deductions {
  std::map<int, double> lng_newbuild_cgt;
  std::map<int, double> crude_oil_cgt;
  // charged per available year, so it scales with the window's year count
  double container_cgt_per_year = 0.0;

  static double at(const std::map<int, double>& m, int end_year) {
    const auto it = m.find(end_year);
    return it == m.end() ? 0.0 : it->second;
  }
};

struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::lng_first;
  std::string name = "lng_first";

  // LNG + LPG output of the suitable yards
  double base_annual_pool_cgt = 3'993'414.0;
  // repurposed yards or freed crude-oil capacity
  double pool_addition_cgt_per_year = 0.0;
  double container_cgt_per_year = 0.0;
  // LNG replacement hulls per window end; priced at the LNG tanker CGT
  std::map<int, double> lng_newbuild_tankers;
  std::map<int, double> crude_oil_cgt_per_window;

  DemandSeries hydrogen_demand = defaults::nze_hydrogen();
  // which LNG outlook drives the replacement schedule ("neglected" for none)
  std::string lng_demand = "NZE";
  // the series itself, needed only when the schedule is derived from a fleet
  std::optional<DemandSeries> lng_demand_series;
  CalibrationFactors factors;

  TankerSpec lng_spec = lng_tanker();
  TankerSpec lh2_spec = lh2_tanker();
  TankerSpec lnh3_spec = lnh3_tanker();
  TankerSpec small_lnh3_spec = small_lnh3_tanker();

  std::vector<int> window_ends{2030, 2035, 2040, 2045, 2050};
  int window_length = 5;

  double annual_pool() const { return base_annual_pool_cgt + pool_addition_cgt_per_year; }

  Deductions deductions() const {
    Deductions d;
    for (const auto& [y, n] : lng_newbuild_tankers) d.lng_newbuild_cgt[y] = n * lng_spec.cgt;
    d.crude_oil_cgt = crude_oil_cgt_per_window;
    d.container_cgt_per_year = container_cgt_per_year;
    return d;
  }

  void validate_or_throw() const {
    if (!(base_annual_pool_cgt >= 0.0)) throw ConfigError("base annual pool must be >= 0");
    if (window_length <= 0) throw ConfigError("window length must be positive");
    if (window_ends.empty()) throw ConfigError("no capacity windows");
    for (std::size_t i = 1; i < window_ends.size(); ++i) {
      if (window_ends[i] <= window_ends[i - 1]) throw ConfigError("window end years must increase");
    }
    lng_spec.validate_or_throw();
    lh2_spec.validate_or_throw();
    lnh3_spec.validate_or_throw();
    small_lnh3_spec.validate_or_throw();
    factors.validate_or_throw();
    if (hydrogen_demand.points().empty()) throw ConfigError("missing hydrogen demand series");
  }
};

// Built-in definitions of the six scenarios.
inline ScenarioConfig preset(ScenarioKind kind, const ModelConstants& model = {}) {
  ScenarioConfig c;
  c.lng_spec = model.lng_spec();
  c.lh2_spec = model.lh2_spec();
  c.lnh3_spec = model.lnh3_spec();
  c.small_lnh3_spec = model.small_lnh3_spec();
  c.factors = model.factors;
  c.kind = kind;
  c.name = std::string(to_string(kind));
  // NZE LNG outlook: the current fleet covers demand until the mid 2040s,
  // then 171 replacement hulls are due in the last window.
  c.lng_newbuild_tankers = {{2050, 171.0}};
  switch (kind) {
    case ScenarioKind::lng_first: break;
    case ScenarioKind::lower_hydrogen_demand:
      c.hydrogen_demand = defaults::aps_hydrogen();
      c.lng_demand = "APS";
      // replacement schedule under the APS LNG outlook
      c.lng_newbuild_tankers = {{2035, 121.0}, {2040, 40.0}, {2050, 115.0}};
      break;
    case ScenarioKind::hydrogen_priority:
      c.lng_demand = "neglected";
      c.lng_newbuild_tankers.clear();
      break;
    case ScenarioKind::repurpose_shipyards: c.pool_addition_cgt_per_year = 695'250.0; break;
    case ScenarioKind::crude_oil_inclusion:
      c.pool_addition_cgt_per_year = 2'120'001.0;
      c.crude_oil_cgt_per_window = crude_oil_newbuild_cgt(c.window_ends);
      break;
    case ScenarioKind::container_inclusion: c.container_cgt_per_year = 2.73e6; break;
  }
  return c;
}

// ---------------------------------------------------------------------------

struct CapacityWindow {
  int end_year = 0;
  int years_lh2 = 0;
  int years_lnh3 = 0;
  double deduction_lh2 = 0.0;
  double deduction_lnh3 = 0.0;
  // annual * years - deductions, may be negative
  double raw_pool_lh2 = 0.0;
  double raw_pool_lnh3 = 0.0;
  double pool_lh2 = 0.0;
  double pool_lnh3 = 0.0;

  bool operator==(const CapacityWindow&) const = default;
};

inline int available_years(int end_year, int length, int first_delivery_year) {
  const int first = std::max(end_year - length + 1, first_delivery_year);
  return std::max(0, end_year - first + 1);
}

inline std::vector<CapacityWindow> build_windows(const ScenarioConfig& config, const Deductions& deductions) {
  std::vector<CapacityWindow> out;
  const double annual = config.annual_pool();
  for (int end : config.window_ends) {
    CapacityWindow w;
    w.end_year = end;
    w.years_lh2 = available_years(end, config.window_length, config.lh2_spec.first_delivery_year);
    w.years_lnh3 = available_years(end, config.window_length, config.lnh3_spec.first_delivery_year);
    const double fixed = Deductions::at(deductions.lng_newbuild_cgt, end) + Deductions::at(deductions.crude_oil_cgt, end);
    w.deduction_lh2 = fixed + deductions.container_cgt_per_year * w.years_lh2;
    w.deduction_lnh3 = fixed + deductions.container_cgt_per_year * w.years_lnh3;
    w.raw_pool_lh2 = annual * w.years_lh2 - w.deduction_lh2;
    w.raw_pool_lnh3 = annual * w.years_lnh3 - w.deduction_lnh3;
    w.pool_lh2 = std::max(0.0, w.raw_pool_lh2);
    w.pool_lnh3 = std::max(0.0, w.raw_pool_lnh3);
    out.push_back(w);
  }
  return out;
}

inline std::vector<CapacityWindow> build_windows(const ScenarioConfig& config) {
  return build_windows(config, config.deductions());
}

struct WindowBounds {
  // m3 LH2eq, continuous
  double max_lh2_capacity = 0.0;
  double max_lnh3_capacity = 0.0;
  long max_lh2_count = 0;
  long max_lnh3_count = 0;

  bool operator==(const WindowBounds&) const = default;
};

inline WindowBounds window_production_bounds(const CapacityWindow& w, const TankerSpec& lh2, const TankerSpec& lnh3) {
  const auto a = max_tankers(w.pool_lh2, lh2);
  const auto b = max_tankers(w.pool_lnh3, lnh3);
  return {a.continuous_lh2eq_m3, b.continuous_lh2eq_m3, a.count, b.count};
}

struct WindowResult {
  CapacityWindow window;
  WindowBounds bounds;

  bool operator==(const WindowResult&) const = default;
};

struct CumulativeBounds {
  int year = 0;
  double lower = 0.0;
  double upper = 0.0;

  double at(double lnh3_fraction) const { return lnh3_fraction * upper + (1.0 - lnh3_fraction) * lower; }
  bool operator==(const CumulativeBounds&) const = default;
};

struct MinLnh3 {
  bool feasible = true;
  long count = 0;

  bool operator==(const MinLnh3&) const = default;
};

struct BottleneckInterval {
  bool shortage = false;
  double start = 0.0;
  // where capacity catches up with demand, if it does within the horizon
  std::optional<double> resolve_crossing;
  std::optional<int> resolve_year;

  bool operator==(const BottleneckInterval&) const = default;
};

struct ScenarioResult {
  std::string name;
  ScenarioKind kind = ScenarioKind::lng_first;
  double annual_pool_cgt = 0.0;
  TankerSpec lh2_spec;
  TankerSpec lnh3_spec;
  std::vector<WindowResult> windows;
  std::vector<CumulativeBounds> cumulative;
  // m3 LH2eq at each window end year
  std::map<int, double> demand;
  std::map<int, double> gap;
  std::map<int, MinLnh3> min_lnh3;
  std::map<int, MinLnh3> min_lnh3_two_pool;
  BottleneckInterval bottleneck_lh2_only;

  bool operator==(const ScenarioResult&) const = default;
};

inline double lnh3_net_gain(const TankerSpec& lh2, const TankerSpec& lnh3) {
  // every LNH3 hull takes CGT that would otherwise have gone to LH2 hulls
  return lnh3.lh2eq_per_tanker_m3 - (lnh3.cgt / lh2.cgt) * lh2.lh2eq_per_tanker_m3;
}

inline std::vector<CumulativeBounds> cumulate(const std::vector<WindowResult>& windows) {
  std::vector<CumulativeBounds> out;
  double lo = 0.0, hi = 0.0;
  for (const auto& w : windows) {
    lo += w.bounds.max_lh2_capacity;
    hi += w.bounds.max_lnh3_capacity;
    out.push_back({w.window.end_year, lo, hi});
  }
  return out;
}

inline CumulativeBounds cumulative_bounds(const ScenarioResult& r, int year) {
  for (const auto& c : r.cumulative) {
    if (c.year == year) return c;
  }
  throw RangeError("year " + std::to_string(year) + " is not a window end year");
}

// Shortfall of the all-LH2 portfolio.
inline std::map<int, double> transport_gap(const ScenarioResult& r, const std::map<int, double>& demand) {
  std::map<int, double> out;
  for (const auto& c : r.cumulative) {
    const auto it = demand.find(c.year);
    if (it == demand.end()) throw RangeError("demand undefined at window end " + std::to_string(c.year));
    out[c.year] = std::max(0.0, it->second - c.lower);
  }
  return out;
}

// Fewest LNH3 hulls that close the all-LH2 gap when each hull displaces its
// CGT worth of LH2 production. Infeasible when even the all-LNH3 portfolio
// falls short.
inline MinLnh3 min_lnh3_tankers(const ScenarioResult& r, const std::map<int, double>& demand, int year) {
  const auto c = cumulative_bounds(r, year);
  const double d = demand.at(year);
  if (c.upper < d) return {false, 0};
  const double gap = std::max(0.0, d - c.lower);
  if (gap <= 0.0) return {true, 0};
  return {true, static_cast<long>(std::ceil(gap / lnh3_net_gain(r.lh2_spec, r.lnh3_spec)))};
}

// Diagnostic: same question, but LNH3 hulls first use the capacity that only
// LNH3 can use (delivery years before LH2 becomes available) and displace LH2
// production only after that is exhausted.
inline MinLnh3 min_lnh3_tankers_two_pool(const ScenarioResult& r, const std::map<int, double>& demand, int year) {
  const auto c = cumulative_bounds(r, year);
  const double d = demand.at(year);
  if (c.upper < d) return {false, 0};
  if (c.lower >= d) return {true, 0};
  double extra = 0.0, total_lnh3 = 0.0, total_lh2 = 0.0;
  for (const auto& w : r.windows) {
    if (w.window.end_year > year) break;
    extra += w.window.pool_lnh3 - w.window.pool_lh2;
    total_lnh3 += w.window.pool_lnh3;
    total_lh2 += w.window.pool_lh2;
  }
  const auto& lh2 = r.lh2_spec;
  const auto& lnh3 = r.lnh3_spec;
  const long max_n = static_cast<long>(std::floor(total_lnh3 / lnh3.cgt)) + 1;
  for (long n = 0; n <= max_n; ++n) {
    const double used = static_cast<double>(n) * lnh3.cgt;
    const double displaced = std::min(total_lh2, std::max(0.0, used - extra));
    const double cap = static_cast<double>(n) * lnh3.lh2eq_per_tanker_m3 +
                       (total_lh2 - displaced) / lh2.cgt * lh2.lh2eq_per_tanker_m3;
    if (cap >= d) return {true, n};
  }
  return {false, 0};
}

// Capacity and demand are interpolated linearly between window end years.
// Reports the first interval in which capacity of the given LNH3 share stays
// below demand.
inline BottleneckInterval bottleneck_interval(const ScenarioResult& r, const std::map<int, double>& demand,
                                              double lnh3_fraction) {
  if (lnh3_fraction < 0.0 || lnh3_fraction > 1.0) throw DomainError("portfolio fraction must lie in [0, 1]");
  std::vector<std::pair<double, double>> diff;  // (year, capacity - demand)
  for (const auto& c : r.cumulative) {
    const auto it = demand.find(c.year);
    if (it == demand.end()) throw RangeError("demand undefined at window end " + std::to_string(c.year));
    diff.emplace_back(c.year, c.at(lnh3_fraction) - it->second);
  }
  BottleneckInterval out;
  if (diff.empty()) return out;
  auto crossing = [](const std::pair<double, double>& a, const std::pair<double, double>& b) {
    return a.first + (b.first - a.first) * (a.second / (a.second - b.second));
  };
  std::size_t i = 0;
  if (diff[0].second < 0.0) {
    out.shortage = true;
    out.start = diff[0].first;
  } else {
    for (i = 1; i < diff.size(); ++i) {
      if (diff[i].second < 0.0) {
        out.shortage = true;
        out.start = crossing(diff[i - 1], diff[i]);
        break;
      }
    }
    if (!out.shortage) return out;
  }
  for (std::size_t j = std::max<std::size_t>(i, 1); j < diff.size(); ++j) {
    if (diff[j - 1].second < 0.0 && diff[j].second >= 0.0) {
      out.resolve_crossing = crossing(diff[j - 1], diff[j]);
      out.resolve_year = static_cast<int>(std::lround(*out.resolve_crossing));
      break;
    }
  }
  return out;
}

inline std::map<int, double> demand_at_window_ends(const ScenarioConfig& config) {
  std::map<int, double> out;
  for (int end : config.window_ends) out[end] = hydrogen_capacity_demand_at(config.hydrogen_demand, config.factors, end);
  return out;
}

inline ScenarioResult run_scenario(const ScenarioConfig& config) {
  config.validate_or_throw();
  ScenarioResult r;
  r.name = config.name;
  r.kind = config.kind;
  r.annual_pool_cgt = config.annual_pool();
  r.lh2_spec = config.lh2_spec;
  r.lnh3_spec = config.lnh3_spec;
  for (const auto& w : build_windows(config)) {
    r.windows.push_back({w, window_production_bounds(w, config.lh2_spec, config.lnh3_spec)});
  }
  r.cumulative = cumulate(r.windows);
  r.demand = demand_at_window_ends(config);
  r.gap = transport_gap(r, r.demand);
  for (int end : config.window_ends) {
    r.min_lnh3[end] = min_lnh3_tankers(r, r.demand, end);
    r.min_lnh3_two_pool[end] = min_lnh3_tankers_two_pool(r, r.demand, end);
  }
  r.bottleneck_lh2_only = bottleneck_interval(r, r.demand, 0.0);
  return r;
}

// Re-run with the smaller ammonia carrier replacing the standard one.
struct SmallLnh3Variant {
  ScenarioResult result;
  // window end -> all-small-LNH3 cumulative capacity meets demand
  std::map<int, bool> feasible;
};

inline SmallLnh3Variant small_lnh3_variant(const ScenarioConfig& config) {
  ScenarioConfig c = config;
  c.lnh3_spec = config.small_lnh3_spec;
  c.name = config.name + "+small_lnh3";
  SmallLnh3Variant v{run_scenario(c), {}};
  for (const auto& cb : v.result.cumulative) v.feasible[cb.year] = cb.upper >= v.result.demand.at(cb.year);
  return v;
}

// ---------------------------------------------------------------------------
// LNG replacement schedule from a fleet

// Newbuild counts summed into the window each year falls in.
inline std::map<int, double> newbuilds_by_window(const NewbuildSchedule& schedule, const std::vector<int>& window_ends,
                                                 int window_length) {
  std::map<int, double> out;
  for (int end : window_ends) {
    long n = 0;
    for (const auto& [y, c] : schedule) {
      if (y > end - window_length && y <= end) n += c;
    }
    if (n > 0) out[end] = static_cast<double>(n);
  }
  return out;
}

struct LngTurnover {
  double base_year_fleet_m3 = 0.0;
  double fleet_factor = 0.0;
  YearValues demand_m3;
  NewbuildSchedule schedule;
};

// Fleet calibration at the first year of the LNG series, then greedy
// replacement through its last year.
inline LngTurnover lng_turnover(const std::vector<VesselRecord>& records, const DemandSeries& lng_bcm,
                                const CalibrationFactors& factors, int lifetime, const TankerSpec& spec) {
  LngTurnover t;
  const auto fleet = filter_type(records, VesselType::lng);
  const int base_year = lng_bcm.first_year();
  t.base_year_fleet_m3 = surviving_capacity(fleet, base_year, lifetime);
  t.fleet_factor = lng_fleet_factor(lng_bcm, factors, t.base_year_fleet_m3, base_year);
  t.demand_m3 = lng_capacity_demand(lng_bcm, factors, t.base_year_fleet_m3);
  t.schedule = required_newbuilds(fleet, t.demand_m3, base_year, lng_bcm.last_year(), lifetime, spec);
  return t;
}

// ---------------------------------------------------------------------------
// Scenario files. Start from the built-in definition of `kind` and override
// whatever keys are present. Relative demand paths resolve against the
// file's directory.
//
//   kind = repurpose_shipyards
//   hydrogen_demand = ../demand/nze_hydrogen.cfg
//   pool_addition_cgt_per_year = 695250
//   lng_newbuild_tankers = 2050:171

inline ScenarioConfig scenario_config_from_kv(const KeyValueFile& kv, const std::filesystem::path& base_dir = {},
                                              const ModelConstants& model = {}) {
  const auto kind = parse_scenario_kind(kv.get("kind"));
  if (!kind) throw ConfigError(kv.origin() + ": unknown scenario kind '" + kv.get("kind") + "'");
  ScenarioConfig c = preset(*kind, model);
  c.name = kv.get_or("name", c.name);
  c.base_annual_pool_cgt = kv.get_double_or("base_annual_pool_cgt", c.base_annual_pool_cgt);
  c.pool_addition_cgt_per_year = kv.get_double_or("pool_addition_cgt_per_year", c.pool_addition_cgt_per_year);
  c.container_cgt_per_year = kv.get_double_or("container_cgt_per_year", c.container_cgt_per_year);
  if (kv.has("lng_newbuild_tankers")) c.lng_newbuild_tankers = kv.get_series("lng_newbuild_tankers");
  if (kv.has("crude_oil_cgt_per_window")) c.crude_oil_cgt_per_window = kv.get_series("crude_oil_cgt_per_window");
  if (kv.has("hydrogen_demand")) {
    std::filesystem::path p = kv.get("hydrogen_demand");
    if (p.is_relative()) p = base_dir / p;
    c.hydrogen_demand = load_demand_series(p.string());
    if (c.hydrogen_demand.commodity() != Commodity::hydrogen_mt) {
      throw ConfigError(kv.origin() + ": hydrogen_demand must reference a hydrogen series");
    }
  }
  c.lng_demand = kv.get_or("lng_demand", c.lng_demand);
  if (kv.has("lng_demand_series")) {
    std::filesystem::path p = kv.get("lng_demand_series");
    if (p.is_relative()) p = base_dir / p;
    c.lng_demand_series = load_demand_series(p.string());
    if (c.lng_demand_series->commodity() != Commodity::lng_bcm) {
      throw ConfigError(kv.origin() + ": lng_demand_series must reference an LNG series");
    }
  }
  c.window_length = kv.get_int_or("window_length", c.window_length);
  if (kv.has("window_ends")) {
    c.window_ends.clear();
    std::string text = kv.get("window_ends");
    std::replace(text.begin(), text.end(), ',', ' ');
    std::istringstream in(text);
    for (int y; in >> y;) c.window_ends.push_back(y);
    if (!in.eof()) throw ConfigError(kv.origin() + ": window_ends must be a list of years");
  }
  if (kv.has("lnh3_capacity_m3")) c.lnh3_spec = model.lnh3_spec(kv.get_double("lnh3_capacity_m3"));
  c.validate_or_throw();
  return c;
}

inline ScenarioConfig load_scenario_config(const std::filesystem::path& path, const ModelConstants& model = {}) {
  return scenario_config_from_kv(KeyValueFile::load(path.string()), path.parent_path(), model);
}

}  // namespace shipcap
