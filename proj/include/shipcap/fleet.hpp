#pragma once
/*
  Fleet records, shipyard identification and fleet turnover.

  CSV schema (UTF-8, header row, comma separated):
    imo_id,vessel_type,tank_system,gross_tonnage,cargo_capacity_m3,build_year,builder_yard,builder_country

  A shipyard is taken to be able to build large liquefied-gas tankers when it
  delivered at least one LNG carrier of >= 140,000 m3 since 2010 and delivered
  any vessel at all in 2020-2022. Its output is the average annual CGT per
  vessel type over 2015-2022.
*/

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "shipcap/error.hpp"
#include "shipcap/regression.hpp"
#include "shipcap/tanker.hpp"

namespace shipcap {

enum class TankSystem { membrane, independent, other, unknown };

inline constexpr std::string_view to_string(TankSystem t) {
  switch (t) {
    case TankSystem::membrane: return "membrane";
    case TankSystem::independent: return "independent";
    case TankSystem::other: return "other";
    case TankSystem::unknown: return "unknown";
  }
  return "unknown";
}

inline std::optional<TankSystem> parse_tank_system(std::string_view s) {
  for (auto t : {TankSystem::membrane, TankSystem::independent, TankSystem::other, TankSystem::unknown}) {
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

struct VesselRecord {
  std::string imo_id;
  VesselType vessel_type = VesselType::other;
  TankSystem tank_system = TankSystem::unknown;
  double gross_tonnage = 0.0;
  // 0 for non-gas carriers; TEU-equivalent volume for container ships
  double cargo_capacity_m3 = 0.0;
  int build_year = 0;
  std::string builder_yard;
  std::string builder_country;

  bool operator==(const VesselRecord&) const = default;
};

inline constexpr std::string_view kFleetHeader =
    "imo_id,vessel_type,tank_system,gross_tonnage,cargo_capacity_m3,build_year,builder_yard,builder_country";

struct FleetLimits {
  // IMO registration threshold
  double min_gross_tonnage = 100.0;
  int min_build_year = 1950;
  // Records past the data year are order-book deliveries.
  int max_build_year = 2030;
};

struct RejectedRow {
  std::size_t line = 0;
  std::string reason;
};

struct FleetParseResult {
  std::vector<VesselRecord> records;
  std::vector<RejectedRow> rejects;
};

namespace detail {

inline std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    if (pos == std::string_view::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

inline bool parse_number(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end && std::isfinite(out);
}

inline bool parse_int(std::string_view s, int& out) {
  s = trim(s);
  if (s.empty()) return false;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc{} && ptr == end;
}

}  // namespace detail

inline FleetParseResult parse_fleet(std::istream& in, const FleetLimits& limits = {}) {
  FleetParseResult result;
  std::string line;
  std::size_t lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view row = detail::trim(line);
    if (!header_seen) {
      if (lineno == 1 && row.starts_with("\xEF\xBB\xBF")) row.remove_prefix(3);
      if (row != kFleetHeader) {
        throw SchemaError("fleet header mismatch: expected '" + std::string(kFleetHeader) + "', got '" +
                          std::string(row) + "'");
      }
      header_seen = true;
      continue;
    }
    if (row.empty()) continue;

    auto reject = [&](std::string reason) { result.rejects.push_back({lineno, std::move(reason)}); };
    const auto cols = detail::split_csv(row);
    if (cols.size() != 8) {
      reject("expected 8 columns, got " + std::to_string(cols.size()));
      continue;
    }
    VesselRecord r;
    r.imo_id = std::string(detail::trim(cols[0]));
    if (r.imo_id.empty()) {
      reject("empty imo_id");
      continue;
    }
    const auto type = parse_vessel_type(detail::trim(cols[1]));
    if (!type) {
      reject("unknown vessel_type '" + std::string(detail::trim(cols[1])) + "'");
      continue;
    }
    r.vessel_type = *type;
    const auto tank = parse_tank_system(detail::trim(cols[2]));
    if (!tank) {
      reject("unknown tank_system '" + std::string(detail::trim(cols[2])) + "'");
      continue;
    }
    r.tank_system = *tank;
    if (!detail::parse_number(cols[3], r.gross_tonnage)) {
      reject("gross_tonnage is not a number");
      continue;
    }
    if (r.gross_tonnage < limits.min_gross_tonnage) {
      reject("gross_tonnage below " + std::to_string(static_cast<int>(limits.min_gross_tonnage)) + " GT");
      continue;
    }
    if (!detail::parse_number(cols[4], r.cargo_capacity_m3)) {
      reject("cargo_capacity_m3 is not a number");
      continue;
    }
    if (r.cargo_capacity_m3 < 0.0) {
      reject("negative cargo_capacity_m3");
      continue;
    }
    if (!detail::parse_int(cols[5], r.build_year)) {
      reject("build_year is not an integer");
      continue;
    }
    if (r.build_year < limits.min_build_year || r.build_year > limits.max_build_year) {
      reject("build_year " + std::to_string(r.build_year) + " outside [" + std::to_string(limits.min_build_year) +
             ", " + std::to_string(limits.max_build_year) + "]");
      continue;
    }
    r.builder_yard = std::string(detail::trim(cols[6]));
    r.builder_country = std::string(detail::trim(cols[7]));
    if (r.builder_yard.empty()) {
      reject("empty builder_yard");
      continue;
    }
    result.records.push_back(std::move(r));
  }
  if (!header_seen) throw SchemaError("fleet file is empty: missing header row");
  return result;
}

inline FleetParseResult parse_fleet_file(const std::string& path, const FleetLimits& limits = {}) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open fleet file '" + path + "'");
  return parse_fleet(in, limits);
}

inline void write_fleet_csv(std::ostream& out, const std::vector<VesselRecord>& records) {
  out << kFleetHeader << '\n';
  for (const auto& r : records) {
    out << r.imo_id << ',' << to_string(r.vessel_type) << ',' << to_string(r.tank_system) << ','
        << static_cast<long long>(std::llround(r.gross_tonnage)) << ','
        << static_cast<long long>(std::llround(r.cargo_capacity_m3)) << ',' << r.build_year << ','
        << r.builder_yard << ',' << r.builder_country << '\n';
  }
}

inline std::string format_rejects(const std::vector<RejectedRow>& rejects) {
  std::string out;
  for (const auto& r : rejects) out += "line " + std::to_string(r.line) + ": " + r.reason + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Shipyard identification

struct YardCriteria {
  double large_lng_min_capacity_m3 = 140'000.0;
  int large_lng_min_year = 2010;
  int active_from = 2020;
  int active_to = 2022;
};

struct YearWindow {
  int first = 2015;
  int last = 2022;

  int length() const { return last - first + 1; }
  bool contains(int y) const { return y >= first && y <= last; }
};

struct ShipyardProfile {
  std::string yard_id;
  std::string country;
  std::map<VesselType, double> avg_annual_cgt_by_type;
  bool qualifies_large_lng = false;
  bool active = false;
  // IMO ids of the records that satisfied each rule
  std::string large_lng_witness;
  std::string activity_witness;

  double avg_annual_cgt(VesselType t) const {
    const auto it = avg_annual_cgt_by_type.find(t);
    return it == avg_annual_cgt_by_type.end() ? 0.0 : it->second;
  }
  double avg_annual_cgt_total(bool tankers_only = true) const {
    double s = 0.0;
    for (const auto& [t, v] : avg_annual_cgt_by_type) {
      if (!tankers_only || is_tanker(t)) s += v;
    }
    return s;
  }
};

inline bool is_large_lng(const VesselRecord& r, const YardCriteria& c) {
  return r.vessel_type == VesselType::lng && r.cargo_capacity_m3 >= c.large_lng_min_capacity_m3;
}

// Every yard that appears in the records, with both qualification rules
// evaluated. Ordered by yard id.
inline std::vector<ShipyardProfile> classify_yards(const std::vector<VesselRecord>& records,
                                                   const YardCriteria& criteria = {}) {
  std::map<std::string, ShipyardProfile> yards;
  for (const auto& r : records) {
    auto& y = yards[r.builder_yard];
    if (y.yard_id.empty()) {
      y.yard_id = r.builder_yard;
      y.country = r.builder_country;
    }
    if (y.large_lng_witness.empty() && is_large_lng(r, criteria) && r.build_year >= criteria.large_lng_min_year) {
      y.large_lng_witness = r.imo_id;
    }
    if (y.activity_witness.empty() && r.build_year >= criteria.active_from && r.build_year <= criteria.active_to) {
      y.activity_witness = r.imo_id;
    }
  }
  std::vector<ShipyardProfile> out;
  out.reserve(yards.size());
  for (auto& [id, y] : yards) {
    y.active = !y.activity_witness.empty();
    y.qualifies_large_lng = !y.large_lng_witness.empty();
    out.push_back(std::move(y));
  }
  return out;
}

// Yards that pass both rules.
inline std::vector<ShipyardProfile> identify_suitable_shipyards(const std::vector<VesselRecord>& records,
                                                                const YardCriteria& criteria = {}) {
  auto all = classify_yards(records, criteria);
  std::erase_if(all, [](const ShipyardProfile& y) { return !(y.qualifies_large_lng && y.active); });
  return all;
}

// Active yards outside the suitable set that have delivered a large LNG
// carrier at some point, ignoring the year cutoff.
inline std::vector<ShipyardProfile> identify_repurpose_candidates(const std::vector<VesselRecord>& records,
                                                                  const YardCriteria& criteria = {}) {
  auto all = classify_yards(records, criteria);
  std::set<std::string> ever_large;
  for (const auto& r : records) {
    if (is_large_lng(r, criteria)) ever_large.insert(r.builder_yard);
  }
  std::erase_if(all, [&](const ShipyardProfile& y) {
    return !y.active || y.qualifies_large_lng || !ever_large.contains(y.yard_id);
  });
  return all;
}

inline double record_cgt(const VesselRecord& r, const CgtParamTable& params) {
  return cgt_from_gt(r.gross_tonnage, params[r.vessel_type]);
}

// Fills avg_annual_cgt_by_type: window CGT per type divided by the window length.
inline std::vector<ShipyardProfile> annual_capacity_by_yard(const std::vector<VesselRecord>& records,
                                                            std::vector<ShipyardProfile> yards,
                                                            YearWindow window = {},
                                                            const CgtParamTable& params = {}) {
  if (window.length() <= 0) throw DomainError("averaging window is empty");
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < yards.size(); ++i) {
    yards[i].avg_annual_cgt_by_type.clear();
    index.emplace(yards[i].yard_id, i);
  }
  for (const auto& r : records) {
    if (!window.contains(r.build_year)) continue;
    const auto it = index.find(r.builder_yard);
    if (it == index.end()) continue;
    yards[it->second].avg_annual_cgt_by_type[r.vessel_type] += record_cgt(r, params);
  }
  const double years = window.length();
  for (auto& y : yards) {
    for (auto& [t, v] : y.avg_annual_cgt_by_type) v /= years;
  }
  return yards;
}

inline std::map<VesselType, double> total_by_type(const std::vector<ShipyardProfile>& yards) {
  std::map<VesselType, double> out;
  for (const auto& y : yards) {
    for (const auto& [t, v] : y.avg_annual_cgt_by_type) out[t] += v;
  }
  return out;
}

// Average annual CGT of the given types summed over yards; the base shipyard
// pool is the LNG + LPG output of the suitable yards.
inline double annual_pool(const std::vector<ShipyardProfile>& yards,
                          std::initializer_list<VesselType> types = {VesselType::lng, VesselType::lpg}) {
  double s = 0.0;
  for (const auto& y : yards) {
    for (auto t : types) s += y.avg_annual_cgt(t);
  }
  return s;
}

struct CountryShare {
  std::string country;
  int yards = 0;
  double tanker_cgt_per_year = 0.0;
  double lng_cgt_per_year = 0.0;
  // of global tanker output
  double share = 0.0;
  // of the suitable yards' LNG output
  double lng_share = 0.0;
};

struct TankerOutputShares {
  double global_tanker_cgt_per_year = 0.0;
  std::vector<CountryShare> countries;  // suitable yards grouped by country, descending output
  double other_share = 0.0;             // everything built elsewhere
};

inline TankerOutputShares tanker_output_shares(const std::vector<VesselRecord>& records,
                                               const std::vector<ShipyardProfile>& suitable,
                                               YearWindow window = {}, const CgtParamTable& params = {}) {
  TankerOutputShares out;
  for (const auto& r : records) {
    if (window.contains(r.build_year) && is_tanker(r.vessel_type)) out.global_tanker_cgt_per_year += record_cgt(r, params);
  }
  out.global_tanker_cgt_per_year /= window.length();

  std::map<std::string, CountryShare> by_country;
  double lng_total = 0.0;
  for (const auto& y : suitable) {
    auto& c = by_country[y.country];
    c.country = y.country;
    c.yards += 1;
    c.tanker_cgt_per_year += y.avg_annual_cgt_total(true);
    c.lng_cgt_per_year += y.avg_annual_cgt(VesselType::lng);
    lng_total += y.avg_annual_cgt(VesselType::lng);
  }
  double covered = 0.0;
  for (auto& [k, c] : by_country) {
    c.share = out.global_tanker_cgt_per_year > 0.0 ? c.tanker_cgt_per_year / out.global_tanker_cgt_per_year : 0.0;
    c.lng_share = lng_total > 0.0 ? c.lng_cgt_per_year / lng_total : 0.0;
    covered += c.share;
    out.countries.push_back(c);
  }
  std::stable_sort(out.countries.begin(), out.countries.end(),
                   [](const CountryShare& a, const CountryShare& b) { return a.tanker_cgt_per_year > b.tanker_cgt_per_year; });
  out.other_share = out.global_tanker_cgt_per_year > 0.0 ? 1.0 - covered : 0.0;
  return out;
}

// ---------------------------------------------------------------------------
// Regression samples

// LNG carriers with membrane tanks at or above the large-carrier threshold;
// x = cargo capacity, y = CGT from GT.
inline std::vector<Point> membrane_lng_sample(const std::vector<VesselRecord>& records,
                                              double min_capacity_m3 = 140'000.0,
                                              const CgtParamTable& params = {}) {
  std::vector<Point> pts;
  for (const auto& r : records) {
    if (r.vessel_type == VesselType::lng && r.tank_system == TankSystem::membrane &&
        r.cargo_capacity_m3 >= min_capacity_m3) {
      pts.push_back({r.cargo_capacity_m3, record_cgt(r, params)});
    }
  }
  return pts;
}

// LPG/ammonia carriers with independent tanks; CGT from GT with the LPG coefficients.
inline std::vector<Point> independent_tank_sample(const std::vector<VesselRecord>& records,
                                                  const CgtParamTable& params = {}) {
  std::vector<Point> pts;
  for (const auto& r : records) {
    if (r.vessel_type == VesselType::lpg && r.tank_system == TankSystem::independent && r.cargo_capacity_m3 > 0.0) {
      pts.push_back({r.cargo_capacity_m3, record_cgt(r, params)});
    }
  }
  return pts;
}

// ---------------------------------------------------------------------------
// Fleet turnover
//
// A vessel built in year b is in service in years b .. b + lifetime - 1 and
// counts as retired from year b + lifetime on.

inline bool in_service(int build_year, int year, int lifetime) {
  return build_year <= year && build_year > year - lifetime;
}

inline double surviving_capacity(const std::vector<VesselRecord>& fleet, int year, int lifetime = 25) {
  if (lifetime <= 0) throw DomainError("lifetime must be positive");
  double s = 0.0;
  for (const auto& r : fleet) {
    if (in_service(r.build_year, year, lifetime)) s += r.cargo_capacity_m3;
  }
  return s;
}

inline double retired_capacity(const std::vector<VesselRecord>& fleet, int year, int lifetime = 25) {
  if (lifetime <= 0) throw DomainError("lifetime must be positive");
  double s = 0.0;
  for (const auto& r : fleet) {
    if (r.build_year <= year - lifetime) s += r.cargo_capacity_m3;
  }
  return s;
}

inline std::vector<VesselRecord> filter_type(const std::vector<VesselRecord>& records, VesselType t) {
  std::vector<VesselRecord> out;
  std::copy_if(records.begin(), records.end(), std::back_inserter(out),
               [t](const VesselRecord& r) { return r.vessel_type == t; });
  return out;
}

using YearSeries = std::map<int, double>;
using NewbuildSchedule = std::map<int, long>;

// Year-by-year greedy: order just enough whole hulls to cover the shortfall
// left by the surviving fleet and earlier newbuilds, which age under the same
// lifetime.
inline NewbuildSchedule required_newbuilds(const std::vector<VesselRecord>& fleet, const YearSeries& demand_m3,
                                           int first_year, int last_year, int lifetime, const TankerSpec& spec) {
  if (lifetime <= 0) throw DomainError("lifetime must be positive");
  NewbuildSchedule schedule;
  for (int y = first_year; y <= last_year; ++y) {
    const auto d = demand_m3.find(y);
    if (d == demand_m3.end()) throw RangeError("demand undefined for year " + std::to_string(y));
    double capacity = surviving_capacity(fleet, y, lifetime);
    for (const auto& [b, n] : schedule) {
      if (in_service(b, y, lifetime)) capacity += static_cast<double>(n) * spec.cargo_capacity_m3;
    }
    const double shortfall = std::max(0.0, d->second - capacity);
    schedule[y] = static_cast<long>(std::ceil(shortfall / spec.cargo_capacity_m3));
  }
  return schedule;
}

inline long total_newbuilds(const NewbuildSchedule& s, int through_year) {
  long n = 0;
  for (const auto& [y, c] : s) {
    if (y <= through_year) n += c;
  }
  return n;
}

}  // namespace shipcap
