#pragma once
/*
  Commodity demand trajectories and their conversion to required fleet
  capacity.

  Hydrogen: demand in Mt/yr times a composite fleet factor k (m3 LH2eq of
  fleet per Mt/yr). k folds together the share of gas that moves by sea and
  the fleet sizing per unit of seaborne trade; only the product is used.
  LNG: bcm/yr times a factor calibrated so that the base-year demand equals
  the base-year fleet. Containers grow with GDP.
*/

#include <cmath>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "shipcap/error.hpp"
#include "shipcap/kvfile.hpp"

namespace shipcap {

enum class Commodity { hydrogen_mt, lng_bcm, crude_oil, container_m3 };
enum class DemandSource { nze, aps, gdp_baseline, custom };

inline constexpr std::string_view to_string(Commodity c) {
  switch (c) {
    case Commodity::hydrogen_mt: return "hydrogen";
    case Commodity::lng_bcm: return "lng";
    case Commodity::crude_oil: return "crude_oil";
    case Commodity::container_m3: return "container";
  }
  return "hydrogen";
}

inline constexpr std::string_view to_string(DemandSource s) {
  switch (s) {
    case DemandSource::nze: return "NZE";
    case DemandSource::aps: return "APS";
    case DemandSource::gdp_baseline: return "GDP_baseline";
    case DemandSource::custom: return "custom";
  }
  return "custom";
}

inline DemandSource parse_demand_source(std::string_view s) {
  for (auto d : {DemandSource::nze, DemandSource::aps, DemandSource::gdp_baseline, DemandSource::custom}) {
    if (to_string(d) == s) return d;
  }
  throw ConfigError("unknown demand source '" + std::string(s) + "'");
}

inline Commodity parse_commodity(std::string_view s) {
  for (auto c : {Commodity::hydrogen_mt, Commodity::lng_bcm, Commodity::crude_oil, Commodity::container_m3}) {
    if (to_string(c) == s) return c;
  }
  throw ConfigError("unknown commodity '" + std::string(s) + "'");
}

// Piecewise-linear trajectory through year knots.
class DemandSeries {
 public:
  DemandSeries() = default;
  DemandSeries(Commodity commodity, DemandSource source, std::vector<std::pair<int, double>> points)
      : commodity_(commodity), source_(source), points_(std::move(points)) {
    if (points_.empty()) throw ConfigError("demand series has no knots");
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (points_[i].second < 0.0) throw ConfigError("demand values must be non-negative");
      if (i > 0 && points_[i].first <= points_[i - 1].first) throw ConfigError("demand knot years must increase");
    }
  }

  Commodity commodity() const { return commodity_; }
  DemandSource source() const { return source_; }
  const std::vector<std::pair<int, double>>& points() const { return points_; }
  int first_year() const { return points_.front().first; }
  int last_year() const { return points_.back().first; }

  double interpolate(double year) const {
    if (points_.empty()) throw RangeError("empty demand series");
    if (year < first_year() || year > last_year()) {
      throw RangeError("year " + std::to_string(year) + " outside demand knots [" + std::to_string(first_year()) +
                       ", " + std::to_string(last_year()) + "]");
    }
    for (std::size_t i = 1; i < points_.size(); ++i) {
      const auto& [y1, v1] = points_[i];
      if (year <= y1) {
        const auto& [y0, v0] = points_[i - 1];
        if (year == y1) return v1;
        const double t = (year - y0) / static_cast<double>(y1 - y0);
        return v0 + t * (v1 - v0);
      }
    }
    return points_.front().second;  // single knot
  }

  DemandSeries scaled(double factor) const {
    auto pts = points_;
    for (auto& p : pts) p.second *= factor;
    return DemandSeries(commodity_, source_, std::move(pts));
  }

 private:
  Commodity commodity_ = Commodity::hydrogen_mt;
  DemandSource source_ = DemandSource::custom;
  std::vector<std::pair<int, double>> points_;
};

inline double interpolate(const DemandSeries& s, double year) { return s.interpolate(year); }

struct CalibrationFactors {
  // seaborne LNG share of natural gas production
  double maritime_share = 0.134;
  // composite k: m3 LH2eq fleet capacity per Mt/yr hydrogen demand
  double fleet_factor_h2 = 0.24614e6;
  // m3 fleet capacity per bcm/yr LNG; <= 0 means calibrate from the base-year fleet
  double fleet_factor_lng = 0.0;
  double gdp_growth = 0.024;

  // fleet sizing per Mt/yr of seaborne hydrogen trade
  double sizing_factor() const { return fleet_factor_h2 / maritime_share; }

  static CalibrationFactors from_split(double maritime_share, double sizing_factor) {
    CalibrationFactors f;
    f.maritime_share = maritime_share;
    f.fleet_factor_h2 = maritime_share * sizing_factor;
    return f;
  }

  void validate_or_throw() const {
    if (!(maritime_share > 0.0 && maritime_share <= 1.0)) throw ConfigError("maritime share must lie in (0, 1]");
    if (!(fleet_factor_h2 > 0.0)) throw ConfigError("hydrogen fleet factor must be > 0");
    if (fleet_factor_lng < 0.0) throw ConfigError("LNG fleet factor must be >= 0");
    if (gdp_growth < 0.0) throw ConfigError("GDP growth must be >= 0");
  }
};

using YearValues = std::map<int, double>;

inline YearValues sample(const DemandSeries& s, int first_year, int last_year, int step = 1) {
  YearValues out;
  for (int y = first_year; y <= last_year; y += step) out[y] = s.interpolate(y);
  return out;
}

// m3 LH2eq fleet capacity needed at each knot-covered year.
inline YearValues hydrogen_capacity_demand(const DemandSeries& h2_mt, const CalibrationFactors& f, int step = 1) {
  YearValues out;
  for (int y = h2_mt.first_year(); y <= h2_mt.last_year(); y += step) {
    out[y] = h2_mt.interpolate(y) * f.fleet_factor_h2;
  }
  return out;
}

inline double hydrogen_capacity_demand_at(const DemandSeries& h2_mt, const CalibrationFactors& f, double year) {
  return h2_mt.interpolate(year) * f.fleet_factor_h2;
}

inline double lng_fleet_factor(const DemandSeries& lng_bcm, const CalibrationFactors& f, double base_year_fleet_m3,
                               int base_year) {
  if (f.fleet_factor_lng > 0.0) return f.fleet_factor_lng;
  const double base = lng_bcm.interpolate(base_year);
  if (!(base > 0.0)) throw ConfigError("LNG demand is zero in the calibration year");
  return base_year_fleet_m3 / base;
}

// Required LNG fleet capacity; the factor defaults to full utilisation of
// the fleet in the first knot year.
inline YearValues lng_capacity_demand(const DemandSeries& lng_bcm, const CalibrationFactors& f,
                                      double base_year_fleet_m3) {
  const double k = lng_fleet_factor(lng_bcm, f, base_year_fleet_m3, lng_bcm.first_year());
  YearValues out;
  for (int y = lng_bcm.first_year(); y <= lng_bcm.last_year(); ++y) out[y] = lng_bcm.interpolate(y) * k;
  return out;
}

inline YearValues container_capacity_demand(double base_capacity, const CalibrationFactors& f, int base_year,
                                            int last_year) {
  if (!(base_capacity > 0.0)) throw DomainError("base container capacity must be positive");
  YearValues out;
  for (int y = base_year; y <= last_year; ++y) {
    out[y] = base_capacity * std::pow(1.0 + f.gdp_growth, y - base_year);
  }
  return out;
}

// CGT to be spent on crude oil tankers per five-year window (keyed by the
// window's end year). Nothing is needed through the window ending 2035.
struct CrudeOilSchedule {
  int first_build_window = 2040;
  double cgt_per_window = 1.75e6;
  // the 2.2 million CGT per window quoted alongside the tabulated pools
  static constexpr double kTextVariantCgt = 2.2e6;
};

inline YearValues crude_oil_newbuild_cgt(const std::vector<int>& window_end_years, const CrudeOilSchedule& s = {}) {
  YearValues out;
  for (int end : window_end_years) out[end] = end >= s.first_build_window ? s.cgt_per_window : 0.0;
  return out;
}

// ---------------------------------------------------------------------------
// Scenario input files:
//   commodity = hydrogen
//   unit = Mt
//   source = NZE
//   knots = 2030:210, 2050:530

inline DemandSeries demand_series_from_kv(const KeyValueFile& kv) {
  const auto commodity = parse_commodity(kv.get("commodity"));
  const auto source = parse_demand_source(kv.get_or("source", "custom"));
  std::vector<std::pair<int, double>> pts;
  for (const auto& [y, v] : kv.get_series("knots")) pts.emplace_back(y, v);
  return DemandSeries(commodity, source, std::move(pts));
}

inline DemandSeries load_demand_series(const std::string& path) {
  return demand_series_from_kv(KeyValueFile::load(path));
}

namespace defaults {

inline DemandSeries nze_hydrogen() { return {Commodity::hydrogen_mt, DemandSource::nze, {{2030, 210.0}, {2050, 530.0}}}; }
inline DemandSeries aps_hydrogen() { return {Commodity::hydrogen_mt, DemandSource::aps, {{2030, 130.0}, {2050, 250.0}}}; }
inline DemandSeries nze_lng() { return {Commodity::lng_bcm, DemandSource::nze, {{2025, 486.0}, {2050, 153.0}}}; }
inline DemandSeries aps_lng() { return {Commodity::lng_bcm, DemandSource::aps, {{2025, 510.0}, {2050, 324.0}}}; }

}  // namespace defaults

}  // namespace shipcap
