#pragma once
/*
  Seeded synthetic fleet generator.

  Stands in for a commercial fleet database. Given a yard roster with
  per-type annual CGT targets over the averaging window and a build-year
  cohort table for LNG carriers, it emits VesselRecords whose aggregates hit
  the targets exactly (up to integer GT rounding):

    1. LNG carriers are drawn cohort by cohort. Large hulls go to yards by
       cumulative quota (so low-weight yards still receive their share over
       the years); small hulls go to the small-scale LNG builders.
    2. Every other (yard, type) target gets n ~ target / typical-hull CGT
       vessels with random sizes and window build years.
    3. Each (yard, type) group inside the window is rescaled so its CGT sum
       equals target * window length. Capacities are kept; GT is recomputed
       from the rescaled CGT.

  Randomness comes only from std::mt19937_64, whose output sequence is fixed
  by the standard; the uniform and normal transforms are written out here
  because the std:: distributions are implementation-defined.
*/

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "shipcap/error.hpp"
#include "shipcap/fleet.hpp"
#include "shipcap/tanker.hpp"

namespace shipcap {

class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) : engine_(seed) {}

  // [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }
  // Box-Muller, one draw per call
  double normal(double mean, double sd) {
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::mt19937_64 engine_;
};

struct Range {
  double min = 0.0;
  double max = 0.0;
};

struct GeneratorYard {
  std::string id;
  std::string country;
  int active_from = 1950;
  int active_until = 2030;
  // weight for large LNG carriers delivered before the averaging window
  double lng_history_weight = 0.0;
  // last cohort year in which the yard takes large LNG hulls
  int large_lng_until = 9999;
  bool small_lng_builder = false;
  // average annual CGT over the averaging window, per vessel type
  std::map<VesselType, double> window_targets;

  bool active_in(int y) const { return y >= active_from && y <= active_until; }
  double target(VesselType t) const {
    const auto it = window_targets.find(t);
    return it == window_targets.end() ? 0.0 : it->second;
  }
};

struct LngCohort {
  int year = 0;
  int large = 0;
  int small = 0;
};

struct LngSizeModel {
  Range legacy_capacity{125'000.0, 155'000.0};  // before the bimodal era
  int bimodal_from = 2010;
  double large_mean = 170'000.0;
  double large_sd = 7'000.0;
  Range large_clip{140'000.0, 180'000.0};
  double orderbook_mean = 174'000.0;
  double orderbook_sd = 1'500.0;
  Range small_capacity{5'000.0, 40'000.0};
  // share of large hulls with membrane tanks (rest: spherical independent)
  double membrane_share_legacy = 0.5;
  double membrane_share_modern = 0.9;
};

struct GeneratorConfig {
  std::uint64_t seed = 1;
  int data_year = 2022;
  YearWindow window{2015, 2022};
  int activity_year = 2021;
  int activity_from = 2020;
  std::vector<GeneratorYard> yards;
  std::vector<LngCohort> lng_cohorts;
  LngSizeModel lng;
  double membrane_rel_noise = 0.012;
  double independent_log_noise = 0.05;
  // GT ranges for types sized by tonnage, capacity range for LPG
  std::map<VesselType, Range> size_ranges{
      {VesselType::crude_oil, {40'000.0, 170'000.0}},
      {VesselType::chemical, {5'000.0, 30'000.0}},
      {VesselType::oil_products, {8'000.0, 60'000.0}},
      {VesselType::container, {20'000.0, 230'000.0}},
      {VesselType::other, {2'000.0, 60'000.0}},
      {VesselType::lpg, {3'000.0, 93'000.0}},
      {VesselType::lng, {5'000.0, 40'000.0}},
  };
  double container_m3_per_gt = 3.85;
  MembraneEffortFit membrane_fit;
  IndependentEffortFit independent_fit;
  CgtParamTable params;

  void validate_or_throw() const {
    if (window.length() <= 0) throw ConfigError("generator window is empty");
    auto check_range = [](const Range& r, const std::string& what) {
      if (!(r.min > 0.0) || !(r.max >= r.min)) throw ConfigError("invalid range for " + what);
    };
    check_range(lng.legacy_capacity, "lng.legacy_capacity");
    check_range(lng.large_clip, "lng.large_clip");
    check_range(lng.small_capacity, "lng.small_capacity");
    for (const auto& [t, r] : size_ranges) check_range(r, std::string(to_string(t)));
    if (lng.large_sd < 0.0 || lng.orderbook_sd < 0.0) throw ConfigError("negative standard deviation");
    if (membrane_rel_noise < 0.0 || independent_log_noise < 0.0) throw ConfigError("negative noise level");
    for (double s : {lng.membrane_share_legacy, lng.membrane_share_modern}) {
      if (s < 0.0 || s > 1.0) throw ConfigError("membrane share must lie in [0, 1]");
    }
    for (const auto& c : lng_cohorts) {
      if (c.large < 0 || c.small < 0) throw ConfigError("negative cohort count in " + std::to_string(c.year));
    }
    for (const auto& y : yards) {
      if (y.id.empty()) throw ConfigError("yard without id");
      if (y.lng_history_weight < 0.0) throw ConfigError("negative history weight for " + y.id);
      for (const auto& [t, v] : y.window_targets) {
        if (v < 0.0) throw ConfigError("negative target for " + y.id);
      }
    }
  }
};

namespace detail {

enum class EffortCurve { none, membrane, independent };

struct Draft {
  VesselRecord record;
  double cgt = 0.0;
  std::size_t yard = 0;
  // capacity-based hulls keep their noise draw so capacity can follow a rescaled CGT
  EffortCurve curve = EffortCurve::none;
  double noise = 1.0;
};

// Hands out one unit at a time to the yard with the largest accumulated quota.
class QuotaAllocator {
 public:
  std::size_t next(const std::vector<std::pair<std::size_t, double>>& weights) {
    double total = 0.0;
    for (const auto& [i, w] : weights) total += w;
    for (const auto& [i, w] : weights) quota_[i] += w / total;
    std::size_t best = weights.front().first;
    for (const auto& [i, w] : weights) {
      if (quota_[i] > quota_[best]) best = i;
    }
    quota_[best] -= 1.0;
    return best;
  }

 private:
  std::map<std::size_t, double> quota_;
};

}  // namespace detail

inline std::vector<VesselRecord> generate_synthetic_fleet(const GeneratorConfig& cfg, std::uint64_t seed) {
  cfg.validate_or_throw();
  SplitRng rng(seed);
  std::vector<detail::Draft> drafts;

  double last_noise = 1.0;
  auto membrane_cgt = [&](double cap) {
    last_noise = 1.0 + rng.normal(0.0, cfg.membrane_rel_noise);
    return cgt_from_capacity_membrane(cap, cfg.membrane_fit) * last_noise;
  };
  auto independent_cgt = [&](double cap) {
    last_noise = std::exp(rng.normal(0.0, cfg.independent_log_noise));
    return cgt_from_capacity_independent(cap, cfg.independent_fit) * last_noise;
  };
  auto add = [&](std::size_t yard, VesselType type, TankSystem tank, double cap, double cgt, int year,
                 detail::EffortCurve curve = detail::EffortCurve::none) {
    detail::Draft d;
    d.yard = yard;
    d.cgt = cgt;
    d.curve = curve;
    d.noise = curve == detail::EffortCurve::none ? 1.0 : last_noise;
    d.record.vessel_type = type;
    d.record.tank_system = tank;
    d.record.cargo_capacity_m3 = cap;
    d.record.build_year = year;
    d.record.builder_yard = cfg.yards[yard].id;
    d.record.builder_country = cfg.yards[yard].country;
    drafts.push_back(std::move(d));
  };

  // 1. LNG cohorts
  detail::QuotaAllocator history_quota, modern_quota, small_quota;
  auto cohorts = cfg.lng_cohorts;
  std::sort(cohorts.begin(), cohorts.end(), [](const LngCohort& a, const LngCohort& b) { return a.year < b.year; });
  for (const auto& c : cohorts) {
    const bool historic = c.year < cfg.window.first;
    std::vector<std::pair<std::size_t, double>> large_w, small_w;
    for (std::size_t i = 0; i < cfg.yards.size(); ++i) {
      const auto& y = cfg.yards[i];
      if (!y.active_in(c.year)) continue;
      if (y.small_lng_builder) {
        small_w.emplace_back(i, std::max(y.target(VesselType::lng), 1.0));
      } else if (c.year <= y.large_lng_until &&
                 (historic ? y.lng_history_weight > 0.0 : y.target(VesselType::lng) > 0.0)) {
        large_w.emplace_back(i, historic ? y.lng_history_weight : y.target(VesselType::lng));
      }
    }
    if (c.large > 0 && large_w.empty()) throw ConfigError("no yard can take large LNG cohort " + std::to_string(c.year));
    if (c.small > 0 && small_w.empty()) throw ConfigError("no yard can take small LNG cohort " + std::to_string(c.year));
    for (int k = 0; k < c.large; ++k) {
      const std::size_t yard = historic ? history_quota.next(large_w) : modern_quota.next(large_w);
      double cap;
      TankSystem tank;
      if (c.year < cfg.lng.bimodal_from) {
        cap = rng.uniform(cfg.lng.legacy_capacity.min, cfg.lng.legacy_capacity.max);
        tank = rng.uniform() < cfg.lng.membrane_share_legacy ? TankSystem::membrane : TankSystem::independent;
      } else if (c.year > cfg.data_year) {
        cap = std::clamp(rng.normal(cfg.lng.orderbook_mean, cfg.lng.orderbook_sd), cfg.lng.large_clip.min,
                         cfg.lng.large_clip.max);
        tank = TankSystem::membrane;
      } else {
        cap = std::clamp(rng.normal(cfg.lng.large_mean, cfg.lng.large_sd), cfg.lng.large_clip.min,
                         cfg.lng.large_clip.max);
        tank = rng.uniform() < cfg.lng.membrane_share_modern ? TankSystem::membrane : TankSystem::independent;
      }
      cap = std::round(cap);
      add(yard, VesselType::lng, tank, cap, membrane_cgt(cap), c.year, detail::EffortCurve::membrane);
    }
    for (int k = 0; k < c.small; ++k) {
      const std::size_t yard = small_quota.next(small_w);
      const double cap = std::round(rng.uniform(cfg.lng.small_capacity.min, cfg.lng.small_capacity.max));
      add(yard, VesselType::lng, TankSystem::independent, cap, independent_cgt(cap), c.year,
          detail::EffortCurve::independent);
    }
  }

  // 2. other vessel types inside the window
  auto typical_cgt = [&](VesselType t) {
    const auto& r = cfg.size_ranges.at(t);
    const double mid = 0.5 * (r.min + r.max);
    if (t == VesselType::lpg) return cgt_from_capacity_independent(mid, cfg.independent_fit);
    return cgt_from_gt(mid, cfg.params[t]);
  };
  for (std::size_t i = 0; i < cfg.yards.size(); ++i) {
    const auto& y = cfg.yards[i];
    const int first = std::max(cfg.window.first, y.active_from);
    const int last = std::min(cfg.window.last, y.active_until);
    for (const auto& [type, target] : y.window_targets) {
      if (type == VesselType::lng || target <= 0.0) continue;
      if (first > last) throw ConfigError("yard " + y.id + " has a window target but is not active in the window");
      const auto n = std::max<long>(1, std::lround(target * cfg.window.length() / typical_cgt(type)));
      const auto& range = cfg.size_ranges.at(type);
      for (long k = 0; k < n; ++k) {
        const int year = rng.uniform_int(first, last);
        if (type == VesselType::lpg) {
          const double cap = std::round(rng.uniform(range.min, range.max));
          add(i, type, TankSystem::independent, cap, independent_cgt(cap), year, detail::EffortCurve::independent);
        } else {
          const double gt = rng.uniform(range.min, range.max);
          const double cap = type == VesselType::container ? std::round(gt * cfg.container_m3_per_gt) : 0.0;
          const TankSystem tank = type == VesselType::container || type == VesselType::other ? TankSystem::other
                                                                                               : TankSystem::independent;
          add(i, type, tank, cap, cgt_from_gt(gt, cfg.params[type]), year);
        }
      }
    }
  }

  // 3. rescale each (yard, type) group in the window to its target
  std::map<std::pair<std::size_t, VesselType>, double> sums;
  for (const auto& d : drafts) {
    if (cfg.window.contains(d.record.build_year)) sums[{d.yard, d.record.vessel_type}] += d.cgt;
  }
  for (std::size_t i = 0; i < cfg.yards.size(); ++i) {
    for (const auto& [type, target] : cfg.yards[i].window_targets) {
      if (target <= 0.0) continue;
      const auto it = sums.find({i, type});
      if (it == sums.end()) {
        throw ConfigError("yard " + cfg.yards[i].id + " received no " + std::string(to_string(type)) +
                          " vessels in the window; raise the cohort counts");
      }
      const double factor = target * cfg.window.length() / it->second;
      for (auto& d : drafts) {
        if (d.yard != i || d.record.vessel_type != type || !cfg.window.contains(d.record.build_year)) continue;
        d.cgt *= factor;
        // move capacity along the effort curve so the hull stays on it
        const double clean = d.cgt / d.noise;
        if (d.curve == detail::EffortCurve::membrane) {
          d.record.cargo_capacity_m3 =
              std::round((clean - cfg.membrane_fit.intercept) / cfg.membrane_fit.slope);
        } else if (d.curve == detail::EffortCurve::independent) {
          d.record.cargo_capacity_m3 =
              std::round(std::pow(clean / cfg.independent_fit.scale, 1.0 / cfg.independent_fit.exponent));
        }
      }
    }
  }

  // 4. every yard still operating must show a delivery in the activity period
  for (std::size_t i = 0; i < cfg.yards.size(); ++i) {
    const auto& y = cfg.yards[i];
    if (y.active_until < cfg.activity_from) continue;
    bool seen = false;
    detail::Draft* movable = nullptr;
    for (auto& d : drafts) {
      if (d.yard != i) continue;
      if (d.record.build_year >= cfg.activity_from && d.record.build_year <= cfg.data_year) seen = true;
      if (cfg.window.contains(d.record.build_year) && (movable == nullptr || d.record.vessel_type != VesselType::lng)) {
        movable = &d;
      }
    }
    if (!seen && movable != nullptr) movable->record.build_year = std::min(cfg.activity_year, y.active_until);
  }

  std::vector<VesselRecord> out;
  out.reserve(drafts.size());
  for (auto& d : drafts) {
    d.record.gross_tonnage = std::max(100.0, std::round(gt_from_cgt(d.cgt, cfg.params[d.record.vessel_type])));
    out.push_back(std::move(d.record));
  }
  std::stable_sort(out.begin(), out.end(), [](const VesselRecord& a, const VesselRecord& b) {
    return std::tie(a.build_year, a.builder_yard) < std::tie(b.build_year, b.builder_yard);
  });
  for (std::size_t k = 0; k < out.size(); ++k) out[k].imo_id = "IMO" + std::to_string(9'100'001 + k);
  return out;
}

// ---------------------------------------------------------------------------
// JSON configuration

inline VesselType vessel_type_from_json(const std::string& s) {
  const auto t = parse_vessel_type(s);
  if (!t) throw ConfigError("unknown vessel type '" + s + "'");
  return *t;
}

inline GeneratorConfig generator_config_from_json(const nlohmann::json& j) {
  GeneratorConfig cfg;
  try {
    cfg.seed = j.value("seed", cfg.seed);
    cfg.data_year = j.value("data_year", cfg.data_year);
    if (j.contains("window")) cfg.window = {j.at("window").at(0).get<int>(), j.at("window").at(1).get<int>()};
    cfg.activity_from = j.value("activity_from", cfg.activity_from);
    cfg.activity_year = j.value("activity_year", cfg.activity_year);
    cfg.membrane_rel_noise = j.value("membrane_rel_noise", cfg.membrane_rel_noise);
    cfg.independent_log_noise = j.value("independent_log_noise", cfg.independent_log_noise);
    cfg.container_m3_per_gt = j.value("container_m3_per_gt", cfg.container_m3_per_gt);
    auto range = [](const nlohmann::json& r) { return Range{r.at(0).get<double>(), r.at(1).get<double>()}; };
    if (j.contains("lng_sizes")) {
      const auto& s = j.at("lng_sizes");
      auto& m = cfg.lng;
      if (s.contains("legacy_capacity")) m.legacy_capacity = range(s.at("legacy_capacity"));
      m.bimodal_from = s.value("bimodal_from", m.bimodal_from);
      m.large_mean = s.value("large_mean", m.large_mean);
      m.large_sd = s.value("large_sd", m.large_sd);
      if (s.contains("large_clip")) m.large_clip = range(s.at("large_clip"));
      m.orderbook_mean = s.value("orderbook_mean", m.orderbook_mean);
      m.orderbook_sd = s.value("orderbook_sd", m.orderbook_sd);
      if (s.contains("small_capacity")) m.small_capacity = range(s.at("small_capacity"));
      m.membrane_share_legacy = s.value("membrane_share_legacy", m.membrane_share_legacy);
      m.membrane_share_modern = s.value("membrane_share_modern", m.membrane_share_modern);
    }
    if (j.contains("size_ranges")) {
      for (const auto& [k, v] : j.at("size_ranges").items()) cfg.size_ranges[vessel_type_from_json(k)] = range(v);
    }
    if (j.contains("lng_cohorts")) {
      for (const auto& c : j.at("lng_cohorts")) {
        cfg.lng_cohorts.push_back({c.at(0).get<int>(), c.at(1).get<int>(), c.size() > 2 ? c.at(2).get<int>() : 0});
      }
    }
    if (j.contains("yards")) {
      for (const auto& y : j.at("yards")) {
        GeneratorYard g;
        g.id = y.at("id").get<std::string>();
        g.country = y.at("country").get<std::string>();
        g.active_from = y.value("active_from", g.active_from);
        g.active_until = y.value("active_until", g.active_until);
        g.lng_history_weight = y.value("lng_history_weight", 0.0);
        g.large_lng_until = y.value("large_lng_until", g.large_lng_until);
        g.small_lng_builder = y.value("small_lng_builder", false);
        if (y.contains("targets")) {
          for (const auto& [k, v] : y.at("targets").items()) g.window_targets[vessel_type_from_json(k)] = v.get<double>();
        }
        cfg.yards.push_back(std::move(g));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("generator config: ") + e.what());
  }
  cfg.validate_or_throw();
  return cfg;
}

inline GeneratorConfig load_generator_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open generator config '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("generator config '" + path + "': " + e.what());
  }
  return generator_config_from_json(j);
}

}  // namespace shipcap
