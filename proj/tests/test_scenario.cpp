#include <gtest/gtest.h>

#include <cmath>

#include "json.hpp"
#include "shipcap/scenario.hpp"
#include "support.hpp"

using namespace shipcap;
using testsupport::rel;

namespace {

// Hand-derived per-hull figures
constexpr double kCgtLh2 = 0.3 * 174'457.0 + 36'087.8;  // 88,424.9
constexpr double kCgtLng = 0.3 * 160'000.0 + 36'087.8;  // 84,087.8
const double kCgtLnh3 = 126.97 * std::pow(160'000.0, 0.48);
constexpr double kLh2eqLnh3 = 190'217.0;
constexpr double kCargo = 160'000.0;
constexpr double kBasePool = 3'993'414.0;

const nlohmann::json& reference() {
  static const auto j = nlohmann::json::parse(testsupport::slurp(testsupport::data_dir() / "reference_tables.json"));
  return j;
}

const nlohmann::json& ref_scenario(ScenarioKind k) { return reference()["scenarios"][std::string(to_string(k))]; }

ScenarioResult run(ScenarioKind k) { return run_scenario(preset(k)); }

// Capacity of a portfolio with n LNH3 hulls, the rest of the LH2 pool spent on LH2 hulls.
double resimulate(const ScenarioResult& r, int year, long n) {
  double pool_lh2 = 0.0;
  for (const auto& w : r.windows) {
    if (w.window.end_year <= year) pool_lh2 += w.window.pool_lh2;
  }
  return n * kLh2eqLnh3 + (pool_lh2 - n * kCgtLnh3) / kCgtLh2 * kCargo;
}

}  // namespace

TEST(AvailableYears, DeliveryStartClipsFirstWindow) {
  EXPECT_EQ(available_years(2030, 5, 2028), 3);
  EXPECT_EQ(available_years(2030, 5, 2027), 4);
  EXPECT_EQ(available_years(2035, 5, 2028), 5);
  EXPECT_EQ(available_years(2025, 5, 2028), 0);
  EXPECT_EQ(available_years(2030, 5, 0), 5);
}

TEST(Windows, LngFirstPools) {
  const auto w = build_windows(preset(ScenarioKind::lng_first));
  ASSERT_EQ(w.size(), 5u);
  EXPECT_NEAR(w[0].pool_lh2, 3 * kBasePool, 1e-6);
  EXPECT_NEAR(w[0].pool_lnh3, 4 * kBasePool, 1e-6);
  for (int i = 1; i < 4; ++i) {
    EXPECT_NEAR(w[i].pool_lh2, 5 * kBasePool, 1e-6);
    EXPECT_NEAR(w[i].pool_lnh3, 5 * kBasePool, 1e-6);
  }
  EXPECT_NEAR(w[4].pool_lh2, 5 * kBasePool - 171 * kCgtLng, 1e-4);
  EXPECT_NEAR(w[4].deduction_lh2, 171 * kCgtLng, 1e-4);
}

TEST(Windows, PublishedPoolsWithinTolerance) {
  // The last LNG-first window prices replacement hulls at the fitted LNG CGT,
  // which lands 0.3% under the published pool.
  for (auto k : kAllScenarios) {
    const auto& ref = ref_scenario(k);
    const auto w = build_windows(preset(k));
    for (const auto& win : w) {
      const auto key = std::to_string(win.end_year);
      const double lh2 = ref["pool_lh2"][key].get<double>();
      const double lnh3 = ref["pool_lnh3"][key].get<double>();
      // published pools keep the sign of an over-committed window
      EXPECT_LT(rel(win.raw_pool_lh2 / 1e6, lh2), 0.005) << to_string(k) << " " << key;
      EXPECT_LT(rel(win.raw_pool_lnh3 / 1e6, lnh3), 0.005) << to_string(k) << " " << key;
    }
  }
}

TEST(Windows, ContainerDeductionScalesWithYearsAndClamps) {
  const auto w = build_windows(preset(ScenarioKind::container_inclusion));
  EXPECT_NEAR(w[0].deduction_lh2, 3 * 2.73e6, 1e-6);
  EXPECT_NEAR(w[0].deduction_lnh3, 4 * 2.73e6, 1e-6);
  // the last window cannot absorb replacement hulls on top of container ships
  EXPECT_LT(w[4].raw_pool_lh2, 0.0);
  EXPECT_EQ(w[4].pool_lh2, 0.0);
  EXPECT_EQ(w[4].pool_lnh3, 0.0);
  for (const auto& x : w) {
    EXPECT_EQ(x.pool_lh2, std::max(0.0, x.raw_pool_lh2));
    EXPECT_EQ(x.pool_lnh3, std::max(0.0, x.raw_pool_lnh3));
  }
}

TEST(Windows, CrudeOilChargedFrom2040) {
  const auto w = build_windows(preset(ScenarioKind::crude_oil_inclusion));
  const double annual = kBasePool + 2'120'001.0;
  EXPECT_NEAR(w[1].pool_lh2, 5 * annual, 1e-6);
  EXPECT_NEAR(w[2].pool_lh2, 5 * annual - 1.75e6, 1e-6);
  EXPECT_NEAR(w[4].pool_lh2, 5 * annual - 1.75e6 - 171 * kCgtLng, 1e-4);
}

TEST(Windows, LowerDemandScheduleDeductions) {
  const auto w = build_windows(preset(ScenarioKind::lower_hydrogen_demand));
  EXPECT_NEAR(w[1].deduction_lh2, 121 * kCgtLng, 1e-4);
  EXPECT_NEAR(w[2].deduction_lh2, 40 * kCgtLng, 1e-4);
  EXPECT_EQ(w[3].deduction_lh2, 0.0);
  EXPECT_NEAR(w[4].deduction_lh2, 115 * kCgtLng, 1e-4);
}

TEST(Bounds, ContinuousCapacityAndFlooredCounts) {
  const auto r = run(ScenarioKind::lng_first);
  for (const auto& w : r.windows) {
    EXPECT_NEAR(w.bounds.max_lh2_capacity, w.window.pool_lh2 / kCgtLh2 * kCargo, 1e-3);
    EXPECT_NEAR(w.bounds.max_lnh3_capacity, w.window.pool_lnh3 / kCgtLnh3 * kLh2eqLnh3, 1e-2);
    EXPECT_EQ(w.bounds.max_lh2_count, static_cast<long>(std::floor(w.window.pool_lh2 / kCgtLh2)));
    EXPECT_EQ(w.bounds.max_lnh3_count, static_cast<long>(std::floor(w.window.pool_lnh3 / kCgtLnh3)));
  }
}

TEST(Bounds, PublishedCapacitiesAndCounts) {
  // the published counts come from rounded intermediate figures; a hull either way is accepted
  const auto& tol = reference()["tolerances"];
  for (auto k : kAllScenarios) {
    // the published repurpose block repeats the LNG-first capacity rows; the report flags them
    if (k == ScenarioKind::repurpose_shipyards) continue;
    const auto& ref = ref_scenario(k);
    const auto r = run(k);
    for (const auto& w : r.windows) {
      const auto key = std::to_string(w.window.end_year);
      const double lh2 = ref["max_lh2_capacity"][key].get<double>();
      if (lh2 > 0.0 && w.window.end_year < 2050) {
        EXPECT_LT(rel(w.bounds.max_lh2_capacity / 1e6, lh2), 0.005) << to_string(k) << " " << key;
      }
      if (w.window.end_year < 2050 && k != ScenarioKind::container_inclusion) {
        EXPECT_NEAR(w.bounds.max_lh2_count, ref["max_lh2_count"][key].get<double>(), tol["count"].get<double>())
            << to_string(k) << " " << key;
      }
    }
  }
}

TEST(Cumulative, RunningSumsAndDominance) {
  for (auto k : kAllScenarios) {
    const auto r = run(k);
    double lo = 0.0, hi = 0.0;
    ASSERT_EQ(r.cumulative.size(), r.windows.size());
    for (std::size_t i = 0; i < r.windows.size(); ++i) {
      lo += r.windows[i].bounds.max_lh2_capacity;
      hi += r.windows[i].bounds.max_lnh3_capacity;
      EXPECT_NEAR(r.cumulative[i].lower, lo, 1e-6);
      EXPECT_NEAR(r.cumulative[i].upper, hi, 1e-6);
      EXPECT_GE(r.cumulative[i].upper, r.cumulative[i].lower);
      if (i > 0) {
        EXPECT_GE(r.cumulative[i].lower, r.cumulative[i - 1].lower);
      }
    }
  }
}

TEST(Cumulative, MixIsConvexCombination) {
  const auto r = run(ScenarioKind::lng_first);
  for (const auto& c : r.cumulative) {
    EXPECT_DOUBLE_EQ(c.at(0.0), c.lower);
    EXPECT_DOUBLE_EQ(c.at(1.0), c.upper);
    EXPECT_NEAR(c.at(0.5), 0.5 * (c.lower + c.upper), 1e-6);
    for (double f = 0.0; f <= 1.0; f += 0.1) {
      EXPECT_GE(c.at(f) + 1e-6, c.lower);
      EXPECT_LE(c.at(f) - 1e-6, c.upper);
    }
  }
  EXPECT_THROW(cumulative_bounds(r, 2032), RangeError);
  EXPECT_EQ(cumulative_bounds(r, 2035).year, 2035);
}

TEST(Gap, IsShortfallOfAllLh2Portfolio) {
  for (auto k : kAllScenarios) {
    const auto r = run(k);
    for (const auto& c : r.cumulative) {
      EXPECT_NEAR(r.gap.at(c.year), std::max(0.0, r.demand.at(c.year) - c.lower), 1e-6);
      EXPECT_GE(r.gap.at(c.year), 0.0);
    }
  }
  const auto r = run(ScenarioKind::lng_first);
  EXPECT_THROW(transport_gap(r, {{2030, 1.0}}), RangeError);
}

TEST(Gap, PublishedGapsWhereAttainable) {
  for (auto k : kAllScenarios) {
    const auto& ref = ref_scenario(k)["gap"];
    const auto r = run(k);
    for (const auto& [key, v] : ref.items()) {
      const double published = v.get<double>();
      const double got = r.gap.at(std::stoi(key)) / 1e6;
      // the 0.05 lower-demand cell is a difference of rounded figures; covered by the acceptance run
      if (k == ScenarioKind::lower_hydrogen_demand && key == "2035") continue;
      if (published == 0.0) {
        EXPECT_EQ(got, 0.0) << to_string(k) << " " << key;
      } else {
        EXPECT_LT(rel(got, published), 0.005) << to_string(k) << " " << key;
      }
    }
  }
}

TEST(MinLnh3, NetGainPerHull) {
  const auto r = run(ScenarioKind::lng_first);
  EXPECT_NEAR(lnh3_net_gain(r.lh2_spec, r.lnh3_spec), kLh2eqLnh3 - kCgtLnh3 / kCgtLh2 * kCargo, 1e-6);
  EXPECT_NEAR(lnh3_net_gain(r.lh2_spec, r.lnh3_spec), 117'902.7, 0.5);
}

TEST(MinLnh3, MatchesResimulationOracle) {
  for (auto k : kAllScenarios) {
    const auto r = run(k);
    for (const auto& c : r.cumulative) {
      const auto m = r.min_lnh3.at(c.year);
      const double d = r.demand.at(c.year);
      if (c.upper < d) {
        EXPECT_FALSE(m.feasible) << to_string(k) << " " << c.year;
        continue;
      }
      ASSERT_TRUE(m.feasible) << to_string(k) << " " << c.year;
      long n = 0;
      while (resimulate(r, c.year, n) < d) ++n;
      EXPECT_EQ(m.count, n) << to_string(k) << " " << c.year;
      if (n > 0) {
        EXPECT_LT(resimulate(r, c.year, n - 1), d);
      }
    }
  }
}

TEST(MinLnh3, PublishedCounts) {
  const double tol = reference()["tolerances"]["min_lnh3"].get<double>();
  for (auto k : kAllScenarios) {
    const auto r = run(k);
    for (const auto& [key, v] : ref_scenario(k)["min_lnh3"].items()) {
      const auto m = r.min_lnh3.at(std::stoi(key));
      if (v.is_string()) {
        EXPECT_FALSE(m.feasible) << to_string(k) << " " << key;
      } else {
        ASSERT_TRUE(m.feasible) << to_string(k) << " " << key;
        EXPECT_NEAR(m.count, v.get<double>(), tol) << to_string(k) << " " << key;
      }
    }
  }
}

TEST(MinLnh3, TwoPoolNeverNeedsMore) {
  for (auto k : kAllScenarios) {
    const auto r = run(k);
    for (const auto& [y, m] : r.min_lnh3) {
      const auto& t = r.min_lnh3_two_pool.at(y);
      EXPECT_EQ(t.feasible, m.feasible);
      if (m.feasible) {
        EXPECT_LE(t.count, m.count) << to_string(k) << " " << y;
      }
    }
  }
}

TEST(MinLnh3, ZeroWhenNoGap) {
  const auto r = run(ScenarioKind::crude_oil_inclusion);
  EXPECT_EQ(r.gap.at(2035), 0.0);
  EXPECT_TRUE(r.min_lnh3.at(2035).feasible);
  EXPECT_EQ(r.min_lnh3.at(2035).count, 0);
}

TEST(Bottleneck, LngFirstResolvesAround2039) {
  const auto r = run(ScenarioKind::lng_first);
  const auto& b = r.bottleneck_lh2_only;
  EXPECT_TRUE(b.shortage);
  EXPECT_DOUBLE_EQ(b.start, 2030.0);
  ASSERT_TRUE(b.resolve_crossing.has_value());
  EXPECT_GT(*b.resolve_crossing, 2035.0);
  EXPECT_LT(*b.resolve_crossing, 2040.0);
  EXPECT_EQ(*b.resolve_year, 2039);
}

TEST(Bottleneck, CrossingMatchesDenseScan) {
  for (auto k : kAllScenarios) {
    const auto r = run(k);
    const auto& b = r.bottleneck_lh2_only;
    if (!b.resolve_crossing) continue;
    // sample the piecewise-linear difference on a fine grid
    double found = 0.0;
    bool below = false;
    for (std::size_t i = 1; i < r.cumulative.size() && found == 0.0; ++i) {
      const auto& a = r.cumulative[i - 1];
      const auto& c = r.cumulative[i];
      const double da = a.lower - r.demand.at(a.year), dc = c.lower - r.demand.at(c.year);
      for (int s = 0; s <= 5000; ++s) {
        const double t = s / 5000.0;
        const double v = da + t * (dc - da);
        if (v < 0.0) below = true;
        if (below && v >= 0.0) {
          found = a.year + t * (c.year - a.year);
          break;
        }
      }
    }
    EXPECT_NEAR(*b.resolve_crossing, found, 0.002) << to_string(k);
  }
}

TEST(Bottleneck, PublishedResolveYears) {
  const double tol = reference()["tolerances"]["year"].get<double>();
  for (auto k : kAllScenarios) {
    if (!ref_scenario(k).contains("bottleneck_resolve_year")) continue;
    const auto& ref = ref_scenario(k)["bottleneck_resolve_year"];
    const auto r = run(k);
    if (ref.is_null()) continue;
    ASSERT_TRUE(r.bottleneck_lh2_only.resolve_year.has_value()) << to_string(k);
    EXPECT_NEAR(*r.bottleneck_lh2_only.resolve_year, ref.get<double>(), tol) << to_string(k);
  }
}

TEST(Bottleneck, ContainerNeverResolves) {
  const auto r = run(ScenarioKind::container_inclusion);
  EXPECT_TRUE(r.bottleneck_lh2_only.shortage);
  EXPECT_FALSE(r.bottleneck_lh2_only.resolve_crossing.has_value());
  const auto all_lnh3 = bottleneck_interval(r, r.demand, 1.0);
  EXPECT_TRUE(all_lnh3.shortage);
}

TEST(Bottleneck, AllLnh3LngFirstHasNoShortage) {
  const auto r = run(ScenarioKind::lng_first);
  EXPECT_FALSE(bottleneck_interval(r, r.demand, 1.0).shortage);
}

TEST(Bottleneck, LaterShortageStartsAtInterpolatedCrossing) {
  ScenarioResult r;
  r.cumulative = {{2030, 10.0, 10.0}, {2035, 10.0, 10.0}, {2040, 30.0, 30.0}};
  const std::map<int, double> demand{{2030, 5.0}, {2035, 15.0}, {2040, 20.0}};
  const auto b = bottleneck_interval(r, demand, 0.0);
  EXPECT_TRUE(b.shortage);
  EXPECT_DOUBLE_EQ(b.start, 2032.5);
  ASSERT_TRUE(b.resolve_crossing);
  EXPECT_DOUBLE_EQ(*b.resolve_crossing, 2035.0 + 5.0 * (5.0 / 15.0));
}

TEST(Bottleneck, FractionValidated) {
  const auto r = run(ScenarioKind::lng_first);
  EXPECT_THROW(bottleneck_interval(r, r.demand, -0.1), DomainError);
  EXPECT_THROW(bottleneck_interval(r, r.demand, 1.1), DomainError);
}

TEST(Bottleneck, MoreLnh3NeverResolvesLater) {
  const auto r = run(ScenarioKind::lng_first);
  double prev = 1e9;
  for (double f = 0.0; f <= 0.5; f += 0.05) {
    const auto b = bottleneck_interval(r, r.demand, f);
    const double when = !b.shortage ? 0.0 : b.resolve_crossing.value_or(1e9);
    EXPECT_LE(when, prev + 1e-9) << f;
    prev = when;
  }
}

TEST(SmallLnh3, StandardSizeVariantEqualsBase) {
  auto c = preset(ScenarioKind::lng_first);
  c.small_lnh3_spec = c.lnh3_spec;
  const auto v = small_lnh3_variant(c);
  auto base = run_scenario(c);
  base.name = v.result.name;
  EXPECT_EQ(v.result, base);
}

TEST(SmallLnh3, PerHullFigures) {
  const auto c = preset(ScenarioKind::lng_first);
  EXPECT_NEAR(c.small_lnh3_spec.cgt, 126.97 * std::pow(93'000.0, 0.48), 1e-6);
  EXPECT_NEAR(c.small_lnh3_spec.lh2eq_per_tanker_m3, 93'000.0 * 190'217.0 / 160'000.0, 1e-6);
  // smaller hulls deliver less LH2eq per CGT
  EXPECT_LT(c.small_lnh3_spec.lh2eq_per_tanker_m3 / c.small_lnh3_spec.cgt,
            c.lnh3_spec.lh2eq_per_tanker_m3 / c.lnh3_spec.cgt);
}

TEST(SmallLnh3, UpperBoundsOracle) {
  const auto c = preset(ScenarioKind::lng_first);
  const auto v = small_lnh3_variant(c);
  const double per_cgt = 93'000.0 * 190'217.0 / 160'000.0 / (126.97 * std::pow(93'000.0, 0.48));
  EXPECT_NEAR(v.result.cumulative[0].upper, 4 * kBasePool * per_cgt, 1.0);
  for (const auto& cb : v.result.cumulative) EXPECT_EQ(v.feasible.at(cb.year), cb.upper >= v.result.demand.at(cb.year));
}

TEST(Monotonicity, LargerPoolNeverHurts) {
  auto c = preset(ScenarioKind::lng_first);
  const auto base = run_scenario(c);
  c.pool_addition_cgt_per_year = 500'000.0;
  const auto more = run_scenario(c);
  for (std::size_t i = 0; i < base.cumulative.size(); ++i) {
    EXPECT_GE(more.cumulative[i].lower, base.cumulative[i].lower);
    EXPECT_GE(more.cumulative[i].upper, base.cumulative[i].upper);
    const int y = base.cumulative[i].year;
    EXPECT_LE(more.gap.at(y), base.gap.at(y));
    if (base.min_lnh3.at(y).feasible) {
      EXPECT_LE(more.min_lnh3.at(y).count, base.min_lnh3.at(y).count);
    }
  }
}

TEST(Monotonicity, HigherDemandNeverShrinksGap) {
  auto c = preset(ScenarioKind::lng_first);
  const auto base = run_scenario(c);
  c.hydrogen_demand = c.hydrogen_demand.scaled(1.2);
  const auto more = run_scenario(c);
  for (const auto& [y, g] : base.gap) EXPECT_GE(more.gap.at(y), g);
  EXPECT_EQ(more.cumulative, base.cumulative);
}

TEST(Monotonicity, MoreDeductionsNeverHelp) {
  auto c = preset(ScenarioKind::lng_first);
  const auto base = run_scenario(c);
  c.lng_newbuild_tankers[2040] = 50.0;
  const auto less = run_scenario(c);
  for (std::size_t i = 0; i < base.cumulative.size(); ++i) {
    EXPECT_LE(less.cumulative[i].lower, base.cumulative[i].lower + 1e-6);
  }
}

TEST(ScenarioRelations, HydrogenPriorityEqualsLngFirstThrough2045) {
  const auto a = run(ScenarioKind::lng_first);
  const auto b = run(ScenarioKind::hydrogen_priority);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_EQ(a.windows[i], b.windows[i]);
    EXPECT_EQ(a.cumulative[i], b.cumulative[i]);
  }
  EXPECT_GT(b.windows[4].window.pool_lh2, a.windows[4].window.pool_lh2);
  EXPECT_EQ(a.gap, b.gap);
}

TEST(ScenarioRelations, ExtraPoolScenariosDominateLngFirst) {
  const auto base = run(ScenarioKind::lng_first);
  for (auto k : {ScenarioKind::repurpose_shipyards, ScenarioKind::crude_oil_inclusion}) {
    const auto r = run(k);
    for (std::size_t i = 0; i < 2; ++i) EXPECT_GT(r.cumulative[i].lower, base.cumulative[i].lower);
  }
  const auto cont = run(ScenarioKind::container_inclusion);
  for (std::size_t i = 0; i < base.cumulative.size(); ++i) {
    EXPECT_LT(cont.cumulative[i].upper, base.cumulative[i].upper);
  }
}

TEST(ScenarioConfigFiles, ShippedFilesReproducePresets) {
  const auto model = load_model_constants((testsupport::config_dir() / "model.cfg").string());
  for (auto k : kAllScenarios) {
    const auto path = testsupport::config_dir() / "scenarios" / (std::string(to_string(k)) + ".cfg");
    const auto c = load_scenario_config(path, model);
    EXPECT_EQ(c.kind, k);
    EXPECT_EQ(run_scenario(c), run_scenario(preset(k, model))) << path;
    if (k != ScenarioKind::hydrogen_priority) {
      EXPECT_TRUE(c.lng_demand_series.has_value()) << path;
    }
  }
}

TEST(ScenarioConfigFiles, ModelFileMatchesDefaults) {
  const auto model = load_model_constants((testsupport::config_dir() / "model.cfg").string());
  const ModelConstants defaults;
  EXPECT_NEAR(model.lh2_spec().cgt, defaults.lh2_spec().cgt, 1e-9);
  EXPECT_NEAR(model.lnh3_spec().cgt, defaults.lnh3_spec().cgt, 1e-9);
  EXPECT_NEAR(model.lnh3_spec().lh2eq_per_tanker_m3, 190'217.0, 1e-6);
  EXPECT_NEAR(model.lng_spec().cgt, kCgtLng, 1e-9);
}

TEST(ScenarioConfigFiles, OverridesAndErrors) {
  const auto kv = KeyValueFile::from_string(
      "kind = lng_first\nname = custom\npool_addition_cgt_per_year = 1000\nwindow_ends = 2030, 2035\n"
      "lnh3_capacity_m3 = 93000\nlng_newbuild_tankers = 2035:10\n");
  const auto c = scenario_config_from_kv(kv);
  EXPECT_EQ(c.name, "custom");
  EXPECT_EQ(c.window_ends, (std::vector<int>{2030, 2035}));
  EXPECT_DOUBLE_EQ(c.pool_addition_cgt_per_year, 1000.0);
  EXPECT_DOUBLE_EQ(c.lnh3_spec.cargo_capacity_m3, 93'000.0);
  EXPECT_EQ(c.lng_newbuild_tankers.size(), 1u);

  EXPECT_THROW(scenario_config_from_kv(KeyValueFile::from_string("kind = bogus\n")), ConfigError);
  EXPECT_THROW(scenario_config_from_kv(KeyValueFile::from_string("name = x\n")), ConfigError);
  EXPECT_THROW(scenario_config_from_kv(KeyValueFile::from_string("kind = lng_first\nwindow_ends = 2035, 2030\n")),
               ConfigError);
  EXPECT_THROW(scenario_config_from_kv(KeyValueFile::from_string("kind = lng_first\nwindow_ends = 2030, soon\n")),
               ConfigError);
  EXPECT_THROW(scenario_config_from_kv(KeyValueFile::from_string("kind = lng_first\nwindow_length = 0\n")), ConfigError);
  EXPECT_THROW(
      scenario_config_from_kv(KeyValueFile::from_string("kind = lng_first\nhydrogen_demand = nze_lng.cfg\n"),
                              testsupport::config_dir() / "demand"),
      ConfigError);
  EXPECT_THROW(scenario_config_from_kv(KeyValueFile::from_string("kind = lng_first\nhydrogen_demand = missing.cfg\n"),
                                       testsupport::config_dir()),
               IoError);
  EXPECT_THROW(load_scenario_config("/nonexistent/s.cfg"), IoError);
}

TEST(ScenarioNames, ParseRoundTrip) {
  for (auto k : kAllScenarios) EXPECT_EQ(parse_scenario_kind(to_string(k)), k);
  EXPECT_FALSE(parse_scenario_kind("all").has_value());
  EXPECT_NE(scenario_names().find("container_inclusion"), std::string::npos);
}

TEST(NewbuildWindows, BucketsByWindow) {
  const NewbuildSchedule s{{2045, 3}, {2046, 4}, {2050, 5}, {2031, 1}, {2036, 0}};
  const auto w = newbuilds_by_window(s, {2030, 2035, 2040, 2045, 2050}, 5);
  EXPECT_EQ(w.size(), 3u);
  EXPECT_DOUBLE_EQ(w.at(2035), 1.0);
  EXPECT_DOUBLE_EQ(w.at(2045), 3.0);
  EXPECT_DOUBLE_EQ(w.at(2050), 9.0);
}
