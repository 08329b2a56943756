#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "shipcap/synthetic.hpp"
#include "support.hpp"

using namespace shipcap;

namespace {

GeneratorConfig reference_config() {
  return load_generator_config((testsupport::config_dir() / "fleet_reference.json").string());
}

std::string as_csv(const std::vector<VesselRecord>& fleet) {
  std::ostringstream out;
  write_fleet_csv(out, fleet);
  return out.str();
}

}  // namespace

TEST(SplitRng, DeterministicPerSeed) {
  SplitRng a(1), b(1), c(2);
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform();
    EXPECT_EQ(x, b.uniform());
    EXPECT_GE(x, 0.0);
    EXPECT_LT(x, 1.0);
  }
  SplitRng d(1);
  int same = 0;
  for (int i = 0; i < 100; ++i) same += d.uniform() == c.uniform();
  EXPECT_LT(same, 3);
}

TEST(SplitRng, UniformIntStaysInRange) {
  SplitRng r(9);
  std::set<int> seen;
  for (int i = 0; i < 1000; ++i) {
    const int v = r.uniform_int(3, 7);
    EXPECT_GE(v, 3);
    EXPECT_LE(v, 7);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(SplitRng, NormalMoments) {
  SplitRng r(11);
  double s = 0.0, sq = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    const double x = r.normal(5.0, 2.0);
    s += x;
    sq += x * x;
  }
  const double mean = s / n;
  EXPECT_NEAR(mean, 5.0, 0.05);
  EXPECT_NEAR(std::sqrt(sq / n - mean * mean), 2.0, 0.05);
}

TEST(SyntheticFleet, SameSeedSameBytes) {
  const auto cfg = reference_config();
  EXPECT_EQ(as_csv(generate_synthetic_fleet(cfg, cfg.seed)), as_csv(generate_synthetic_fleet(cfg, cfg.seed)));
}

TEST(SyntheticFleet, CommittedFixtureMatchesGenerator) {
  const auto cfg = reference_config();
  EXPECT_EQ(as_csv(generate_synthetic_fleet(cfg, cfg.seed)),
            testsupport::slurp(testsupport::data_dir() / "fleet_reference.csv"));
}

TEST(SyntheticFleet, DifferentSeedDifferentFleet) {
  const auto cfg = reference_config();
  EXPECT_NE(as_csv(generate_synthetic_fleet(cfg, cfg.seed)), as_csv(generate_synthetic_fleet(cfg, cfg.seed + 1)));
}

TEST(SyntheticFleet, OtherSeedsKeepTheYardStructure) {
  const auto cfg = reference_config();
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    const auto fleet = generate_synthetic_fleet(cfg, seed);
    EXPECT_EQ(identify_suitable_shipyards(fleet).size(), 14u) << seed;
    EXPECT_EQ(identify_repurpose_candidates(fleet).size(), 4u) << seed;
  }
}

TEST(SyntheticFleet, RecordsAreWellFormed) {
  const auto cfg = reference_config();
  const auto fleet = generate_synthetic_fleet(cfg, cfg.seed);
  std::set<std::string> ids;
  for (const auto& r : fleet) {
    EXPECT_TRUE(ids.insert(r.imo_id).second) << r.imo_id;
    EXPECT_GE(r.gross_tonnage, 100.0);
    EXPECT_GE(r.cargo_capacity_m3, 0.0);
    EXPECT_FALSE(r.builder_yard.empty());
    EXPECT_LE(r.build_year, 2030);
  }
}

TEST(SyntheticFleet, ConfigValidation) {
  auto cfg = reference_config();
  EXPECT_NO_THROW(cfg.validate_or_throw());
  auto bad = cfg;
  bad.window = {2022, 2015};
  EXPECT_THROW(bad.validate_or_throw(), ConfigError);
  bad = cfg;
  bad.membrane_rel_noise = -0.1;
  EXPECT_THROW(bad.validate_or_throw(), ConfigError);
  bad = cfg;
  bad.size_ranges[VesselType::crude_oil] = {10.0, 5.0};
  EXPECT_THROW(bad.validate_or_throw(), ConfigError);
  EXPECT_THROW(generator_config_from_json(nlohmann::json::parse(R"({"yards": [{"country": "KR"}]})")), ConfigError);
  EXPECT_THROW(generator_config_from_json(nlohmann::json::parse(R"({"yards": [{"id": "A", "country": "KR", "targets": {"steel": 1}}]})")),
               ConfigError);
  EXPECT_THROW(load_generator_config("/nonexistent/gen.json"), IoError);
}
