#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "shipcap/fleet.hpp"
#include "shipcap/regression.hpp"
#include "shipcap/synthetic.hpp"
#include "support.hpp"

using namespace shipcap;
using testsupport::rel;

namespace {

std::vector<Point> exact_linear(double slope, double intercept) {
  std::vector<Point> pts;
  for (double x = 140'000.0; x <= 180'000.0; x += 2'500.0) pts.push_back({x, slope * x + intercept});
  return pts;
}

std::vector<Point> exact_power(double scale, double exponent) {
  std::vector<Point> pts;
  for (double x = 3'000.0; x <= 95'000.0; x *= 1.3) pts.push_back({x, scale * std::pow(x, exponent)});
  return pts;
}

std::vector<VesselRecord> reference_fleet() {
  const auto cfg = load_generator_config((testsupport::config_dir() / "fleet_reference.json").string());
  return generate_synthetic_fleet(cfg, cfg.seed);
}

}  // namespace

TEST(FitLinear, RecoversMembraneCoefficientsFromExactInput) {
  const auto fit = fit_linear(exact_linear(0.3, 36'087.8));
  EXPECT_LT(rel(fit.slope_or_scale, 0.3), 1e-9);
  EXPECT_LT(rel(fit.intercept_or_exponent, 36'087.8), 1e-9);
  EXPECT_NEAR(fit.correlation, 1.0, 1e-12);
  EXPECT_EQ(fit.model, FitModel::linear);
}

TEST(FitPower, RecoversIndependentTankCoefficientsFromExactInput) {
  const auto fit = fit_power(exact_power(126.97, 0.48));
  EXPECT_LT(rel(fit.slope_or_scale, 126.97), 1e-9);
  EXPECT_LT(rel(fit.intercept_or_exponent, 0.48), 1e-9);
  EXPECT_NEAR(fit.correlation, 1.0, 1e-12);
}

TEST(FitLinear, TwoPointsDefineTheLine) {
  const std::vector<Point> pts{{1.0, 3.0}, {3.0, 7.0}};
  const auto fit = fit_linear(pts);
  EXPECT_DOUBLE_EQ(fit.slope_or_scale, 2.0);
  EXPECT_DOUBLE_EQ(fit.intercept_or_exponent, 1.0);
}

TEST(FitLinear, TooFewPoints) {
  const std::vector<Point> one{{160'000.0, 84'000.0}};
  EXPECT_THROW(fit_linear(one), FitError);
  EXPECT_THROW(fit_linear(std::vector<Point>{}), FitError);
}

TEST(FitLinear, ErrorMessageReportsPointCount) {
  const std::vector<Point> one{{160'000.0, 84'000.0}};
  try {
    fit_linear(one);
    FAIL();
  } catch (const FitError& e) {
    EXPECT_NE(std::string(e.what()).find("got 1"), std::string::npos);
  }
}

TEST(FitLinear, ConstantXHasNoVariance) {
  const std::vector<Point> pts{{160'000.0, 84'000.0}, {160'000.0, 85'000.0}, {160'000.0, 83'000.0}};
  EXPECT_THROW(fit_linear(pts), FitError);
}

TEST(FitPower, NonPositiveCoordinatesRejected) {
  const std::vector<Point> pts{{0.0, 1.0}, {2.0, 3.0}};
  EXPECT_THROW(fit_power(pts), FitError);
  const std::vector<Point> neg{{1.0, -1.0}, {2.0, 3.0}};
  EXPECT_THROW(fit_power(neg), FitError);
}

TEST(FitLinear, ResidualsAreOrthogonalToRegressor) {
  SplitRng rng(7);
  std::vector<Point> pts;
  for (int i = 0; i < 200; ++i) {
    const double x = rng.uniform(100.0, 200.0);
    pts.push_back({x, 3.0 * x - 20.0 + rng.normal(0.0, 15.0)});
  }
  const auto fit = fit_linear(pts);
  double sum_e = 0.0, sum_ex = 0.0, scale = 0.0;
  for (const auto& p : pts) {
    const double e = p.y - fit.predict(p.x);
    sum_e += e;
    sum_ex += e * p.x;
    scale += std::abs(p.y * p.x);
  }
  EXPECT_NEAR(sum_e, 0.0, 1e-8 * pts.size());
  EXPECT_LT(std::abs(sum_ex) / scale, 1e-12);
}

TEST(FitLinear, InvariantUnderPointOrder) {
  auto pts = exact_linear(0.31, 35'000.0);
  pts[3].y += 500.0;
  const auto a = fit_linear(pts);
  std::reverse(pts.begin(), pts.end());
  const auto b = fit_linear(pts);
  EXPECT_NEAR(a.slope_or_scale, b.slope_or_scale, 1e-12);
  EXPECT_NEAR(a.intercept_or_exponent, b.intercept_or_exponent, 1e-6);
}

TEST(FitLinear, SeededNoisySampleRecoversSlope) {
  SplitRng rng(42);
  std::vector<Point> pts;
  for (int i = 0; i < 300; ++i) {
    const double v = std::clamp(rng.normal(170'000.0, 7'000.0), 140'000.0, 180'000.0);
    pts.push_back({v, (0.3 * v + 36'087.8) * (1.0 + rng.normal(0.0, 0.012))});
  }
  const auto fit = fit_linear(pts);
  EXPECT_NEAR(fit.slope_or_scale, 0.3, 0.02);
  EXPECT_GE(fit.correlation, 0.85);
}

TEST(FitPower, SeededNoisySampleRecoversExponent) {
  SplitRng rng(43);
  std::vector<Point> pts;
  for (int i = 0; i < 300; ++i) {
    const double v = rng.uniform(3'000.0, 93'000.0);
    pts.push_back({v, 126.97 * std::pow(v, 0.48) * std::exp(rng.normal(0.0, 0.05))});
  }
  const auto fit = fit_power(pts);
  EXPECT_NEAR(fit.intercept_or_exponent, 0.48, 0.03);
  EXPECT_GE(fit.correlation, 0.95);
}

TEST(ReferenceFleetSamples, MembraneCarriersRecoverLinearEffort) {
  const auto fleet = reference_fleet();
  const auto pts = membrane_lng_sample(fleet);
  ASSERT_GT(pts.size(), 100u);
  for (const auto& p : pts) EXPECT_GE(p.x, 140'000.0);
  const auto fit = fit_linear(pts);
  EXPECT_NEAR(fit.slope_or_scale, 0.3, 0.02);
  EXPECT_GE(fit.correlation, 0.85);
}

TEST(ReferenceFleetSamples, IndependentTanksRecoverPowerEffort) {
  const auto fleet = reference_fleet();
  const auto fit = fit_power(independent_tank_sample(fleet));
  EXPECT_NEAR(fit.intercept_or_exponent, 0.48, 0.03);
  EXPECT_GE(fit.correlation, 0.95);
}

TEST(ResidualSummary, ExactFitHasZeroResiduals) {
  const auto pts = exact_linear(0.3, 36'087.8);
  const auto s = residual_summary(fit_linear(pts), pts);
  EXPECT_LT(s.rms, 1e-6);
  EXPECT_LT(s.max_abs, 1e-6);
}
