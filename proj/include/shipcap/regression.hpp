#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <string>
#include <vector>

#include "shipcap/error.hpp"

namespace shipcap {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

enum class FitModel { linear, power };

// linear: y = slope_or_scale * x + intercept_or_exponent
// power:  y = slope_or_scale * x ^ intercept_or_exponent
struct RegressionFit {
  FitModel model = FitModel::linear;
  double slope_or_scale = 0.0;
  double intercept_or_exponent = 0.0;
  // Pearson r; for the power model it is computed on log-log coordinates.
  double correlation = 0.0;
  std::size_t n_points = 0;

  double predict(double x) const {
    return model == FitModel::linear ? slope_or_scale * x + intercept_or_exponent
                                     : slope_or_scale * std::pow(x, intercept_or_exponent);
  }
};

namespace detail {

// Ordinary least squares on centred sums; returns {slope, intercept, r}.
struct OlsResult {
  double slope;
  double intercept;
  double r;
};

inline OlsResult ols(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = xs.size();
  if (n < 2) throw FitError("regression needs at least 2 points, got " + std::to_string(n));
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  // relative to the magnitude of x so that large-valued inputs are not misjudged
  const double scale = std::max(1.0, mx * mx);
  if (!(sxx > 1e-12 * scale * static_cast<double>(n))) {
    throw FitError("regression input has no variance in x");
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;
  double r = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 1.0;
  if (r > 1.0) r = 1.0;
  if (r < -1.0) r = -1.0;
  return {slope, intercept, r};
}

}  // namespace detail

inline RegressionFit fit_linear(std::span<const Point> points) {
  std::vector<double> xs, ys;
  xs.reserve(points.size());
  ys.reserve(points.size());
  for (const auto& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const auto r = detail::ols(xs, ys);
  return {FitModel::linear, r.slope, r.intercept, r.r, points.size()};
}

inline RegressionFit fit_power(std::span<const Point> points) {
  std::vector<double> lx, ly;
  lx.reserve(points.size());
  ly.reserve(points.size());
  for (const auto& p : points) {
    if (!(p.x > 0.0) || !(p.y > 0.0)) throw FitError("power fit requires strictly positive coordinates");
    lx.push_back(std::log(p.x));
    ly.push_back(std::log(p.y));
  }
  const auto r = detail::ols(lx, ly);
  return {FitModel::power, std::exp(r.intercept), r.slope, r.r, points.size()};
}

struct ResidualSummary {
  double rms = 0.0;
  double max_abs = 0.0;
  double mean = 0.0;
};

inline ResidualSummary residual_summary(const RegressionFit& fit, std::span<const Point> points) {
  ResidualSummary s;
  if (points.empty()) return s;
  double sq = 0.0;
  for (const auto& p : points) {
    const double e = p.y - fit.predict(p.x);
    sq += e * e;
    s.mean += e;
    s.max_abs = std::max(s.max_abs, std::abs(e));
  }
  const auto n = static_cast<double>(points.size());
  s.rms = std::sqrt(sq / n);
  s.mean /= n;
  return s;
}

}  // namespace shipcap
