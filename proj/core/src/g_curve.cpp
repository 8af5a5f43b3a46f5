// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/g_curve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace serieslab {

GCurve::GCurve(std::vector<GBreak> breakpoints, double asymptote)
    : breaks_(std::move(breakpoints)), asymptote_(asymptote) {
  if (breaks_.empty()) throw std::invalid_argument("GCurve: no breakpoints");
  if (breaks_.front().t != 0.0 || breaks_.front().g != 0.0)
    throw std::invalid_argument("GCurve: curve must start at (0, 0)");
  double prev_t = -1.0, prev_slope = 1.0 + 1e-12;
  for (const GBreak& b : breaks_) {
    if (b.t <= prev_t) throw std::invalid_argument("GCurve: breakpoints must be increasing");
    if (b.right_slope < -1e-12 || b.right_slope > 1.0 + 1e-12)
      throw std::invalid_argument("GCurve: slopes must lie in [0, 1]");
    if (b.right_slope > prev_slope + 1e-9)
      throw std::invalid_argument("GCurve: slopes must be nonincreasing (concavity)");
    prev_t = b.t;
    prev_slope = b.right_slope;
  }
}

double GCurve::operator()(double t) const {
  if (t <= 0.0) return 0.0;
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), t,
                             [](double x, const GBreak& b) { return x < b.t; });
  const GBreak& b = *std::prev(it);
  return b.g + b.right_slope * (t - b.t);
}

GCurve g_from_ecdf(const StepDistribution& f) {
  std::vector<GBreak> breaks;
  breaks.reserve(f.jumps().size() + 1);
  double g = 0.0;
  double t = 0.0;
  double cum = 0.0;
  if (!f.jumps().empty() && f.jumps().front().value == 0.0) {
    cum = f.jumps().front().cumulative;
    breaks.push_back({0.0, 0.0, 1.0 - cum});
  } else {
    breaks.push_back({0.0, 0.0, 1.0});
  }
  for (const Jump& j : f.jumps()) {
    if (j.value == 0.0) continue;
    g += (1.0 - cum) * (j.value - t);
    t = j.value;
    cum = j.cumulative;
    breaks.push_back({t, g, 1.0 - cum});
  }
  const double asym = f.total_mass() >= 1.0 - 1e-12
                          ? g
                          : std::numeric_limits<double>::infinity();
  return GCurve(std::move(breaks), asym);
}

}  // namespace serieslab
