// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#include "serieslab/intensity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace serieslab {

IntensityReport intensity_report(const GCurve& g) {
  if (!std::isfinite(g.asymptote()))
    throw std::invalid_argument("intensity_report: curve has unbounded tail (source mass < 1)");

  const auto breaks = g.breakpoints();
  std::vector<double> candidates;
  candidates.reserve(2 * breaks.size() + 2);
  for (std::size_t i = 0; i < breaks.size(); ++i) {
    candidates.push_back(breaks[i].t);
    const double s = breaks[i].right_slope;
    if (s > 0.0 && s < 1.0) {
      const double tc = -std::log(s);
      const double hi = i + 1 < breaks.size() ? breaks[i + 1].t
                                              : std::numeric_limits<double>::infinity();
      if (tc > breaks[i].t && tc < hi) candidates.push_back(tc);
    }
  }
  std::sort(candidates.begin(), candidates.end());

  IntensitySide rep, att;
  auto offer = [](IntensitySide& side, double value, double t) {
    if (value > side.intensity) {
      side.intensity = value;
      side.distance = t;
    }
  };
  for (double t : candidates) {
    if (t <= 0.0) continue;
    const double d = g(t) - exponential_cdf(t);
    offer(rep, d, t);
    offer(att, -d, t);
  }
  // Flat tail: D decreases toward asymptote-1 (no new repelling), while -D
  // increases toward 1-asymptote, approached but never attained.
  if (g.tail_slope() == 0.0)
    offer(att, 1.0 - g.asymptote(), std::numeric_limits<double>::infinity());

  if (rep.intensity <= 0.0) rep = IntensitySide{};
  if (att.intensity <= 0.0) att = IntensitySide{};
  return IntensityReport{rep, att};
}

}  // namespace serieslab
