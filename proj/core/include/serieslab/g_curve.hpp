// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "serieslab/step_distribution.hpp"

namespace serieslab {

struct GBreak {
  double t;
  double g;            // curve value at t
  double right_slope;  // slope on [t, next t), in [0, 1]
};

/// The integrated survival function G(t) = integral over [0, t] of 1-F(s),
/// kept as an exact piecewise-linear object. G is nondecreasing and
/// concave with G(0) = 0; for a mean-1 source distribution
/// G(t) <= min(t, 1) with equality exactly for the unit step at 1
/// (periodic gaps). The curve flattens to its asymptote (the source mean)
/// once F has exhausted its mass.
class GCurve {
 public:
  GCurve(std::vector<GBreak> breakpoints, double asymptote);

  double operator()(double t) const;
  std::span<const GBreak> breakpoints() const { return breaks_; }

  /// G(inf); equals the mean of the source distribution, infinite when the
  /// source carries mass beyond its finite jumps.
  double asymptote() const { return asymptote_; }

  double tail_slope() const { return breaks_.back().right_slope; }

 private:
  std::vector<GBreak> breaks_;
  double asymptote_;
};

/// Exact integration of 1-F: breakpoints at t = 0 and at every jump of F.
GCurve g_from_ecdf(const StepDistribution& f);

}  // namespace serieslab
