// Copyright (c) 2026 serieslab contributors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <optional>
#include <string_view>

#include "serieslab/g_curve.hpp"

namespace serieslab {

/// The reference law for unbiased return behavior.
inline double exponential_cdf(double t) { return -std::expm1(-t); }

struct IntensitySide {
  double intensity = 0.0;
  /// Distance achieving the supremum; absent when the intensity is 0,
  /// +inf when the supremum is only approached in the tail limit.
  std::optional<double> distance;
};

/// How far the visits described by a G-curve deviate from the exponential
/// baseline, in both directions:
///
///   repelling  = sup_{t>0} [ G(t) - (1 - e^{-t}) ]
///   attracting = sup_{t>0} [ (1 - e^{-t}) - G(t) ]
///
/// clamped at 0. A curve dominated by min(t, 1) can repel with intensity
/// at most e^{-1} (attained by the periodic curve at t = 1), while
/// attracting can approach 1.
struct IntensityReport {
  IntensitySide repelling;
  IntensitySide attracting;
  static constexpr std::string_view baseline = "exponential";
};

/// Exact supremum extraction. D(t) = G(t) - (1 - e^{-t}) is convex on
/// every linear segment, so per segment the maximum of D sits at an
/// endpoint and the maximum of -D sits at the endpoints or at the interior
/// critical point t* = -ln(slope) when that falls inside the segment. The
/// flat tail beyond the last breakpoint contributes its limit
/// (asymptote - 1 for D, 1 - asymptote for -D). Ties between equal
/// suprema resolve to the smallest distance.
///
/// Requires a finite asymptote (total mass 1 in the source distribution);
/// otherwise D grows without bound and the report is meaningless.
IntensityReport intensity_report(const GCurve& g);

}  // namespace serieslab
